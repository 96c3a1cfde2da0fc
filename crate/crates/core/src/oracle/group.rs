//! Young subgroups `Σ_λ = Σ_{λ_1} × ... × Σ_{λ_l}` as explicit permutation groups.

use std::collections::HashMap;

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::perm::Perm;

#[derive(Clone, Debug)]
pub struct YoungGroup {
    lambda: Composition,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    // mult[g * order + h] = index of g ∘ h
    mult: Vec<u32>,
    inv: Vec<usize>,
    generators: Vec<(usize, usize)>,
    gen_elements: Vec<usize>,
    // spanning tree from the identity: element = gen ∘ parent
    tree: Vec<Option<(usize, usize)>>,
}

impl YoungGroup {
    pub fn new(lambda: &Composition, max_order: usize) -> Result<Self> {
        let order = lambda
            .young_order()
            .filter(|&o| o <= max_order)
            .ok_or_else(|| {
                Error::capacity(
                    format!("group order of Σ_({lambda})"),
                    lambda.young_order().unwrap_or(usize::MAX),
                    max_order,
                )
            })?;
        let n = lambda.total();

        let mut elements = vec![Vec::with_capacity(n)];
        let mut start = 0;
        for &block in lambda.parts() {
            let mut next = Vec::with_capacity(elements.len() * factorial(block));
            let block_perms = permutations(start, block);
            for e in &elements {
                for bp in &block_perms {
                    let mut v = e.clone();
                    v.extend_from_slice(bp);
                    next.push(v);
                }
            }
            elements = next;
            start += block;
        }
        let mut elements: Vec<Perm> = elements
            .into_iter()
            .map(|v| Perm::from_images(v).expect("block permutation"))
            .collect();
        elements.sort();
        debug_assert_eq!(elements.len(), order);

        let index: HashMap<Perm, usize> = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, g)| (g, i))
            .collect();
        let mut mult = vec![0u32; order * order];
        let mut inv = vec![0; order];
        for (i, g) in elements.iter().enumerate() {
            for (j, h) in elements.iter().enumerate() {
                mult[i * order + j] = index[&g.compose(h)] as u32;
            }
            inv[i] = index[&g.inverse()];
        }

        let mut generators = Vec::new();
        let mut start = 0;
        for &block in lambda.parts() {
            for k in start..start + block - 1 {
                generators.push((k, k + 1));
            }
            start += block;
        }
        let gen_elements: Vec<usize> = generators
            .iter()
            .map(|&(a, b)| index[&Perm::transposition(n, a + 1, b + 1)])
            .collect();

        let mut tree = vec![None; order];
        let mut seen = vec![false; order];
        seen[0] = true;
        let mut queue = std::collections::VecDeque::from([0usize]);
        while let Some(g) = queue.pop_front() {
            for (k, &s) in gen_elements.iter().enumerate() {
                let h = mult[s * order + g] as usize;
                if !seen[h] {
                    seen[h] = true;
                    tree[h] = Some((k, g));
                    queue.push_back(h);
                }
            }
        }

        Ok(YoungGroup {
            lambda: lambda.clone(),
            elements,
            index,
            mult,
            inv,
            generators,
            gen_elements,
            tree,
        })
    }

    pub fn lambda(&self) -> &Composition {
        &self.lambda
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn degree(&self) -> usize {
        self.lambda.total()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn index_of(&self, g: &Perm) -> Option<usize> {
        self.index.get(g).copied()
    }

    #[inline]
    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.mult[g * self.order() + h] as usize
    }

    #[inline]
    pub fn inv(&self, g: usize) -> usize {
        self.inv[g]
    }

    /// Coxeter transpositions `(k, k+1)` internal to each block, 0-based.
    pub fn generators(&self) -> &[(usize, usize)] {
        &self.generators
    }

    pub fn generator_elements(&self) -> &[usize] {
        &self.gen_elements
    }

    /// `(generator, parent)` with `element = generator ∘ parent`; `None` for the identity.
    pub fn spanning_tree(&self) -> &[Option<(usize, usize)>] {
        &self.tree
    }

    /// Breadth-first order of elements, identity first.
    pub fn bfs_order(&self) -> Vec<usize> {
        let mut order = vec![0usize];
        let mut i = 0;
        let n = self.order();
        let mut seen = vec![false; n];
        seen[0] = true;
        while i < order.len() {
            let g = order[i];
            for &s in &self.gen_elements {
                let h = self.mul(s, g);
                if !seen[h] {
                    seen[h] = true;
                    order.push(h);
                }
            }
            i += 1;
        }
        order
    }

    /// Group-ring product of coefficient vectors indexed by elements.
    pub fn ring_mul(&self, a: &[u32], b: &[u32], p: crate::field::Prime) -> Vec<u32> {
        let n = self.order();
        let mut acc = vec![0u64; n];
        for (g, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            let row = &self.mult[g * n..(g + 1) * n];
            for (h, &y) in b.iter().enumerate() {
                if y != 0 {
                    acc[row[h] as usize] += x as u64 * y as u64;
                }
            }
        }
        let q = p.get() as u64;
        acc.into_iter().map(|v| (v % q) as u32).collect()
    }
}

fn factorial(k: usize) -> usize {
    (1..=k).product()
}

// all arrangements of {start..start+k}, as image lists for those positions
fn permutations(start: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (start..start + k).collect();
    heap_permute(k, &mut cur, &mut out);
    out
}

fn heap_permute(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(cur.clone());
        return;
    }
    for i in 0..k {
        heap_permute(k - 1, cur, out);
        if k.is_multiple_of(2) {
            cur.swap(i, k - 1);
        } else {
            cur.swap(0, k - 1);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        for (parts, order) in [
            (vec![2], 2),
            (vec![2, 2], 4),
            (vec![3], 6),
            (vec![4], 24),
            (vec![1, 1, 1], 1),
        ] {
            let g = YoungGroup::new(&Composition::new(parts).unwrap(), 1000).unwrap();
            assert_eq!(g.order(), order);
            assert!(g.elements()[0].is_identity());
            assert_eq!(g.bfs_order().len(), order);
        }
    }

    #[test]
    fn capacity_is_enforced() {
        assert!(matches!(
            YoungGroup::new(&Composition::single(7), 1000),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn generators_follow_blocks() {
        let g = YoungGroup::new(&Composition::new(vec![2, 2]).unwrap(), 1000).unwrap();
        assert_eq!(g.generators(), &[(0, 1), (2, 3)]);
        let g = YoungGroup::new(&Composition::single(4), 1000).unwrap();
        assert_eq!(g.generators(), &[(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn inverse_table() {
        let g = YoungGroup::new(&Composition::single(4), 1000).unwrap();
        for a in 0..g.order() {
            assert_eq!(g.mul(a, g.inv(a)), 0);
        }
    }
}
