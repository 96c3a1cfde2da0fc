//! Finite-dimensional modules over `F_p Σ_λ`, given by the action of the
//! Coxeter generators.

use serde::{Deserialize, Serialize};

use super::group::YoungGroup;
use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::field::Prime;
use crate::linalg::{Matrix, Subspace};

/// Generator matrices act on column vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GModuleRep {
    pub p: Prime,
    pub lambda: Composition,
    pub dim: usize,
    pub gens: Vec<Matrix>,
}

impl GModuleRep {
    /// Builds a module, checking invertibility and the Coxeter relations of `Σ_λ`.
    pub fn new(p: Prime, lambda: Composition, dim: usize, gens: Vec<Matrix>) -> Result<Self> {
        let positions = coxeter_positions(&lambda);
        if gens.len() != positions.len() {
            return Err(Error::invalid(format!(
                "Σ_({lambda}) has {} Coxeter generators, got {} matrices",
                positions.len(),
                gens.len()
            )));
        }
        for (k, g) in gens.iter().enumerate() {
            if g.rows() != dim || g.cols() != dim {
                return Err(Error::invalid(format!("generator {k} is not {dim}×{dim}")));
            }
            if !g.mul(g, p).is_identity() {
                return Err(Error::invalid(format!(
                    "generator {k} does not square to the identity"
                )));
            }
        }
        for a in 0..gens.len() {
            for b in a + 1..gens.len() {
                let ab = gens[a].mul(&gens[b], p);
                let adjacent = positions[a].1 == positions[b].0 || positions[b].1 == positions[a].0;
                let power = if adjacent { 3 } else { 2 };
                let mut acc = Matrix::identity(dim);
                for _ in 0..power {
                    acc = acc.mul(&ab, p);
                }
                if !acc.is_identity() {
                    return Err(Error::invalid(format!(
                        "generators {a} and {b} violate the Coxeter relation (s_a s_b)^{power} = 1"
                    )));
                }
            }
        }
        Ok(GModuleRep {
            p,
            lambda,
            dim,
            gens,
        })
    }

    pub fn trivial(p: Prime, lambda: Composition) -> Self {
        let count = coxeter_positions(&lambda).len();
        GModuleRep {
            p,
            lambda,
            dim: 1,
            gens: vec![Matrix::identity(1); count],
        }
    }

    pub fn sign(p: Prime, lambda: Composition) -> Self {
        let count = coxeter_positions(&lambda).len();
        let minus = Matrix::from_rows(&[vec![p.neg(1)]], 1);
        GModuleRep {
            p,
            lambda,
            dim: 1,
            gens: vec![minus; count],
        }
    }

    /// The permutation module on the `n` letters.
    pub fn natural(p: Prime, lambda: Composition) -> Self {
        let n = lambda.total();
        let gens = coxeter_positions(&lambda)
            .into_iter()
            .map(|(a, b)| {
                let mut m = Matrix::identity(n);
                m.set(a, a, 0);
                m.set(b, b, 0);
                m.set(a, b, 1);
                m.set(b, a, 1);
                m
            })
            .collect();
        GModuleRep {
            p,
            lambda,
            dim: n,
            gens,
        }
    }

    /// Contragredient module: generators replaced by inverse transposes.
    pub fn dual(&self) -> Self {
        let gens = self
            .gens
            .iter()
            .map(|g| {
                g.inverse(self.p)
                    .expect("generators are invertible")
                    .transpose()
            })
            .collect();
        GModuleRep {
            p: self.p,
            lambda: self.lambda.clone(),
            dim: self.dim,
            gens,
        }
    }

    /// Change of basis `v ↦ P v`: generators become `P g P^{-1}`.
    pub fn conjugate(&self, change: &Matrix) -> Result<Self> {
        let inv = change
            .inverse(self.p)
            .ok_or_else(|| Error::invalid("change of basis is singular"))?;
        let gens = self
            .gens
            .iter()
            .map(|g| change.mul(g, self.p).mul(&inv, self.p))
            .collect();
        Ok(GModuleRep {
            p: self.p,
            lambda: self.lambda.clone(),
            dim: self.dim,
            gens,
        })
    }

    pub fn direct_sum(&self, other: &GModuleRep) -> Self {
        assert_eq!(self.lambda, other.lambda);
        let dim = self.dim + other.dim;
        let gens = self
            .gens
            .iter()
            .zip(&other.gens)
            .map(|(a, b)| {
                let mut m = Matrix::zeros(dim, dim);
                for i in 0..self.dim {
                    for j in 0..self.dim {
                        m.set(i, j, a.get(i, j));
                    }
                }
                for i in 0..other.dim {
                    for j in 0..other.dim {
                        m.set(self.dim + i, self.dim + j, b.get(i, j));
                    }
                }
                m
            })
            .collect();
        GModuleRep {
            p: self.p,
            lambda: self.lambda.clone(),
            dim,
            gens,
        }
    }

    pub fn tensor(&self, other: &GModuleRep) -> Self {
        assert_eq!(self.lambda, other.lambda);
        let dim = self.dim * other.dim;
        let gens = self
            .gens
            .iter()
            .zip(&other.gens)
            .map(|(a, b)| {
                let mut m = Matrix::zeros(dim, dim);
                for i in 0..self.dim {
                    for j in 0..self.dim {
                        let x = a.get(i, j);
                        if x == 0 {
                            continue;
                        }
                        for k in 0..other.dim {
                            for l in 0..other.dim {
                                m.set(
                                    i * other.dim + k,
                                    j * other.dim + l,
                                    self.p.mul(x, b.get(k, l)),
                                );
                            }
                        }
                    }
                }
                m
            })
            .collect();
        GModuleRep {
            p: self.p,
            lambda: self.lambda.clone(),
            dim,
            gens,
        }
    }

    /// Smallest submodule containing `vectors`, as an echelon basis.
    pub fn span_submodule(&self, vectors: &[Vec<u32>]) -> Subspace {
        let mut space = Subspace::new(self.dim, self.p);
        let mut frontier: Vec<Vec<u32>> = Vec::new();
        for v in vectors {
            if space.insert(v.clone()) {
                frontier.push(v.clone());
            }
        }
        while let Some(v) = frontier.pop() {
            for g in &self.gens {
                let w = g.apply(&v, self.p);
                if space.insert(w.clone()) {
                    frontier.push(w);
                }
            }
        }
        space
    }

    /// The submodule spanned by an invariant subspace, in the echelon basis given.
    pub fn submodule(&self, sub: &Subspace) -> Result<Self> {
        let basis = sub.basis();
        let k = basis.len();
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut m = Matrix::zeros(k, k);
                for (j, b) in basis.iter().enumerate() {
                    let image = g.apply(b, self.p);
                    let coords = coordinates(sub, &image)
                        .ok_or_else(|| Error::invalid("subspace is not invariant"))?;
                    for (i, c) in coords.into_iter().enumerate() {
                        m.set(i, j, c);
                    }
                }
                Ok(m)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GModuleRep {
            p: self.p,
            lambda: self.lambda.clone(),
            dim: k,
            gens,
        })
    }

    /// The quotient by an invariant subspace, using the standard basis
    /// vectors at non-pivot columns as a complement.
    pub fn quotient(&self, sub: &Subspace) -> Result<Self> {
        let pivots = sub.pivots();
        let free: Vec<usize> = (0..self.dim).filter(|c| !pivots.contains(c)).collect();
        let k = free.len();
        let mut gens = Vec::with_capacity(self.gens.len());
        for g in &self.gens {
            let mut m = Matrix::zeros(k, k);
            for (j, &col) in free.iter().enumerate() {
                let image = g.apply(&unit(self.dim, col), self.p);
                let reduced = sub.reduce_owned(image);
                // reduced vector is supported on non-pivot columns only
                for (i, &row) in free.iter().enumerate() {
                    m.set(i, j, reduced[row]);
                }
            }
            gens.push(m);
        }
        let q = GModuleRep {
            p: self.p,
            lambda: self.lambda.clone(),
            dim: k,
            gens,
        };
        // invariance of `sub` is what makes this well defined
        for g in &self.gens {
            for b in sub.basis() {
                if !sub.contains(&g.apply(b, self.p)) {
                    return Err(Error::invalid("subspace is not invariant"));
                }
            }
        }
        Ok(q)
    }

    /// `ρ(g)` for every group element, indexed like `group.elements()`.
    pub fn group_matrices(&self, group: &YoungGroup) -> Result<Vec<Matrix>> {
        self.check_group(group)?;
        let mut out: Vec<Option<Matrix>> = vec![None; group.order()];
        out[0] = Some(Matrix::identity(self.dim));
        let tree = group.spanning_tree();
        for g in group.bfs_order().into_iter().skip(1) {
            let (k, parent) = tree[g].expect("non-identity elements have a parent");
            let m = self.gens[k].mul(out[parent].as_ref().expect("parent precedes child"), self.p);
            out[g] = Some(m);
        }
        Ok(out
            .into_iter()
            .map(|m| m.expect("group is generated"))
            .collect())
    }

    pub(crate) fn check_group(&self, group: &YoungGroup) -> Result<()> {
        if &self.lambda != group.lambda() {
            return Err(Error::invalid(format!(
                "module is over Σ_({}) but the group is Σ_({})",
                self.lambda,
                group.lambda()
            )));
        }
        Ok(())
    }
}

/// Positions `(k, k+1)` of the Coxeter generators of `Σ_λ`, 0-based.
pub fn coxeter_positions(lambda: &Composition) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut start = 0;
    for &block in lambda.parts() {
        for k in start..start + block - 1 {
            out.push((k, k + 1));
        }
        start += block;
    }
    out
}

fn unit(n: usize, i: usize) -> Vec<u32> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

/// Coordinates of `v` in the echelon basis of `sub`, if it lies there.
pub(crate) fn coordinates(sub: &Subspace, v: &[u32]) -> Option<Vec<u32>> {
    let p_rows = sub.basis();
    let mut w = v.to_vec();
    let mut coords = vec![0u32; p_rows.len()];
    for (i, (row, &piv)) in p_rows.iter().zip(sub.pivots()).enumerate() {
        let c = w[piv];
        if c != 0 {
            coords[i] = c;
            crate::linalg::axpy(&mut w, row, sub.prime().neg(c), sub.prime());
        }
    }
    w.iter().all(|&x| x == 0).then_some(coords)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pr(p: u32) -> Prime {
        Prime::new(p).unwrap()
    }

    #[test]
    fn natural_module_satisfies_relations() {
        let lam = Composition::single(4);
        let m = GModuleRep::natural(pr(3), lam.clone());
        assert!(GModuleRep::new(m.p, lam, m.dim, m.gens.clone()).is_ok());
    }

    #[test]
    fn bad_generators_are_rejected() {
        let lam = Composition::single(3);
        let p = pr(5);
        // two distinct reflections that do not satisfy the braid relation
        let a = Matrix::from_rows(&[vec![0, 1], vec![1, 0]], 2);
        let b = Matrix::from_rows(&[vec![1, 0], vec![0, 4]], 2);
        assert!(GModuleRep::new(p, lam.clone(), 2, vec![a.clone(), b]).is_err());
        assert!(GModuleRep::new(p, lam.clone(), 2, vec![a.clone()]).is_err());
        let not_involution = Matrix::from_rows(&[vec![2, 0], vec![0, 1]], 2);
        assert!(GModuleRep::new(p, lam, 2, vec![a, not_involution]).is_err());
    }

    #[test]
    fn group_matrices_form_a_representation() {
        let lam = Composition::single(4);
        let group = YoungGroup::new(&lam, 1000).unwrap();
        let p = pr(2);
        let m = GModuleRep::natural(p, lam);
        let rho = m.group_matrices(&group).unwrap();
        for g in 0..group.order() {
            for h in 0..group.order() {
                assert_eq!(rho[g].mul(&rho[h], p), rho[group.mul(g, h)]);
            }
        }
    }

    #[test]
    fn submodule_and_quotient_of_natural_module() {
        let lam = Composition::single(3);
        let p = pr(3);
        let m = GModuleRep::natural(p, lam);
        // the all-ones line is invariant
        let sub = m.span_submodule(&[vec![1, 1, 1]]);
        assert_eq!(sub.dim(), 1);
        let s = m.submodule(&sub).unwrap();
        assert_eq!(s.dim, 1);
        assert!(s.gens.iter().all(|g| g.is_identity()));
        let q = m.quotient(&sub).unwrap();
        assert_eq!(q.dim, 2);
        assert!(GModuleRep::new(q.p, q.lambda.clone(), q.dim, q.gens.clone()).is_ok());
        assert!(m
            .quotient(&crate::linalg::Subspace::from_vectors(
                3,
                p,
                [vec![1, 0, 0]]
            ))
            .is_err());
    }
}
