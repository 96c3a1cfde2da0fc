//! Independent straightening: expand brackets as commutators in the free
//! associative algebra and solve for Lyndon coordinates.

use std::collections::BTreeMap;

use super::basis::{lyndon_basis, permutation_rank, LieElement, Word};
use super::tree::BracketTree;
use crate::error::{Error, Result};
use crate::field::Prime;
use crate::linalg::Matrix;

/// Expansion of a bracketing as a combination of associative words.
pub fn associative_expansion(t: &BracketTree, p: Prime) -> BTreeMap<Word, u32> {
    match t {
        BracketTree::Leaf(a) => BTreeMap::from([(vec![*a as u8], 1)]),
        BracketTree::Node(l, r) => {
            let a = associative_expansion(l, p);
            let b = associative_expansion(r, p);
            let mut out = BTreeMap::new();
            for (u, &x) in &a {
                for (v, &y) in &b {
                    let c = p.mul(x, y);
                    let mut uv = u.clone();
                    uv.extend_from_slice(v);
                    let mut vu = v.clone();
                    vu.extend_from_slice(u);
                    add(&mut out, uv, c, p);
                    add(&mut out, vu, p.neg(c), p);
                }
            }
            out
        }
    }
}

fn add(out: &mut BTreeMap<Word, u32>, w: Word, c: u32, p: Prime) {
    let e = out.entry(w.clone()).or_insert(0);
    *e = p.add(*e, c);
    if *e == 0 {
        out.remove(&w);
    }
}

fn dense(expansion: &BTreeMap<Word, u32>, width: usize) -> Vec<u32> {
    let mut v = vec![0; width];
    for (w, &c) in expansion {
        v[permutation_rank(w)] = c;
    }
    v
}

/// Lyndon coordinates of `t` found by linear algebra on associative expansions.
pub fn normal_form_by_expansion(t: &BracketTree, n: usize, p: Prime) -> Result<LieElement> {
    t.validate(n)?;
    let basis = lyndon_basis(n)?;
    let width: usize = (1..=n).product();
    let mut rows: Vec<Vec<u32>> = basis
        .iter()
        .map(|b| dense(&associative_expansion(b, p), width))
        .collect();
    rows.push(dense(&associative_expansion(t, p), width));
    let kernel = Matrix::from_rows(&rows, width).left_kernel(p);
    let last = basis.len();
    let relation = kernel
        .iter()
        .find(|k| k[last] != 0)
        .ok_or_else(|| Error::invalid(format!("{t} is not in the span of the Lyndon basis")))?;
    // t = -(1/c) Σ k_i b_i
    let scale = p.neg(p.inv(relation[last]));
    let mut out = LieElement::zero(n, p);
    for (i, &k) in relation[..last].iter().enumerate() {
        out.add_term(i, p.mul(k, scale));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commutator_expansion() {
        let p = Prime::new(3).unwrap();
        let t: BracketTree = "[1,[2,3]]".parse().unwrap();
        let e = associative_expansion(&t, p);
        assert_eq!(e.len(), 4);
        assert_eq!(e[&vec![1, 2, 3]], 1);
        assert_eq!(e[&vec![3, 2, 1]], 1);
        assert_eq!(e[&vec![1, 3, 2]], 2);
    }

    #[test]
    fn jacobi_example() {
        let p = Prime::new(7).unwrap();
        let t: BracketTree = "[[1,2],3]".parse().unwrap();
        let nf = normal_form_by_expansion(&t, 3, p).unwrap();
        assert_eq!(nf.coeffs, BTreeMap::from([(0, 1), (1, 1)]));
    }
}
