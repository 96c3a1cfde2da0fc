use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::tree::BracketTree;
use crate::error::{Error, Result};
use crate::field::Prime;

/// Largest arity for which a basis is listed.
pub const MAX_BASIS_ARITY: usize = 10;

pub(crate) type Word = Vec<u8>;

fn check_arity(n: usize, limit: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::invalid("arity must be at least 1"));
    }
    if n > limit {
        return Err(Error::capacity("Lie module arity", n, limit));
    }
    Ok(())
}

/// Multilinear Lyndon words on `1..=n` in lexicographic order: `1` followed
/// by each arrangement of `2..=n`.
pub fn lyndon_words(n: usize) -> Result<Vec<Word>> {
    check_arity(n, MAX_BASIS_ARITY)?;
    let rest: Vec<u8> = (2..=n as u8).collect();
    let mut out = Vec::new();
    let mut current = vec![1u8];
    arrange(&rest, &mut vec![false; rest.len()], &mut current, &mut out);
    Ok(out)
}

fn arrange(letters: &[u8], used: &mut [bool], current: &mut Word, out: &mut Vec<Word>) {
    if current.len() == letters.len() + 1 {
        out.push(current.clone());
        return;
    }
    for i in 0..letters.len() {
        if !used[i] {
            used[i] = true;
            current.push(letters[i]);
            arrange(letters, used, current, out);
            current.pop();
            used[i] = false;
        }
    }
}

/// Split point of the standard factorization: the longest proper Lyndon
/// suffix of a word with distinct letters starts at its smallest non-initial letter.
pub(crate) fn split_point(w: &[u8]) -> usize {
    debug_assert!(w.len() >= 2);
    (1..w.len()).min_by_key(|&i| w[i]).expect("word has a tail")
}

/// Standard bracketing of a Lyndon word with distinct letters.
pub fn standard_bracketing(w: &[u8]) -> BracketTree {
    if w.len() == 1 {
        return BracketTree::leaf(w[0] as usize);
    }
    let k = split_point(w);
    BracketTree::bracket(standard_bracketing(&w[..k]), standard_bracketing(&w[k..]))
}

/// The basis of `Lie(n)`: standard bracketings of the multilinear Lyndon words.
pub fn lyndon_basis(n: usize) -> Result<Vec<BracketTree>> {
    Ok(lyndon_words(n)?
        .iter()
        .map(|w| standard_bracketing(w))
        .collect())
}

/// Position of a multilinear Lyndon word in [`lyndon_words`]: the
/// lexicographic rank of its tail as an arrangement of `2..=n`.
pub(crate) fn lyndon_index(w: &[u8]) -> usize {
    permutation_rank(&w[1..])
}

/// Lexicographic rank of a sequence of distinct values among all arrangements of them.
pub(crate) fn permutation_rank(w: &[u8]) -> usize {
    let m = w.len();
    let mut rank = 0;
    for i in 0..m {
        let smaller_later = w[i + 1..].iter().filter(|&&x| x < w[i]).count();
        rank = rank * (m - i) + smaller_later;
    }
    rank
}

/// An element of `Lie(n)` in Lyndon coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LieElement {
    pub n: usize,
    pub p: Prime,
    /// Basis index → nonzero residue.
    pub coeffs: BTreeMap<usize, u32>,
}

impl LieElement {
    pub fn zero(n: usize, p: Prime) -> Self {
        LieElement {
            n,
            p,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis(n: usize, p: Prime, index: usize) -> Self {
        let mut e = LieElement::zero(n, p);
        e.coeffs.insert(index, 1);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, index: usize) -> u32 {
        self.coeffs.get(&index).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, index: usize, c: u32) {
        let v = self.p.add(self.coefficient(index), c);
        if v == 0 {
            self.coeffs.remove(&index);
        } else {
            self.coeffs.insert(index, v);
        }
    }

    pub fn add(&self, other: &LieElement) -> LieElement {
        let mut out = self.clone();
        for (&i, &c) in &other.coeffs {
            out.add_term(i, c);
        }
        out
    }

    /// Dense coordinate vector of length `(n-1)!`.
    pub fn to_dense(&self, dim: usize) -> Vec<u32> {
        let mut v = vec![0; dim];
        for (&i, &c) in &self.coeffs {
            v[i] = c;
        }
        v
    }
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let words = lyndon_words(self.n).map_err(|_| fmt::Error)?;
        for (k, (&i, &c)) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if c != 1 {
                write!(f, "{c}*")?;
            }
            write!(f, "{}", standard_bracketing(&words[i]))?;
        }
        Ok(())
    }
}

/// Combination of Lyndon words with coefficients in `F_p`.
type Poly = BTreeMap<Word, u32>;

/// Rewrites bracketings into Lyndon coordinates using antisymmetry and the
/// Jacobi identity, memoizing brackets of basis elements.
pub struct Straightener {
    p: Prime,
    memo: HashMap<(Word, Word), Poly>,
}

impl Straightener {
    pub fn new(p: Prime) -> Self {
        Straightener {
            p,
            memo: HashMap::new(),
        }
    }

    pub fn normal_form(&mut self, t: &BracketTree, n: usize) -> Result<LieElement> {
        check_arity(n, MAX_BASIS_ARITY)?;
        t.validate(n)?;
        let poly = self.tree_poly(t);
        let mut out = LieElement::zero(n, self.p);
        for (w, c) in poly {
            out.add_term(lyndon_index(&w), c);
        }
        Ok(out)
    }

    fn tree_poly(&mut self, t: &BracketTree) -> Poly {
        match t {
            BracketTree::Leaf(a) => Poly::from([(vec![*a as u8], 1)]),
            BracketTree::Node(l, r) => {
                let a = self.tree_poly(l);
                let b = self.tree_poly(r);
                let mut out = Poly::new();
                for (u, &x) in &a {
                    for (v, &y) in &b {
                        let c = self.p.mul(x, y);
                        let br = self.bracket(u, v);
                        accumulate(&mut out, &br, c, self.p);
                    }
                }
                out
            }
        }
    }

    /// `[P_u, P_v]` for Lyndon words `u`, `v` on disjoint letters.
    fn bracket(&mut self, u: &[u8], v: &[u8]) -> Poly {
        let key = (u.to_vec(), v.to_vec());
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let p = self.p;
        let out = if u > v {
            let mut out = Poly::new();
            let br = self.bracket(v, u);
            accumulate(&mut out, &br, p.neg(1), p);
            out
        } else if u.len() == 1 || u[split_point(u)..] > *v {
            let mut w = u.to_vec();
            w.extend_from_slice(v);
            Poly::from([(w, 1)])
        } else {
            // [[u1,u2],v] = [u1,[u2,v]] + [[u1,v],u2]
            let k = split_point(u);
            let (u1, u2) = (&u[..k], &u[k..]);
            let mut out = Poly::new();
            for (w, c) in self.bracket(u2, v) {
                let br = self.bracket(u1, &w);
                accumulate(&mut out, &br, c, p);
            }
            for (w, c) in self.bracket(u1, v) {
                let br = self.bracket(&w, u2);
                accumulate(&mut out, &br, c, p);
            }
            out
        };
        self.memo.insert(key, out.clone());
        out
    }
}

fn accumulate(out: &mut Poly, terms: &Poly, c: u32, p: Prime) {
    if c == 0 {
        return;
    }
    for (w, &x) in terms {
        let e = out.entry(w.clone()).or_insert(0);
        *e = p.add(*e, p.mul(x, c));
        if *e == 0 {
            out.remove(w);
        }
    }
}

/// Lyndon coordinates of a multilinear bracketing on `1..=n`.
pub fn normal_form(t: &BracketTree, n: usize, p: Prime) -> Result<LieElement> {
    Straightener::new(p).normal_form(t, n)
}
