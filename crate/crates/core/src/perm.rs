//! Permutations of `{1..n}`, stored as 0-based image vectors.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::invalid(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Perm(images))
    }

    /// The transposition of letters `a` and `b` (1-based).
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut v: Vec<usize> = (0..n).collect();
        v.swap(a - 1, b - 1);
        Perm(v)
    }

    /// Parses cycle notation such as `(1 2)(3 4)`; letters are 1-based.
    pub fn parse_cycles(n: usize, text: &str) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        let mut rest = text.trim();
        while !rest.is_empty() {
            let open = rest.strip_prefix('(').ok_or_else(|| {
                Error::invalid(format!("expected '(' in cycle notation `{text}`"))
            })?;
            let close = open
                .find(')')
                .ok_or_else(|| Error::invalid(format!("unbalanced cycle in `{text}`")))?;
            let body = &open[..close];
            rest = open[close + 1..].trim_start();
            let cycle: Vec<usize> = body
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>()
                        .ok()
                        .filter(|&v| (1..=n).contains(&v))
                        .ok_or_else(|| Error::invalid(format!("bad letter `{s}` for n = {n}")))
                })
                .collect::<Result<_>>()?;
            for &c in &cycle {
                if std::mem::replace(&mut seen[c - 1], true) {
                    return Err(Error::invalid(format!("letter {c} repeated in `{text}`")));
                }
            }
            for (k, &c) in cycle.iter().enumerate() {
                images[c - 1] = cycle[(k + 1) % cycle.len()] - 1;
            }
        }
        Ok(Perm(images))
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// Image of the 0-based point `i`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// `self ∘ other`, acting on the right first.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree());
        Perm(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.0[start] == start {
                continue;
            }
            let mut cyc = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cyc.push(i + 1);
                i = self.0[i];
            }
            out.push(cyc);
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_notation_roundtrip() {
        let p = Perm::parse_cycles(4, "(1 2)(3 4)").unwrap();
        assert_eq!(p.images(), &[1, 0, 3, 2]);
        assert_eq!(p.to_string(), "(1 2)(3 4)");
        assert_eq!(Perm::parse_cycles(3, "").unwrap(), Perm::identity(3));
        assert_eq!(
            Perm::parse_cycles(3, "(1 2 3)").unwrap().to_string(),
            "(1 2 3)"
        );
    }

    #[test]
    fn cycle_notation_errors() {
        assert!(Perm::parse_cycles(3, "(1 4)").is_err());
        assert!(Perm::parse_cycles(3, "(1 2)(2 3)").is_err());
        assert!(Perm::parse_cycles(3, "1 2").is_err());
        assert!(Perm::parse_cycles(3, "(1 2").is_err());
    }

    #[test]
    fn compose_acts_right_first() {
        let a = Perm::parse_cycles(3, "(1 2)").unwrap();
        let b = Perm::parse_cycles(3, "(2 3)").unwrap();
        // (1 2)(2 3) sends 2 -> 3 -> 3, 3 -> 2 -> 1, 1 -> 1 -> 2
        assert_eq!(a.compose(&b).to_string(), "(1 2 3)");
        assert!(a.compose(&a.inverse()).is_identity());
    }
}
