use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Perm;

/// A bracket monomial, written fully parenthesized as `[1,[2,3]]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum BracketTree {
    Leaf(usize),
    Node(Box<BracketTree>, Box<BracketTree>),
}

impl BracketTree {
    pub fn leaf(a: usize) -> Self {
        BracketTree::Leaf(a)
    }

    pub fn bracket(left: BracketTree, right: BracketTree) -> Self {
        BracketTree::Node(Box::new(left), Box::new(right))
    }

    /// Leaves from left to right.
    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<usize>) {
        match self {
            BracketTree::Leaf(a) => out.push(*a),
            BracketTree::Node(l, r) => {
                l.collect_leaves(out);
                r.collect_leaves(out);
            }
        }
    }

    pub fn arity(&self) -> usize {
        match self {
            BracketTree::Leaf(_) => 1,
            BracketTree::Node(l, r) => l.arity() + r.arity(),
        }
    }

    /// Checks that every letter of `1..=n` occurs exactly once.
    pub fn validate(&self, n: usize) -> Result<()> {
        let mut leaves = self.leaves();
        leaves.sort_unstable();
        if leaves != (1..=n).collect::<Vec<_>>() {
            return Err(Error::invalid(format!(
                "bracketing {self} is not multilinear on 1..={n}"
            )));
        }
        Ok(())
    }

    /// Renames each letter `a` to `σ(a)`.
    pub fn permuted(&self, sigma: &Perm) -> BracketTree {
        match self {
            BracketTree::Leaf(a) => BracketTree::Leaf(sigma.apply(a - 1) + 1),
            BracketTree::Node(l, r) => BracketTree::bracket(l.permuted(sigma), r.permuted(sigma)),
        }
    }
}

impl fmt::Display for BracketTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BracketTree::Leaf(a) => write!(f, "{a}"),
            BracketTree::Node(l, r) => write!(f, "[{l},{r}]"),
        }
    }
}

impl FromStr for BracketTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let tokens: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let tree = parse(&tokens, &mut pos)?;
        if pos != tokens.len() {
            return Err(Error::invalid(format!(
                "trailing input in bracketing {s:?}"
            )));
        }
        Ok(tree)
    }
}

fn parse(t: &[char], pos: &mut usize) -> Result<BracketTree> {
    match t.get(*pos) {
        Some('[') => {
            *pos += 1;
            let left = parse(t, pos)?;
            expect(t, pos, ',')?;
            let right = parse(t, pos)?;
            expect(t, pos, ']')?;
            Ok(BracketTree::bracket(left, right))
        }
        Some(c) if c.is_ascii_digit() => {
            let start = *pos;
            while t.get(*pos).is_some_and(|c| c.is_ascii_digit()) {
                *pos += 1;
            }
            let digits: String = t[start..*pos].iter().collect();
            let a: usize = digits
                .parse()
                .map_err(|_| Error::invalid(format!("bad letter {digits}")))?;
            if a == 0 {
                return Err(Error::invalid("letters start at 1"));
            }
            Ok(BracketTree::Leaf(a))
        }
        Some(c) => Err(Error::invalid(format!("unexpected {c:?} in bracketing"))),
        None => Err(Error::invalid("unexpected end of bracketing")),
    }
}

fn expect(t: &[char], pos: &mut usize, want: char) -> Result<()> {
    if t.get(*pos) == Some(&want) {
        *pos += 1;
        Ok(())
    } else {
        Err(Error::invalid(format!(
            "expected {want:?} at position {pos}"
        )))
    }
}

impl TryFrom<String> for BracketTree {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<BracketTree> for String {
    fn from(t: BracketTree) -> String {
        t.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_round_trip() {
        for s in ["1", "[1,2]", "[1,[2,3]]", "[[1,3],2]", "[[10,2],[3,[4,1]]]"] {
            let t: BracketTree = s.parse().unwrap();
            assert_eq!(t.to_string(), s);
        }
        let t: BracketTree = " [ 1 , [2, 3] ] ".parse().unwrap();
        assert_eq!(t.to_string(), "[1,[2,3]]");
    }

    #[test]
    fn rejects_malformed() {
        for s in ["", "[1,2", "[1 2]", "[0,1]", "[1,2]]", "x"] {
            assert!(s.parse::<BracketTree>().is_err(), "{s}");
        }
    }

    #[test]
    fn multilinearity() {
        let t: BracketTree = "[[1,3],2]".parse().unwrap();
        assert!(t.validate(3).is_ok());
        assert!(t.validate(4).is_err());
        let t: BracketTree = "[1,1]".parse().unwrap();
        assert!(t.validate(2).is_err());
    }

    #[test]
    fn relabel() {
        let t: BracketTree = "[[1,3],2]".parse().unwrap();
        let s = Perm::parse_cycles(3, "(2 3)").unwrap();
        assert_eq!(t.permuted(&s).to_string(), "[[1,2],3]");
    }
}
