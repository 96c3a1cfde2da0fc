//! Completely inadmissible Dyer-Lashof words and the dimension series of
//! `H_*(Σ_{p^r}, Lie(p^r))` they index.
//!
//! A word `β^{ε_1} Q^{s_1} ... β^{ε_r} Q^{s_r} u` sits in internal degree
//! `1 + Σ s_j` (p = 2) or `1 + Σ (2 s_j (p-1) - ε_j)` (p odd). Its homology
//! degree removes the `(1 + r)`-fold suspension.
//!
//! Counting is done two ways: [`enumerate_words`] lists the words explicitly,
//! and [`dimension_series`] counts them with a coin-change recurrence. Tests
//! hold the two against each other.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Partial, Result};
use crate::field::Prime;

/// Upper bound on `m_max` accepted by [`dimension_series`].
pub const MAX_SERIES_DEGREE: u64 = 100_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
pub struct DLWord {
    pub s: Vec<u64>,
    pub eps: Vec<u8>,
}

impl DLWord {
    pub fn new(s: Vec<u64>, eps: Vec<u8>) -> Self {
        DLWord { s, eps }
    }

    /// A word with no Bocksteins.
    pub fn plain(s: Vec<u64>) -> Self {
        let eps = vec![0; s.len()];
        DLWord { s, eps }
    }

    pub fn empty() -> Self {
        DLWord::default()
    }

    pub fn len(&self) -> usize {
        self.s.len()
    }

    pub fn is_empty(&self) -> bool {
        self.s.is_empty()
    }

    pub fn validate(&self, p: Prime) -> Result<()> {
        if self.s.len() != self.eps.len() {
            return Err(Error::invalid(format!(
                "word has {} exponents but {} Bockstein flags",
                self.s.len(),
                self.eps.len()
            )));
        }
        if let Some(j) = self.s.iter().position(|&s| s == 0) {
            return Err(Error::invalid(format!(
                "exponent s_{} is not positive",
                j + 1
            )));
        }
        if let Some(j) = self.eps.iter().position(|&e| e > 1) {
            return Err(Error::invalid(format!(
                "Bockstein flag ε_{} is not a bit",
                j + 1
            )));
        }
        if p.is_two() && self.eps.iter().any(|&e| e != 0) {
            return Err(Error::invalid("Bockstein flags must vanish for p = 2"));
        }
        Ok(())
    }
}

impl fmt::Display for DLWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (s, e) in self.s.iter().zip(&self.eps) {
            if *e == 1 {
                write!(f, "β")?;
            }
            write!(f, "Q^{s} ")?;
        }
        write!(f, "u")
    }
}

/// Checks the strict inequalities `s_j > p s_{j+1} - ε_{j+1}` (and `s_r ≥ 1`).
pub fn is_admissible(w: &DLWord, p: Prime) -> Result<bool> {
    w.validate(p)?;
    let q = p.get() as u128;
    Ok(w.s
        .windows(2)
        .zip(w.eps.iter().skip(1))
        .all(|(pair, &e)| (pair[0] as u128) + (e as u128) > q * pair[1] as u128))
}

/// Internal degree of the word, counting `u` in degree one.
pub fn word_degree(w: &DLWord, p: Prime) -> Result<u64> {
    w.validate(p)?;
    checked_word_degree(&w.s, &w.eps, p)
        .ok_or_else(|| Error::capacity("word degree", usize::MAX, u64::MAX as usize))
}

fn checked_word_degree(s: &[u64], eps: &[u8], p: Prime) -> Option<u64> {
    let mut deg: u64 = 1;
    if p.is_two() {
        for &x in s {
            deg = deg.checked_add(x)?;
        }
    } else {
        let step = 2 * (p.get() as u64 - 1);
        for (&x, &e) in s.iter().zip(eps) {
            deg = deg
                .checked_add(x.checked_mul(step)?)?
                .checked_sub(e as u64)?;
        }
    }
    Some(deg)
}

/// Degree in `H_*(Σ_{p^r}, Lie(p^r))`: the internal degree minus `1 + r`.
pub fn homology_degree(w: &DLWord, p: Prime, r: usize) -> Result<u64> {
    if w.len() != r {
        return Err(Error::invalid(format!(
            "word has length {} but r = {r}",
            w.len()
        )));
    }
    let d = word_degree(w, p)?;
    Ok(d - (1 + r as u64))
}

/// All admissible words of length `r` in homology degree `m`, ordered
/// lexicographically on `(s, eps)`.
pub fn enumerate_words(p: Prime, r: usize, m: u64) -> Vec<DLWord> {
    let mut out = Vec::new();
    if r == 0 {
        if m == 0 {
            out.push(DLWord::empty());
        }
        return out;
    }
    let patterns: Vec<Vec<u8>> = if p.is_two() {
        vec![vec![0; r]]
    } else {
        (0..1u32 << r)
            .map(|bits| (0..r).map(|j| ((bits >> j) & 1) as u8).collect())
            .collect()
    };
    for eps in patterns {
        let bocksteins: u64 = eps.iter().map(|&e| e as u64).sum();
        let lifted = m + r as u64 + bocksteins;
        let total = if p.is_two() {
            lifted
        } else {
            let step = 2 * (p.get() as u64 - 1);
            if !lifted.is_multiple_of(step) {
                continue;
            }
            lifted / step
        };
        let mut s = vec![0u64; r];
        fill_from_bottom(p, &eps, r - 1, 1, total, &mut s, &mut out);
    }
    out.sort();
    out
}

// Positions are filled from s_r (index r-1) up to s_1 (index 0); `lower` is
// the least value allowed at `idx` and `remaining` the sum still to place.
fn fill_from_bottom(
    p: Prime,
    eps: &[u8],
    idx: usize,
    lower: u64,
    remaining: u64,
    s: &mut [u64],
    out: &mut Vec<DLWord>,
) {
    let slots = idx as u64 + 1;
    if lower.saturating_mul(slots) > remaining {
        return;
    }
    if idx == 0 {
        s[0] = remaining;
        out.push(DLWord::new(s.to_vec(), eps.to_vec()));
        return;
    }
    let q = p.get() as u64;
    let mut v = lower;
    while v.saturating_mul(slots) <= remaining {
        s[idx] = v;
        let next_lower = q * v + 1 - eps[idx] as u64;
        fill_from_bottom(p, eps, idx - 1, next_lower, remaining - v, s, out);
        v += 1;
    }
}

/// Number of basis words of length `r` in homology degree `m`.
pub fn dimension(p: Prime, r: usize, m: u64) -> Result<u64> {
    Ok(dimension_series(p, r, m)?.dims[m as usize])
}

/// Dimensions of `H_m(Σ_{p^r}, Lie(p^r))` for `0 ≤ m ≤ m_max`.
pub fn dimension_series(p: Prime, r: usize, m_max: u64) -> Result<DimSeries> {
    if m_max > MAX_SERIES_DEGREE {
        return Err(Error::capacity(
            "series length",
            m_max as usize,
            MAX_SERIES_DEGREE as usize,
        ));
    }
    let len = m_max as usize + 1;
    let label = format!("p={p},r={r}");

    // Counting solutions of Σ_k c_k a_k = t with a_k ≥ 0: the increment a_k
    // raises s_k by one and forces s_{k-1}, ..., s_1 up by p, ..., p^{k-1}.
    let mut counts = vec![0u64; len];
    counts[0] = 1;
    let mut first_overflow = len;
    for coin in coin_degrees(p, r) {
        let Some(c) = coin.filter(|&c| (c as usize) < len) else {
            continue;
        };
        let c = c as usize;
        for t in c..len {
            match counts[t].checked_add(counts[t - c]) {
                Some(v) => counts[t] = v,
                None => {
                    first_overflow = first_overflow.min(t);
                    counts[t] = u64::MAX;
                }
            }
        }
    }

    let mut dims = vec![0u64; len];
    for base in base_degrees(p, r).into_iter().flatten() {
        if base as usize >= len {
            continue;
        }
        let base = base as usize;
        for t in base..len {
            match dims[t].checked_add(counts[t - base]) {
                Some(v) => dims[t] = v,
                None => {
                    first_overflow = first_overflow.min(t);
                    dims[t] = u64::MAX;
                }
            }
        }
    }

    if first_overflow < len {
        dims.truncate(first_overflow.max(1));
        let partial = DimSeries::new(p, label, dims);
        return Err(
            Error::capacity("64-bit dimension count", first_overflow, first_overflow)
                .with_partial(Partial::Series(partial)),
        );
    }
    Ok(DimSeries::new(p, label, dims))
}

/// Homology-degree cost of one unit of slack at each position `k = 1..r`;
/// `None` when it overflows.
fn coin_degrees(p: Prime, r: usize) -> Vec<Option<u64>> {
    let q = p.get() as u64;
    (1..=r as u32)
        .map(|k| {
            let pk = q.checked_pow(k)?;
            if p.is_two() {
                Some(pk - 1)
            } else {
                (pk - 1).checked_mul(2)
            }
        })
        .collect()
}

/// Homology degree of the least admissible word for each Bockstein pattern.
fn base_degrees(p: Prime, r: usize) -> Vec<Option<u64>> {
    if r == 0 {
        return vec![Some(0)];
    }
    let patterns: Vec<Vec<u8>> = if p.is_two() {
        vec![vec![0; r]]
    } else {
        (0..1u32 << r)
            .map(|bits| (0..r).map(|j| ((bits >> j) & 1) as u8).collect())
            .collect()
    };
    let q = p.get() as u64;
    patterns
        .into_iter()
        .map(|eps| {
            let mut s = vec![0u64; r];
            s[r - 1] = 1;
            for j in (0..r - 1).rev() {
                s[j] = q.checked_mul(s[j + 1])?.checked_add(1)? - eps[j + 1] as u64;
            }
            checked_word_degree(&s, &eps, p).map(|d| d - (1 + r as u64))
        })
        .collect()
}

/// Number of monomials `x^a e^S` of degree `d` in `Λ(e_1..e_r) ⊗ k[x_1..x_r]`
/// with `|x| = 2(p-1)` and `|e| = -1`. Bounds word counts for odd `p` via
/// `dimension(p, r, m) ≤ monomial_count(p, r, m + r)`.
pub fn monomial_count(p: Prime, r: usize, d: u64) -> u128 {
    let step = 2 * (p.get() as u64 - 1);
    (0..=r)
        .filter_map(|k| {
            let lifted = d + k as u64;
            lifted
                .is_multiple_of(step)
                .then(|| binomial(r as u64, k as u64) * multiset(r as u64, lifted / step))
        })
        .sum()
}

/// Number of compositions of `m + r` into `r` positive parts, the bound for
/// `dimension(2, r, m)`.
pub fn composition_bound(r: usize, m: u64) -> u128 {
    if r == 0 {
        return u128::from(m == 0);
    }
    binomial(m + r as u64 - 1, r as u64 - 1)
}

pub(crate) fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

// monomials of total degree t in r commuting variables
fn multiset(r: u64, t: u64) -> u128 {
    if r == 0 {
        return u128::from(t == 0);
    }
    binomial(t + r - 1, r - 1)
}

/// A sequence of dimensions indexed by homological degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimSeries {
    pub p: Prime,
    pub label: String,
    pub dims: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct DimSeriesJson {
    p: u32,
    label: String,
    m_max: usize,
    dims: Vec<u64>,
}

impl DimSeries {
    pub fn new(p: Prime, label: impl Into<String>, dims: Vec<u64>) -> Self {
        assert!(!dims.is_empty(), "a series covers at least degree 0");
        DimSeries {
            p,
            label: label.into(),
            dims,
        }
    }

    pub fn m_max(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&DimSeriesJson {
            p: self.p.get(),
            label: self.label.clone(),
            m_max: self.m_max(),
            dims: self.dims.clone(),
        })
        .expect("series serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: DimSeriesJson =
            serde_json::from_str(text).map_err(|e| Error::invalid(format!("series JSON: {e}")))?;
        if raw.dims.len() != raw.m_max + 1 {
            return Err(Error::invalid(format!(
                "m_max is {} but {} dimensions were given",
                raw.m_max,
                raw.dims.len()
            )));
        }
        Ok(DimSeries::new(Prime::new(raw.p)?, raw.label, raw.dims))
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["m", "dim"]).expect("in-memory write");
        for (m, d) in self.dims.iter().enumerate() {
            w.write_record([m.to_string(), d.to_string()])
                .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii output")
    }

    /// Parses the `m,dim` table; the prime and label are not part of the CSV.
    pub fn from_csv(p: Prime, label: impl Into<String>, text: &str) -> Result<Self> {
        let mut rdr = csv::Reader::from_reader(text.as_bytes());
        let headers = rdr
            .headers()
            .map_err(|e| Error::invalid(format!("CSV header: {e}")))?;
        if headers != vec!["m", "dim"] {
            return Err(Error::invalid("CSV header must be `m,dim`"));
        }
        let mut dims = Vec::new();
        for (expect, rec) in rdr.records().enumerate() {
            let rec = rec.map_err(|e| Error::invalid(format!("CSV record: {e}")))?;
            let parse = |i: usize| -> Result<u64> {
                rec.get(i)
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| Error::invalid(format!("bad CSV field in row {expect}")))
            };
            if parse(0)? != expect as u64 {
                return Err(Error::invalid(format!(
                    "CSV degrees must run 0,1,2,...; row {expect}"
                )));
            }
            dims.push(parse(1)?);
        }
        if dims.is_empty() {
            return Err(Error::invalid("CSV has no rows"));
        }
        Ok(DimSeries::new(p, label, dims))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pr(p: u32) -> Prime {
        Prime::new(p).unwrap()
    }

    #[test]
    fn admissibility_examples() {
        assert!(is_admissible(&DLWord::plain(vec![4, 1]), pr(2)).unwrap());
        assert!(!is_admissible(&DLWord::plain(vec![4, 2]), pr(2)).unwrap());
        assert!(!is_admissible(&DLWord::new(vec![5, 2], vec![0, 1]), pr(3)).unwrap());
        assert!(is_admissible(&DLWord::new(vec![6, 2], vec![0, 1]), pr(3)).unwrap());
        assert!(is_admissible(&DLWord::empty(), pr(5)).unwrap());
    }

    #[test]
    fn malformed_words_are_rejected() {
        assert!(is_admissible(&DLWord::new(vec![3, 1], vec![0]), pr(3)).is_err());
        assert!(is_admissible(&DLWord::plain(vec![3, 0]), pr(3)).is_err());
        assert!(is_admissible(&DLWord::new(vec![3], vec![2]), pr(3)).is_err());
        assert!(is_admissible(&DLWord::new(vec![3], vec![1]), pr(2)).is_err());
    }

    #[test]
    fn degrees() {
        assert_eq!(word_degree(&DLWord::plain(vec![4, 1]), pr(2)).unwrap(), 6);
        assert_eq!(word_degree(&DLWord::plain(vec![2]), pr(3)).unwrap(), 9);
        assert_eq!(
            word_degree(&DLWord::new(vec![2], vec![1]), pr(3)).unwrap(),
            8
        );
        assert_eq!(
            homology_degree(&DLWord::plain(vec![3, 1]), pr(2), 2).unwrap(),
            2
        );
        assert_eq!(
            homology_degree(&DLWord::plain(vec![5]), pr(2), 1).unwrap(),
            4
        );
        assert_eq!(homology_degree(&DLWord::empty(), pr(7), 0).unwrap(), 0);
        assert!(homology_degree(&DLWord::plain(vec![5]), pr(2), 2).is_err());
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(
            enumerate_words(pr(2), 2, 2),
            vec![DLWord::plain(vec![3, 1])]
        );
        assert!(enumerate_words(pr(2), 2, 0).is_empty());
        assert_eq!(enumerate_words(pr(2), 1, 7), vec![DLWord::plain(vec![8])]);
        assert_eq!(enumerate_words(pr(3), 0, 0), vec![DLWord::empty()]);
        assert!(enumerate_words(pr(3), 0, 2).is_empty());
    }

    #[test]
    fn dimension_examples() {
        let two = pr(2);
        for m in 0..30 {
            assert_eq!(dimension(two, 1, m).unwrap(), 1);
        }
        assert_eq!(
            dimension_series(two, 2, 8).unwrap().dims,
            vec![0, 0, 1, 1, 1, 2, 2, 2, 3]
        );
        assert_eq!(
            dimension_series(pr(3), 1, 6).unwrap().dims,
            vec![0, 0, 1, 1, 0, 0, 1]
        );
        assert_eq!(
            dimension_series(pr(5), 0, 3).unwrap().dims,
            vec![1, 0, 0, 0]
        );
        assert_eq!(dimension_series(two, 1, 4).unwrap().dims, vec![1; 5]);
    }

    #[test]
    fn large_series_is_supported() {
        let s = dimension_series(pr(2), 4, 10_000).unwrap();
        assert_eq!(s.len(), 10_001);
        assert!(s.dims[10_000] > 0);
    }

    #[test]
    fn json_and_csv_roundtrip() {
        let s = dimension_series(pr(2), 2, 8).unwrap();
        let json = s.to_json();
        assert_eq!(
            json,
            r#"{"p":2,"label":"p=2,r=2","m_max":8,"dims":[0,0,1,1,1,2,2,2,3]}"#
        );
        assert_eq!(DimSeries::from_json(&json).unwrap().to_json(), json);
        let csv = s.to_csv();
        assert!(csv.starts_with("m,dim\n0,0\n1,0\n2,1\n"));
        assert_eq!(
            DimSeries::from_csv(s.p, s.label.clone(), &csv)
                .unwrap()
                .to_csv(),
            csv
        );
    }

    #[test]
    fn csv_rejects_gaps() {
        assert!(DimSeries::from_csv(pr(2), "x", "m,dim\n0,1\n2,1\n").is_err());
        assert!(DimSeries::from_csv(pr(2), "x", "a,b\n0,1\n").is_err());
        assert!(DimSeries::from_json(r#"{"p":2,"label":"x","m_max":3,"dims":[1]}"#).is_err());
    }
}
