use serde::{Deserialize, Serialize};

use crate::composition::Composition;
use crate::field::Prime;

/// Result of fitting oracle dimensions by word-count series.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FitReport {
    pub n: usize,
    pub p: Prime,
    pub lambda: Composition,
    pub j: u32,
    pub m_max: usize,
    pub oracle_dims: Vec<u64>,
    /// `basis[r][m]` is the word count for `r` operations in degree `m`.
    pub basis: Vec<Vec<u64>>,
    /// Best nonnegative coefficients `C_0, …, C_j`.
    pub coefficients: Vec<u64>,
    pub fitted: Vec<u64>,
    /// `Σ_m |oracle_dims[m] - fitted[m]|` for the chosen coefficients.
    pub residual: u64,
    pub exact: bool,
    /// Number of distinct exact solutions within the search box.
    pub exact_solutions: usize,
    pub all_positive: bool,
}

impl FitReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("fit report serializes")
    }
}

/// Exhaustive search over `0 ≤ C_r ≤ max(dims) + 1`, minimizing the L1
/// residual; ties go to the lexicographically smallest coefficient vector.
pub(crate) fn fit(dims: &[u64], basis: &[Vec<u64>]) -> (Vec<u64>, u64, usize) {
    let bound = dims.iter().copied().max().unwrap_or(0) + 1;
    let k = basis.len();
    let mut coeffs = vec![0u64; k];
    let mut best: Option<(u64, Vec<u64>)> = None;
    let mut exact = 0usize;
    loop {
        let residual: u64 = dims
            .iter()
            .enumerate()
            .map(|(m, &d)| {
                let f: u64 = (0..k).map(|r| coeffs[r] * basis[r][m]).sum();
                d.abs_diff(f)
            })
            .sum();
        if residual == 0 {
            exact += 1;
        }
        if best.as_ref().is_none_or(|(b, _)| residual < *b) {
            best = Some((residual, coeffs.clone()));
        }
        // odometer, last coordinate fastest
        let mut i = k;
        loop {
            if i == 0 {
                let (res, c) = best.expect("at least one candidate");
                return (c, res, exact);
            }
            i -= 1;
            if coeffs[i] < bound {
                coeffs[i] += 1;
                break;
            }
            coeffs[i] = 0;
        }
    }
}
