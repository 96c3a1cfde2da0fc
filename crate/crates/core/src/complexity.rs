//! Complexity of `Lie(n)` over `F_p Σ_n`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::field::Prime;
use crate::growth::{gamma_estimate, GammaEstimate};
use crate::words::dimension_series;

/// Largest `t = v_p(n)` accepted in audited mode.
pub const MAX_AUDITED_T: u32 = 4;

pub fn p_valuation(n: u64, p: Prime) -> Result<u32> {
    if n == 0 {
        return Err(Error::invalid("valuation of 0 is undefined"));
    }
    Ok(p.valuation(n))
}

/// `v_p` of the gcd of the parts.
pub fn j_of_composition(lambda: &Composition, p: Prime) -> u32 {
    p.valuation(lambda.gcd() as u64)
}

/// Default top degree for audited growth estimates.
pub fn default_m_max(p: Prime) -> u64 {
    if p.is_two() {
        5000
    } else {
        2000
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RateEntry {
    pub r: u32,
    /// Growth rate observed on the word-count series; `0` for `r = 0`.
    pub gamma: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub estimate: Option<GammaEstimate>,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComplexityReport {
    pub n: u64,
    pub p: Prime,
    pub t: u32,
    pub audited: bool,
    pub per_r: Vec<RateEntry>,
    /// Maximum of the observed rates (audited) or `t`.
    pub observed: u32,
    pub conclusion: u32,
    pub mismatches: Vec<u32>,
}

impl ComplexityReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn consistent(&self) -> bool {
        self.mismatches.is_empty() && self.observed == self.conclusion
    }
}

/// The complexity of `Lie(n)` is `v_p(n)`. In audited mode each rate
/// `γ = r` for `r ≤ v_p(n)` is re-estimated from word counts up to `m_max`
/// and any disagreement is listed rather than overridden.
pub fn complexity_lie(
    n: u64,
    p: Prime,
    audited: bool,
    m_max: Option<u64>,
) -> Result<ComplexityReport> {
    let t = p_valuation(n, p)?;
    let per_r = if audited {
        if t > MAX_AUDITED_T {
            return Err(Error::capacity(
                "audited valuation",
                t as usize,
                MAX_AUDITED_T as usize,
            ));
        }
        let m_max = m_max.unwrap_or_else(|| default_m_max(p));
        (0..=t)
            .into_par_iter()
            .map(|r| -> Result<RateEntry> {
                if r == 0 {
                    return Ok(RateEntry {
                        r,
                        gamma: 0,
                        estimate: None,
                        matches: true,
                    });
                }
                let est = gamma_estimate(&dimension_series(p, r as usize, m_max)?)?;
                Ok(RateEntry {
                    r,
                    gamma: est.gamma,
                    matches: est.gamma == r,
                    estimate: Some(est),
                })
            })
            .collect::<Result<Vec<_>>>()?
    } else {
        (0..=t)
            .map(|r| RateEntry {
                r,
                gamma: r,
                estimate: None,
                matches: true,
            })
            .collect()
    };
    let mismatches = per_r.iter().filter(|e| !e.matches).map(|e| e.r).collect();
    let observed = per_r.iter().map(|e| e.gamma).max().unwrap_or(0);
    Ok(ComplexityReport {
        n,
        p,
        t,
        audited,
        per_r,
        observed,
        conclusion: t,
        mismatches,
    })
}

/// Growth rate of `H_•(Σ_λ, Lie(n))`: the largest `r ≤ j(λ)`.
pub fn branching_gamma(n: usize, p: Prime, lambda: &Composition) -> Result<u32> {
    if lambda.total() != n {
        return Err(Error::invalid(format!(
            "composition {lambda} does not sum to {n}"
        )));
    }
    Ok(j_of_composition(lambda, p))
}
