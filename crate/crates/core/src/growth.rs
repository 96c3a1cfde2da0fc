//! Rate-of-growth estimates for dimension series and the explicit families
//! of words that force polynomial growth of degree `r - 1`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Prime;
use crate::words::{DLWord, DimSeries};

/// Shortest series [`gamma_estimate`] will fit.
pub const MIN_SERIES_LEN: usize = 16;

/// Smallest degree used in the log-log fit.
const MIN_FIT_DEGREE: usize = 8;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GammaEstimate {
    pub gamma: u32,
    pub slope: f64,
    pub window: (usize, usize),
    #[serde(rename = "note")]
    pub confidence_note: String,
}

impl GammaEstimate {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("estimate serializes")
    }
}

/// Estimates γ from the slope of `log S(T)` against `log T`, where `S` is the
/// partial-sum sequence, over the top half of the degree range.
pub fn gamma_estimate(series: &DimSeries) -> Result<GammaEstimate> {
    let n = series.len();
    if n < MIN_SERIES_LEN {
        return Err(Error::InsufficientData {
            needed: MIN_SERIES_LEN,
            got: n,
        });
    }
    let t_hi = n - 1;
    let t_lo = (t_hi / 2).max(MIN_FIT_DEGREE);

    let mut partial = 0f64;
    let mut points = Vec::with_capacity(t_hi - t_lo + 1);
    for (t, &d) in series.dims.iter().enumerate() {
        partial += d as f64;
        if t >= t_lo && partial > 0.0 {
            points.push(((t as f64).ln(), partial.ln()));
        }
    }

    if points.len() < 2 {
        return Ok(GammaEstimate {
            gamma: 1,
            slope: 0.0,
            window: (t_lo, t_hi),
            confidence_note: "degenerate: series vanishes on the fit window".into(),
        });
    }

    let slope = least_squares_slope(&points);
    let mut note = String::new();
    let frac = slope - slope.floor();
    let mut gamma = if (frac - 0.5).abs() < 1e-9 {
        note.push_str("slope at a half-integer; rounded up");
        slope.ceil()
    } else {
        slope.round()
    };
    if gamma < 1.0 {
        if !note.is_empty() {
            note.push_str("; ");
        }
        note.push_str("slope below 1; clamped to γ = 1");
        gamma = 1.0;
    }
    let tail_zero = series.dims[t_lo..].iter().all(|&d| d == 0);
    if tail_zero {
        if !note.is_empty() {
            note.push_str("; ");
        }
        note.push_str("degenerate: no new classes on the fit window");
    }
    if note.is_empty() {
        note.push_str("ok");
    }
    Ok(GammaEstimate {
        gamma: gamma as u32,
        slope,
        window: (t_lo, t_hi),
        confidence_note: note,
    })
}

fn least_squares_slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let (sx, sy) = points
        .iter()
        .fold((0.0, 0.0), |(a, b), &(x, y)| (a + x, b + y));
    let (mx, my) = (sx / n, sy / n);
    let (mut sxy, mut sxx) = (0.0, 0.0);
    for &(x, y) in points {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
    }
    sxy / sxx
}

/// The `i`-fold suspension: zeros in degrees below `i`, then the series.
pub fn shift_series(series: &DimSeries, i: usize) -> DimSeries {
    let mut dims = vec![0; i];
    dims.extend_from_slice(&series.dims);
    let label = if i == 0 {
        series.label.clone()
    } else {
        format!("Σ^{i} {}", series.label)
    };
    DimSeries::new(series.p, label, dims)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub p: Prime,
    pub r: usize,
    pub x: u64,
}

impl FamilySpec {
    pub fn new(p: Prime, r: usize, x: u64) -> Result<Self> {
        if r == 0 {
            return Err(Error::invalid("family length r must be at least 1"));
        }
        if x == 0 {
            return Err(Error::invalid("family parameter x must be at least 1"));
        }
        Ok(FamilySpec { p, r, x })
    }

    // x + px + ... + p^j x
    fn geometric(&self, j: usize) -> u64 {
        let q = self.p.get() as u64;
        (0..=j as u32).map(|e| q.pow(e) * self.x).sum()
    }
}

/// The `x^{r-1}` Bockstein-free words sharing one exponent total: `s_r` runs
/// over `[1, x]`, `s_{r-j}` over `[p^j x + ... + px + 1, p^j x + ... + px + x]`
/// for `1 ≤ j ≤ r - 2`, and `s_1` absorbs the slack so the total is fixed.
pub fn lower_bound_family(spec: &FamilySpec) -> Vec<DLWord> {
    let r = spec.r;
    let x = spec.x;
    // tops[j] is the upper end of the range for s_{r-j}
    let tops: Vec<u64> = (0..r.saturating_sub(1))
        .map(|j| spec.geometric(j))
        .collect();
    let head = spec.geometric(r - 1);

    let mut out = Vec::new();
    let mut offsets = vec![0u64; tops.len()];
    loop {
        // offsets[j] ∈ [0, x) chooses s_{r-j} = tops[j] - offsets[j]
        let mut s = vec![0u64; r];
        let mut slack = 0;
        for (j, (&top, &off)) in tops.iter().zip(&offsets).enumerate() {
            s[r - 1 - j] = top - off;
            slack += off;
        }
        s[0] = head + slack;
        out.push(DLWord::plain(s));

        let mut k = 0;
        loop {
            if k == offsets.len() {
                out.sort();
                return out;
            }
            offsets[k] += 1;
            if offsets[k] < x {
                break;
            }
            offsets[k] = 0;
            k += 1;
        }
    }
}

/// The exponent total `Σ s_j` shared by the family, read off the words.
pub fn family_common_total(spec: &FamilySpec) -> u64 {
    let words = lower_bound_family(spec);
    let total = words[0].s.iter().sum();
    debug_assert!(words.iter().all(|w| w.s.iter().sum::<u64>() == total));
    total
}

/// Compositions of `m` into exactly `r` positive parts.
pub fn composition_count(m: u64, r: u64) -> u128 {
    if r == 0 || m < r {
        return u128::from(r == 0 && m == 0);
    }
    crate::words::binomial(m - 1, r - 1)
}

/// Measured family total against the two closed forms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub p: u32,
    pub r: usize,
    pub x: u64,
    pub size: usize,
    pub all_admissible: bool,
    pub common_degree: Option<u64>,
    pub measured_total: u64,
    /// `(p^{r-1} + 2p^{r-2} + ... + (r-1)p + r) x`
    pub construction_total: u64,
    /// `(p^{r-1} + 2p^{r-2} + ... + (r-1)p + (r-1)) x`, as printed
    pub stated_total: u64,
    /// `measured_total - stated_total`
    pub deviation_from_stated: i64,
}

pub fn family_report(spec: &FamilySpec) -> Result<FamilyReport> {
    let words = lower_bound_family(spec);
    let mut degrees = Vec::with_capacity(words.len());
    let mut all_admissible = true;
    for w in &words {
        all_admissible &= crate::words::is_admissible(w, spec.p)?;
        degrees.push(crate::words::homology_degree(w, spec.p, spec.r)?);
    }
    let common_degree = degrees.windows(2).all(|d| d[0] == d[1]).then(|| degrees[0]);
    let measured_total = family_common_total(spec);
    let q = spec.p.get() as u64;
    let r = spec.r as u64;
    let weighted: u64 = (1..r).map(|k| k * q.pow((r - k) as u32)).sum();
    let construction_total = (weighted + r) * spec.x;
    let stated_total = (weighted + r - 1) * spec.x;
    Ok(FamilyReport {
        p: spec.p.get(),
        r: spec.r,
        x: spec.x,
        size: words.len(),
        all_admissible,
        common_degree,
        measured_total,
        construction_total,
        stated_total,
        deviation_from_stated: measured_total as i64 - stated_total as i64,
    })
}
