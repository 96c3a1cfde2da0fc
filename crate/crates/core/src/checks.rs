//! The acceptance suite, shared by the test harness and `liecx check`.

use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::complexity::{complexity_lie, default_m_max};
use crate::composition::Composition;
use crate::error::Result;
use crate::field::Prime;
use crate::freelie::{
    action_matrix, lie_module_rep, lyndon_basis, normal_form, normal_form_by_expansion, BracketTree,
};
use crate::growth::{family_report, gamma_estimate, shift_series, FamilySpec};
use crate::linalg::Matrix;
use crate::oracle::{
    bar_tor_dims, cohomology_dims, decomposition_fit, tor_dims, Capacity, GModuleRep, YoungGroup,
};
use crate::perm::Perm;
use crate::words::{dimension, dimension_series, DimSeries};

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub id: u32,
    pub name: String,
    pub passed: bool,
    pub detail: String,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CheckOutcome {
    /// One summary line, e.g. `[PASS]  3 oracle r=1 p=3: ...`.
    pub fn line(&self) -> String {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        format!("[{tag}] {:>2} {}: {}", self.id, self.name, self.detail)
    }
}

/// Number of acceptance criteria.
pub const COUNT: u32 = 12;

pub fn run(id: u32) -> Option<CheckOutcome> {
    let start = Instant::now();
    let (name, result): (&str, Result<(bool, String)>) = match id {
        1 => (
            "oracle r=1 p=2",
            oracle_equivalence(2, 1, "2", 2, 10, None, Some(Duration::from_secs(1))),
        ),
        2 => (
            "oracle r=2 p=2",
            oracle_equivalence(
                2,
                2,
                "4",
                4,
                6,
                Some(&[0, 0, 1, 1, 1, 2, 2]),
                Some(Duration::from_secs(300)),
            ),
        ),
        3 => (
            "oracle r=1 p=3",
            oracle_equivalence(3, 1, "3", 3, 6, Some(&[0, 0, 1, 1, 0, 0, 1]), None),
        ),
        4 => ("growth rates", growth_rates()),
        5 => ("complexity table", complexity_table()),
        6 => ("lower-bound families", families()),
        7 => ("free Lie module", free_lie()),
        8 => ("freeness over the point stabilizer", freeness()),
        9 => ("homology/cohomology duality", duality()),
        10 => ("decomposition fit", decomposition()),
        11 => ("resolution independence", resolution_independence()),
        12 => ("suspension invariance", suspension()),
        _ => return None,
    };
    let (passed, detail) = result.unwrap_or_else(|e| (false, format!("error: {e}")));
    Some(CheckOutcome {
        id,
        name: name.to_string(),
        passed,
        detail,
        elapsed: start.elapsed(),
    })
}

pub fn run_all() -> Vec<CheckOutcome> {
    (1..=COUNT).filter_map(run).collect()
}

fn adhoc(name: String, f: impl FnOnce() -> Result<(bool, String)>) -> Result<CheckOutcome> {
    let start = Instant::now();
    let (passed, detail) = f()?;
    Ok(CheckOutcome {
        id: 0,
        name,
        passed,
        detail,
        elapsed: start.elapsed(),
    })
}

/// Word counts against oracle homology of `Σ_{p^r}` with `Lie(p^r)` coefficients.
pub fn check_oracle(p: Prime, r: usize, m_max: usize) -> Result<CheckOutcome> {
    let n = (p.get() as usize)
        .checked_pow(r as u32)
        .ok_or_else(|| crate::error::Error::invalid("p^r overflows"))?;
    let lambda = Composition::single(n).to_string();
    adhoc(format!("oracle p={p} r={r}"), || {
        oracle_equivalence(p.get(), r, &lambda, n, m_max, None, None)
    })
}

/// Vanishing of positive-degree homology of `Lie(n)` over `Σ_{n-1} × Σ_1`.
pub fn check_freeness(n: usize, p: Prime, m_max: usize) -> Result<CheckOutcome> {
    adhoc(format!("freeness n={n} p={p}"), || {
        let lambda = Composition::new(vec![n.saturating_sub(1).max(1), 1])?;
        let lie = lie_module_rep(n, p, &lambda)?;
        let dims = tor_dims(&lambda, p, &lie, m_max)?.dims;
        Ok((dims[1..].iter().all(|&d| d == 0), format!("H_* = {dims:?}")))
    })
}

/// `H^m(M) = H_m(M*)` on `count` random modules over `Σ_λ`.
pub fn check_duality(
    lambda: &Composition,
    p: Prime,
    count: usize,
    m_max: usize,
    seed: u64,
) -> Result<CheckOutcome> {
    adhoc(format!("duality ({lambda}) p={p}"), || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut failures = Vec::new();
        for _ in 0..count {
            let m = random_module(lambda, p, 6, &mut rng)?;
            let up = cohomology_dims(lambda, p, &m, m_max)?.dims;
            let down = tor_dims(lambda, p, &m.dual(), m_max)?.dims;
            if up != down {
                failures.push(format!("dim {}: {up:?} vs {down:?}", m.dim));
            }
        }
        Ok((
            failures.is_empty(),
            format!(
                "{count} modules, {} disagreements {failures:?}",
                failures.len()
            ),
        ))
    })
}

/// Minimal-generator resolution against the bar complex, for `Lie(n)` and a random module.
pub fn check_resolution(
    lambda: &Composition,
    p: Prime,
    m_max: usize,
    seed: u64,
    cap: &Capacity,
) -> Result<CheckOutcome> {
    adhoc(format!("resolution ({lambda}) p={p}"), || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = lambda.total();
        let modules = [
            lie_module_rep(n, p, lambda)?,
            random_module(lambda, p, 6, &mut rng)?,
        ];
        let mut ok = true;
        let mut parts = Vec::new();
        for (kind, m) in ["Lie", "random"].iter().zip(&modules) {
            let minimal = crate::oracle::tor_dims_with(lambda, p, m, m_max, cap)?.dims;
            let bar = bar_tor_dims(lambda, p, m, m_max, cap)?.dims;
            ok &= bar == minimal;
            parts.push(format!("{kind}: {minimal:?} vs bar {bar:?}"));
        }
        Ok((ok, parts.join("; ")))
    })
}

/// Size, admissibility, common degree and exponent total of one family.
pub fn check_family(p: Prime, r: usize, x: u64) -> Result<CheckOutcome> {
    adhoc(format!("family p={p} r={r} x={x}"), || {
        let rep = family_report(&FamilySpec::new(p, r, x)?)?;
        let ok = rep.size as u64 == x.pow(r as u32 - 1)
            && rep.all_admissible
            && rep.common_degree.is_some()
            && rep.measured_total == rep.construction_total;
        Ok((
            ok,
            format!(
                "size {}, degree {:?}, total {} (stated form gives {}, deviation {:+})",
                rep.size,
                rep.common_degree,
                rep.measured_total,
                rep.stated_total,
                rep.deviation_from_stated
            ),
        ))
    })
}

/// Homomorphism and straightening checks on random data for `Lie(n)`.
pub fn check_lie(n: usize, p: Prime, count: usize, seed: u64) -> Result<CheckOutcome> {
    adhoc(format!("Lie({n}) p={p}"), || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut hom = 0;
        let mut nf = 0;
        for _ in 0..count {
            let (s, t) = (random_perm(n, &mut rng), random_perm(n, &mut rng));
            let lhs = action_matrix(n, p, &s.compose(&t))?;
            if lhs != action_matrix(n, p, &s)?.mul(&action_matrix(n, p, &t)?, p) {
                hom += 1;
            }
            let tree = random_bracketing(n, &mut rng);
            if normal_form(&tree, n, p)? != normal_form_by_expansion(&tree, n, p)? {
                nf += 1;
            }
        }
        Ok((
            hom == 0 && nf == 0,
            format!("{count} samples: {hom} homomorphism failures, {nf} normal-form disagreements"),
        ))
    })
}

fn prime(p: u32) -> Prime {
    Prime::new(p).expect("small prime")
}

fn comp(s: &str) -> Composition {
    s.parse().expect("valid composition")
}

fn oracle_equivalence(
    p: u32,
    r: usize,
    lambda: &str,
    n: usize,
    m_max: usize,
    expected: Option<&[u64]>,
    limit: Option<Duration>,
) -> Result<(bool, String)> {
    let start = Instant::now();
    let p = prime(p);
    let lambda = comp(lambda);
    let lie = lie_module_rep(n, p, &lambda)?;
    let oracle = tor_dims(&lambda, p, &lie, m_max)?.dims;
    let words = (0..=m_max as u64)
        .map(|m| dimension(p, r, m))
        .collect::<Result<Vec<_>>>()?;
    let elapsed = start.elapsed();
    let mut ok = oracle == words;
    let mut detail = format!("words {words:?}, oracle {oracle:?}");
    if let Some(e) = expected {
        ok &= words == e;
        detail.push_str(&format!(", expected {e:?}"));
    }
    if let Some(limit) = limit {
        ok &= elapsed < limit;
        detail.push_str(&format!(", within {}s", limit.as_secs()));
    }
    Ok((ok, detail))
}

/// The six series whose growth rates are checked, with their expected rates.
pub fn growth_cases() -> Result<Vec<(DimSeries, u32)>> {
    [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1)]
        .into_iter()
        .map(|(q, r)| {
            let p = prime(q);
            Ok((dimension_series(p, r, default_m_max(p))?, r as u32))
        })
        .collect()
}

fn growth_rates() -> Result<(bool, String)> {
    let start = Instant::now();
    let mut ok = true;
    let mut parts = Vec::new();
    for (series, r) in growth_cases()? {
        let est = gamma_estimate(&series)?;
        ok &= est.gamma == r;
        parts.push(format!(
            "{} γ={} (slope {:.3})",
            series.label, est.gamma, est.slope
        ));
    }
    ok &= start.elapsed() < Duration::from_secs(120);
    Ok((ok, parts.join("; ")))
}

// v_p(n) by trial powers, independent of the field helper
fn valuation_by_powers(n: u64, p: u64) -> u32 {
    let mut t = 0;
    while n.is_multiple_of(p.pow(t + 1)) {
        t += 1;
    }
    t
}

fn complexity_table() -> Result<(bool, String)> {
    let start = Instant::now();
    let mut bad = Vec::new();
    let mut count = 0;
    for q in [2u32, 3, 5, 7] {
        for n in 1..=200u64 {
            count += 1;
            let rep = complexity_lie(n, prime(q), false, None)?;
            if rep.conclusion != valuation_by_powers(n, q as u64) {
                bad.push(format!("n={n} p={q}"));
            }
        }
    }
    let fast = start.elapsed() < Duration::from_secs(1);
    Ok((
        bad.is_empty() && fast,
        format!("{count} cases, {} mismatches {bad:?}, within 1s", bad.len()),
    ))
}

fn families() -> Result<(bool, String)> {
    let mut ok = true;
    let mut deviations = Vec::new();
    for q in [2u32, 3] {
        for r in 1..=4usize {
            for x in 1..=10u64 {
                let rep = family_report(&FamilySpec::new(prime(q), r, x)?)?;
                let expect_size = x.pow(r as u32 - 1) as usize;
                ok &= rep.size == expect_size
                    && rep.all_admissible
                    && rep.common_degree.is_some()
                    && rep.measured_total == rep.construction_total;
                if x == 1 {
                    deviations.push(format!("p={q},r={r}:{:+}x", rep.deviation_from_stated));
                }
            }
        }
    }
    Ok((
        ok,
        format!(
            "80 families sized x^(r-1), admissible, one degree; measured total exceeds the stated constant by {}",
            deviations.join(" ")
        ),
    ))
}

fn random_perm(n: usize, rng: &mut ChaCha8Rng) -> Perm {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    Perm::from_images(images).expect("shuffle is a permutation")
}

/// A uniformly shaped random bracketing of a random arrangement of `1..=n`.
pub fn random_bracketing(n: usize, rng: &mut ChaCha8Rng) -> BracketTree {
    let mut letters: Vec<usize> = (1..=n).collect();
    letters.shuffle(rng);
    build_tree(&letters, rng)
}

fn build_tree(letters: &[usize], rng: &mut ChaCha8Rng) -> BracketTree {
    if letters.len() == 1 {
        return BracketTree::leaf(letters[0]);
    }
    let k = rng.gen_range(1..letters.len());
    BracketTree::bracket(
        build_tree(&letters[..k], rng),
        build_tree(&letters[k..], rng),
    )
}

fn free_lie() -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut sizes_ok = true;
    let mut factorial = 1usize;
    for n in 1..=8 {
        if n > 1 {
            factorial *= n - 1;
        }
        sizes_ok &= lyndon_basis(n)?.len() == factorial;
    }

    let mut hom_failures = 0;
    let mut pairs = 0;
    for q in [2u32, 3, 5] {
        let p = prime(q);
        for k in 0..200 {
            let n = 2 + k % 5;
            let (s, t) = (random_perm(n, &mut rng), random_perm(n, &mut rng));
            let lhs = action_matrix(n, p, &s.compose(&t))?;
            let rhs = action_matrix(n, p, &s)?.mul(&action_matrix(n, p, &t)?, p);
            pairs += 1;
            if lhs != rhs {
                hom_failures += 1;
            }
        }
    }

    let mut nf_failures = 0;
    let primes = [2u32, 3, 5];
    for k in 0..500 {
        let n = 2 + k % 4;
        let p = prime(primes[k % 3]);
        let t = random_bracketing(n, &mut rng);
        if normal_form(&t, n, p)? != normal_form_by_expansion(&t, n, p)? {
            nf_failures += 1;
        }
    }
    Ok((
        sizes_ok && hom_failures == 0 && nf_failures == 0,
        format!(
            "basis sizes (n-1)! for n<=8: {sizes_ok}; homomorphism failures {hom_failures}/{pairs}; normal-form disagreements {nf_failures}/500"
        ),
    ))
}

fn freeness() -> Result<(bool, String)> {
    let start = Instant::now();
    let mut ok = true;
    let mut parts = Vec::new();
    for q in [2u32, 3] {
        let p = prime(q);
        for n in 3..=5usize {
            let lambda = Composition::new(vec![n - 1, 1])?;
            let lie = lie_module_rep(n, p, &lambda)?;
            let dims = tor_dims(&lambda, p, &lie, 4)?.dims;
            ok &= dims[1..].iter().all(|&d| d == 0);
            parts.push(format!("n={n} p={q}: {dims:?}"));
        }
    }
    ok &= start.elapsed() < Duration::from_secs(600);
    Ok((ok, parts.join("; ")))
}

fn random_invertible(d: usize, p: Prime, rng: &mut ChaCha8Rng) -> Matrix {
    loop {
        let rows: Vec<Vec<u32>> = (0..d)
            .map(|_| (0..d).map(|_| rng.gen_range(0..p.get())).collect())
            .collect();
        let m = Matrix::from_rows(&rows, d);
        if m.rank(p) == d {
            return m;
        }
    }
}

/// A random module of dimension at most `max_dim`: sums, tensor products,
/// submodules and quotients of small permutation, sign and Lie modules, in a
/// random basis.
pub fn random_module(
    lambda: &Composition,
    p: Prime,
    max_dim: usize,
    rng: &mut ChaCha8Rng,
) -> Result<GModuleRep> {
    let n = lambda.total();
    let mut pool = vec![
        GModuleRep::trivial(p, lambda.clone()),
        GModuleRep::sign(p, lambda.clone()),
    ];
    if n <= max_dim {
        pool.push(GModuleRep::natural(p, lambda.clone()));
    }
    if n >= 2 && (1..n).product::<usize>() <= max_dim {
        pool.push(lie_module_rep(n, p, lambda)?);
    }
    let mut m = pool.choose(rng).expect("pool is nonempty").clone();
    for _ in 0..3 {
        let other = pool.choose(rng).expect("pool is nonempty");
        match rng.gen_range(0..4) {
            0 if m.dim + other.dim <= max_dim => m = m.direct_sum(other),
            1 if m.dim * other.dim <= max_dim => m = m.tensor(other),
            2 if m.dim > 1 => {
                let v: Vec<u32> = (0..m.dim).map(|_| rng.gen_range(0..p.get())).collect();
                let sub = m.span_submodule(&[v]);
                if sub.dim() > 0 && sub.dim() < m.dim {
                    m = if rng.gen_bool(0.5) {
                        m.submodule(&sub)?
                    } else {
                        m.quotient(&sub)?
                    };
                }
            }
            _ => {}
        }
    }
    let change = random_invertible(m.dim, p, rng);
    m.conjugate(&change)
}

/// Groups used for the random-module checks, all of order at most 24.
pub fn small_groups() -> Vec<Composition> {
    [
        "2", "3", "4", "2,1", "1,2", "2,2", "3,1", "1,3", "2,1,1", "2,2,2", "3,2", "2,1,2",
    ]
    .into_iter()
    .map(comp)
    .collect()
}

fn duality() -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let groups = small_groups();
    let mut failures = Vec::new();
    for k in 0..20 {
        let lambda = &groups[k % groups.len()];
        let p = prime(if k % 2 == 0 { 2 } else { 3 });
        let m = random_module(lambda, p, 6, &mut rng)?;
        let h_up = cohomology_dims(lambda, p, &m, 4)?.dims;
        let h_down = tor_dims(lambda, p, &m.dual(), 4)?.dims;
        if h_up != h_down {
            failures.push(format!(
                "({lambda}) p={p} dim {}: {h_up:?} vs {h_down:?}",
                m.dim
            ));
        }
    }
    Ok((
        failures.is_empty(),
        format!(
            "20 random modules, {} disagreements {failures:?}",
            failures.len()
        ),
    ))
}

fn decomposition() -> Result<(bool, String)> {
    let p = prime(2);
    let mut ok = true;
    let mut parts = Vec::new();
    for lambda in ["4", "2,2"] {
        let fit = decomposition_fit(4, p, &comp(lambda), 6)?;
        ok &= fit.exact && fit.all_positive;
        parts.push(format!(
            "({lambda}): oracle {:?}, C = {:?}, residual {}, all C_r >= 1: {}",
            fit.oracle_dims, fit.coefficients, fit.residual, fit.all_positive
        ));
    }
    let fit = decomposition_fit(4, p, &comp("1,3"), 6)?;
    let vanishes = fit.oracle_dims[1..].iter().all(|&d| d == 0);
    ok &= vanishes && fit.exact;
    parts.push(format!(
        "(1,3): oracle {:?}, C = {:?}",
        fit.oracle_dims, fit.coefficients
    ));
    Ok((ok, parts.join("; ")))
}

fn resolution_independence() -> Result<(bool, String)> {
    let cap = Capacity::default();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut compared = 0;
    let mut disagreements = Vec::new();
    let mut unreachable = Vec::new();
    for n in 1..=4usize {
        for lambda in Composition::all_of(n) {
            let order = YoungGroup::new(&lambda, cap.group_order)?.order();
            if order > 24 {
                continue;
            }
            for q in [2u32, 3] {
                let p = prime(q);
                let modules = [
                    lie_module_rep(n, p, &lambda)?,
                    random_module(&lambda, p, 6, &mut rng)?,
                ];
                for (kind, m) in ["Lie", "random"].iter().zip(&modules) {
                    let minimal = tor_dims(&lambda, p, m, 4)?.dims;
                    match bar_tor_dims(&lambda, p, m, 4, &cap) {
                        Ok(bar) => {
                            compared += 1;
                            if bar.dims != minimal {
                                disagreements.push(format!(
                                    "({lambda}) p={q} {kind}: {minimal:?} vs {:?}",
                                    bar.dims
                                ));
                            }
                        }
                        Err(e) => unreachable.push(format!("({lambda}) p={q} {kind}: {e}")),
                    }
                }
            }
        }
    }
    Ok((
        disagreements.is_empty() && unreachable.is_empty(),
        format!(
            "{compared} comparisons, {} disagreements {disagreements:?}; {} not computable {unreachable:?}",
            disagreements.len(),
            unreachable.len()
        ),
    ))
}

fn suspension() -> Result<(bool, String)> {
    let mut ok = true;
    let mut parts = Vec::new();
    for (series, _) in growth_cases()? {
        let base = gamma_estimate(&series)?.gamma;
        let stable = (0..=10)
            .all(|i| gamma_estimate(&shift_series(&series, i)).is_ok_and(|e| e.gamma == base));
        ok &= stable;
        parts.push(format!("{} γ={base} stable={stable}", series.label));
    }
    Ok((ok, parts.join("; ")))
}
