//! Brute-force group homology of Young subgroups over `F_p`.

mod bar;
mod fit;
mod group;
mod module;
mod radical;
mod resolution;
mod tor;

pub use fit::FitReport;
pub use group::YoungGroup;
pub use module::{coxeter_positions, GModuleRep};
pub use radical::{is_two_sided_ideal, nilpotency_index, radical_basis};
pub use resolution::{Capacity, GroupRingMatrix, Resolution};
pub use tor::{coinvariants_dim, invariants_dim};

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::field::Prime;
use crate::freelie::lie_module_rep;
use crate::linalg::Matrix;
use crate::words::{dimension_series, DimSeries};

fn group(lambda: &Composition, cap: &Capacity) -> Result<YoungGroup> {
    YoungGroup::new(lambda, cap.group_order)
}

/// The regular representation of `F_p Σ_λ`.
pub fn group_algebra(lambda: &Composition, p: Prime) -> Result<GModuleRep> {
    group_algebra_with(lambda, p, &Capacity::default())
}

pub fn group_algebra_with(lambda: &Composition, p: Prime, cap: &Capacity) -> Result<GModuleRep> {
    let g = group(lambda, cap)?;
    let n = g.order();
    let gens = g
        .generator_elements()
        .iter()
        .map(|&s| {
            let mut m = Matrix::zeros(n, n);
            for h in 0..n {
                m.set(g.mul(s, h), h, 1);
            }
            m
        })
        .collect();
    GModuleRep::new(p, lambda.clone(), n, gens)
}

/// A basis of the Jacobson radical of `F_p Σ_λ`, as coefficient vectors over
/// the group elements in [`YoungGroup::elements`] order.
pub fn jacobson_radical(lambda: &Composition, p: Prime) -> Result<Vec<Vec<u32>>> {
    let g = group(lambda, &Capacity::default())?;
    Ok(radical_basis(&g, p))
}

/// A resolution of the trivial module of the given length.
pub fn resolution(lambda: &Composition, p: Prime, length: usize) -> Result<Resolution> {
    resolution_with(lambda, p, length, &Capacity::default())
}

pub fn resolution_with(
    lambda: &Composition,
    p: Prime,
    length: usize,
    cap: &Capacity,
) -> Result<Resolution> {
    resolution::resolve_trivial(&group(lambda, cap)?, p, length, cap)
}

/// A free resolution, never shortened to a projective cover.
pub fn free_resolution_with(
    lambda: &Composition,
    p: Prime,
    length: usize,
    cap: &Capacity,
) -> Result<Resolution> {
    resolution::resolve_trivial_free(&group(lambda, cap)?, p, length, cap)
}

/// Like [`free_resolution_with`] but bypassing the cache.
pub fn fresh_free_resolution_with(
    lambda: &Composition,
    p: Prime,
    length: usize,
    cap: &Capacity,
) -> Result<Resolution> {
    resolution::build_free(&group(lambda, cap)?, p, length, cap)
}

fn check_module(lambda: &Composition, p: Prime, module: &GModuleRep) -> Result<()> {
    if module.p != p {
        return Err(Error::invalid(format!(
            "module is over F_{} but p = {p}",
            module.p
        )));
    }
    if &module.lambda != lambda {
        return Err(Error::invalid(format!(
            "module is over Σ_({}) but λ = ({lambda})",
            module.lambda
        )));
    }
    Ok(())
}

fn series_label(kind: &str, lambda: &Composition, p: Prime) -> String {
    format!("{kind},p={p},lambda={lambda}")
}

/// `dim H_m(Σ_λ, M)` for `m = 0..=m_max`; degree 0 is the coinvariants.
pub fn tor_dims(
    lambda: &Composition,
    p: Prime,
    module: &GModuleRep,
    m_max: usize,
) -> Result<DimSeries> {
    tor_dims_with(lambda, p, module, m_max, &Capacity::default())
}

pub fn tor_dims_with(
    lambda: &Composition,
    p: Prime,
    module: &GModuleRep,
    m_max: usize,
    cap: &Capacity,
) -> Result<DimSeries> {
    check_module(lambda, p, module)?;
    let g = group(lambda, cap)?;
    let res = resolution::resolve_trivial(&g, p, m_max + 1, cap)?;
    let rho = module.group_matrices(&g)?;
    let mut dims = tor::tor_from_resolution(&res, &g, module, &rho);
    dims[0] = coinvariants_dim(module) as u64;
    Ok(DimSeries::new(p, series_label("tor", lambda, p), dims))
}

/// `dim H_m` from a free resolution, including degree 0, with no shortcuts.
pub fn tor_dims_free(
    lambda: &Composition,
    p: Prime,
    module: &GModuleRep,
    m_max: usize,
    cap: &Capacity,
) -> Result<DimSeries> {
    check_module(lambda, p, module)?;
    let g = group(lambda, cap)?;
    let res = resolution::resolve_trivial_free(&g, p, m_max + 1, cap)?;
    let rho = module.group_matrices(&g)?;
    let dims = tor::tor_from_resolution(&res, &g, module, &rho);
    Ok(DimSeries::new(p, series_label("tor", lambda, p), dims))
}

/// `dim H^m(Σ_λ, M)` from the cochain complex `Hom(P_•, M)`.
pub fn cohomology_dims(
    lambda: &Composition,
    p: Prime,
    module: &GModuleRep,
    m_max: usize,
) -> Result<DimSeries> {
    cohomology_dims_with(lambda, p, module, m_max, &Capacity::default())
}

pub fn cohomology_dims_with(
    lambda: &Composition,
    p: Prime,
    module: &GModuleRep,
    m_max: usize,
    cap: &Capacity,
) -> Result<DimSeries> {
    check_module(lambda, p, module)?;
    let g = group(lambda, cap)?;
    let res = resolution::resolve_trivial(&g, p, m_max + 1, cap)?;
    let rho = module.group_matrices(&g)?;
    let dims = tor::ext_from_resolution(&res, &g, module, &rho);
    Ok(DimSeries::new(p, series_label("ext", lambda, p), dims))
}

/// `dim H_m(Σ_λ, M)` from the normalized bar complex.
pub fn bar_tor_dims(
    lambda: &Composition,
    p: Prime,
    module: &GModuleRep,
    m_max: usize,
    cap: &Capacity,
) -> Result<DimSeries> {
    check_module(lambda, p, module)?;
    let g = group(lambda, cap)?;
    let rho = module.group_matrices(&g)?;
    let dims = bar::bar_tor_dims(&g, module, &rho, m_max, cap)?;
    Ok(DimSeries::new(p, series_label("bar", lambda, p), dims))
}

/// Fits `H_m(Σ_λ, Lie(n))` by `Σ_{r ≤ j(λ)} C_r · dimension(p, r, m)`.
pub fn decomposition_fit(
    n: usize,
    p: Prime,
    lambda: &Composition,
    m_max: usize,
) -> Result<FitReport> {
    decomposition_fit_with(n, p, lambda, m_max, &Capacity::default())
}

pub fn decomposition_fit_with(
    n: usize,
    p: Prime,
    lambda: &Composition,
    m_max: usize,
    cap: &Capacity,
) -> Result<FitReport> {
    let module = lie_module_rep(n, p, lambda)?;
    let oracle_dims = tor_dims_with(lambda, p, &module, m_max, cap)?.dims;
    let j = p.valuation(lambda.gcd() as u64);
    let basis = (0..=j as usize)
        .map(|r| Ok(dimension_series(p, r, m_max as u64)?.dims))
        .collect::<Result<Vec<_>>>()?;
    let (coefficients, residual, exact_solutions) = fit::fit(&oracle_dims, &basis);
    let fitted = (0..=m_max)
        .map(|m| coefficients.iter().zip(&basis).map(|(c, b)| c * b[m]).sum())
        .collect();
    Ok(FitReport {
        n,
        p,
        lambda: lambda.clone(),
        j,
        m_max,
        oracle_dims,
        basis,
        all_positive: coefficients.iter().all(|&c| c >= 1),
        coefficients,
        fitted,
        exact: residual == 0,
        residual,
        exact_solutions,
    })
}
