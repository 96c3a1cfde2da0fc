//! `Tor` and `Ext` of the trivial module against a representation, read off a resolution.

use super::group::YoungGroup;
use super::module::GModuleRep;
use super::resolution::{GroupRingMatrix, Resolution};
use crate::field::Prime;
use crate::linalg::Matrix;

/// `dim M_G`, computed from the generators alone.
pub fn coinvariants_dim(module: &GModuleRep) -> usize {
    module.dim - relation_rank(module, false)
}

/// `dim M^G`.
pub fn invariants_dim(module: &GModuleRep) -> usize {
    module.dim - relation_rank(module, true)
}

// rank of the span of the columns (or rows) of all ρ(s) - I
fn relation_rank(module: &GModuleRep, common_kernel: bool) -> usize {
    let p = module.p;
    let d = module.dim;
    let mut rows = Vec::new();
    for s in &module.gens {
        let diff = s.add(&Matrix::identity(d).scale(p.neg(1), p), p);
        let m = if common_kernel {
            diff
        } else {
            diff.transpose()
        };
        rows.extend(m.to_rows());
    }
    if rows.is_empty() {
        return 0;
    }
    Matrix::from_rows(&rows, d).rank(p)
}

/// `Σ_g x[g] ρ(g)` (or `ρ(g^{-1})` with `antipode`).
fn act(x: &[u32], rho: &[Matrix], group: &YoungGroup, antipode: bool, p: Prime) -> Matrix {
    let d = rho[0].rows();
    let mut out = Matrix::zeros(d, d);
    for (g, &c) in x.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let h = if antipode { group.inv(g) } else { g };
        out = out.add(&rho[h].scale(c, p), p);
    }
    out
}

/// `d ⊗_G M` as a matrix `M^{rows} → M^{cols}` (column convention).
fn tensored(d: &GroupRingMatrix, rho: &[Matrix], group: &YoungGroup, p: Prime) -> Matrix {
    let dim = rho[0].rows();
    let mut out = Matrix::zeros(d.cols * dim, d.rows * dim);
    for i in 0..d.rows {
        for j in 0..d.cols {
            let block = act(d.entry(i, j), rho, group, true, p);
            place(&mut out, &block, j * dim, i * dim);
        }
    }
    out
}

/// `Hom_G(d, M)` as a matrix `M^{cols} → M^{rows}` (column convention).
fn hom(d: &GroupRingMatrix, rho: &[Matrix], group: &YoungGroup, p: Prime) -> Matrix {
    let dim = rho[0].rows();
    let mut out = Matrix::zeros(d.rows * dim, d.cols * dim);
    for i in 0..d.rows {
        for j in 0..d.cols {
            let block = act(d.entry(i, j), rho, group, false, p);
            place(&mut out, &block, i * dim, j * dim);
        }
    }
    out
}

fn place(out: &mut Matrix, block: &Matrix, r0: usize, c0: usize) {
    for r in 0..block.rows() {
        for c in 0..block.cols() {
            out.set(r0 + r, c0 + c, block.get(r, c));
        }
    }
}

/// `dim Tor_m(k, M)` for `m ≤ res.length() - 1`, all degrees from the resolution.
pub(crate) fn tor_from_resolution(
    res: &Resolution,
    group: &YoungGroup,
    module: &GModuleRep,
    rho: &[Matrix],
) -> Vec<u64> {
    let p = module.p;
    let d = module.dim;
    let top = res.length();
    if let Some(e) = &res.cover_idempotent {
        let mut out = vec![0u64; top];
        out[0] = act(e, rho, group, true, p).rank(p) as u64;
        return out;
    }
    let ranks: Vec<usize> = res
        .differentials
        .iter()
        .map(|dn| tensored(dn, rho, group, p).rank(p))
        .collect();
    (0..top)
        .map(|m| {
            let incoming = if m == 0 { 0 } else { ranks[m - 1] };
            (res.ranks[m] * d - incoming - ranks[m]) as u64
        })
        .collect()
}

/// `dim Ext^m(k, M)` for `m ≤ res.length() - 1`.
pub(crate) fn ext_from_resolution(
    res: &Resolution,
    group: &YoungGroup,
    module: &GModuleRep,
    rho: &[Matrix],
) -> Vec<u64> {
    let p = module.p;
    let d = module.dim;
    let top = res.length();
    if let Some(e) = &res.cover_idempotent {
        let mut out = vec![0u64; top];
        out[0] = act(e, rho, group, false, p).rank(p) as u64;
        return out;
    }
    let ranks: Vec<usize> = res
        .differentials
        .iter()
        .map(|dn| hom(dn, rho, group, p).rank(p))
        .collect();
    (0..top)
        .map(|m| {
            let incoming = if m == 0 { 0 } else { ranks[m - 1] };
            (res.ranks[m] * d - incoming - ranks[m]) as u64
        })
        .collect()
}
