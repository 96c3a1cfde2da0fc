//! `Tor` from the normalized bar complex, independent of any chosen resolution.
//!
//! `C_n = k[(G∖1)^n] ⊗ M`, with
//! `d[g_1|…|g_n]⊗v = [g_2|…|g_n]⊗g_1^{-1}v + Σ (-1)^i […|g_i g_{i+1}|…]⊗v + (-1)^n [g_1|…|g_{n-1}]⊗v`,
//! where cells with an identity entry vanish.

use super::group::YoungGroup;
use super::module::GModuleRep;
use super::resolution::Capacity;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};

/// `dim Tor_m(k, M)` for `m = 0..=m_max` from the bar complex.
pub fn bar_tor_dims(
    group: &YoungGroup,
    module: &GModuleRep,
    rho: &[Matrix],
    m_max: usize,
    cap: &Capacity,
) -> Result<Vec<u64>> {
    let k = group.order() - 1;
    let d = module.dim;
    let chain_dim = |n: usize| -> Option<usize> { k.checked_pow(n as u32)?.checked_mul(d) };

    for n in 1..=m_max + 1 {
        let source = chain_dim(n)
            .ok_or_else(|| Error::capacity("bar complex size", usize::MAX, cap.bar_width))?;
        let target = chain_dim(n - 1).unwrap_or(usize::MAX);
        if target > cap.bar_width {
            return Err(Error::capacity("bar complex width", target, cap.bar_width));
        }
        let work = source as u128 * target as u128 * target as u128;
        if work > cap.bar_work as u128 {
            return Err(Error::capacity(
                "bar complex work",
                usize::try_from(work).unwrap_or(usize::MAX),
                usize::try_from(cap.bar_work).unwrap_or(usize::MAX),
            ));
        }
    }

    // ranks[n] = rank of d_n : C_n → C_{n-1}
    let mut ranks = vec![0usize; m_max + 2];
    for n in 1..=m_max + 1 {
        let target = chain_dim(n - 1).expect("checked above");
        let bound = target - ranks[n - 1];
        ranks[n] = boundary_rank(group, module, rho, n, bound);
    }
    Ok((0..=m_max)
        .map(|m| (chain_dim(m).expect("checked above") - ranks[m] - ranks[m + 1]) as u64)
        .collect())
}

fn boundary_rank(
    group: &YoungGroup,
    module: &GModuleRep,
    rho: &[Matrix],
    n: usize,
    bound: usize,
) -> usize {
    let p = module.p;
    let d = module.dim;
    let k = group.order() - 1;
    let width = k.pow(n as u32 - 1) * d;
    let mut span = Subspace::new(width, p);
    if bound == 0 {
        return 0;
    }
    let mut cell = vec![0usize; n];
    let minus_one = p.neg(1);
    'cells: for index in 0..k.pow(n as u32) {
        // digits of `index`, most significant first, as element indices 1..=k
        let mut rest = index;
        for slot in (0..n).rev() {
            cell[slot] = rest % k + 1;
            rest /= k;
        }
        let g1_inv = &rho[group.inv(cell[0])];
        for a in 0..d {
            let mut row = vec![0u32; width];
            let block =
                |c: &[usize]| -> usize { c.iter().fold(0, |acc, &g| acc * k + (g - 1)) * d };

            let b0 = block(&cell[1..]);
            for r in 0..d {
                row[b0 + r] = p.add(row[b0 + r], g1_inv.get(r, a));
            }
            let mut merged = Vec::with_capacity(n - 1);
            for i in 1..n {
                let prod = group.mul(cell[i - 1], cell[i]);
                if prod == 0 {
                    continue;
                }
                merged.clear();
                merged.extend_from_slice(&cell[..i - 1]);
                merged.push(prod);
                merged.extend_from_slice(&cell[i + 1..]);
                let b = block(&merged) + a;
                let sign = if i % 2 == 1 { minus_one } else { 1 };
                row[b] = p.add(row[b], sign);
            }
            let b_last = block(&cell[..n - 1]) + a;
            let sign = if n % 2 == 1 { minus_one } else { 1 };
            row[b_last] = p.add(row[b_last], sign);

            span.insert(row);
            if span.dim() == bound {
                break 'cells;
            }
        }
    }
    span.dim()
}
