//! Free resolutions of the trivial module over `F_p Σ_λ`.
//!
//! `F_n = (kG)^{r_n}`; a vector in `F_n` is stored as `r_n` consecutive blocks
//! of `|G|` group-ring coefficients. Each step covers the kernel of the
//! previous differential by generators chosen greedily modulo `J·K`, where
//! `J` is the Jacobson radical, so the rank stays near the minimum.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use super::group::YoungGroup;
use super::radical::{radical_basis, right_ideal_generators};
use crate::composition::Composition;
use crate::error::{Error, Partial, Result};
use crate::field::Prime;
use crate::linalg::{Matrix, Subspace};

/// A matrix whose entries are group-ring elements; entry `(i, j)` occupies
/// `data[(i * cols + j) * order ..][..order]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupRingMatrix {
    pub rows: usize,
    pub cols: usize,
    pub order: usize,
    pub data: Vec<u32>,
}

impl GroupRingMatrix {
    pub fn zeros(rows: usize, cols: usize, order: usize) -> Self {
        GroupRingMatrix {
            rows,
            cols,
            order,
            data: vec![0; rows * cols * order],
        }
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> &[u32] {
        let start = (i * self.cols + j) * self.order;
        &self.data[start..start + self.order]
    }

    /// Row `i` as a vector of `F_{cols}`.
    pub fn row_vector(&self, i: usize) -> &[u32] {
        let len = self.cols * self.order;
        &self.data[i * len..(i + 1) * len]
    }

    pub fn mul(&self, other: &GroupRingMatrix, group: &YoungGroup, p: Prime) -> GroupRingMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = GroupRingMatrix::zeros(self.rows, other.cols, self.order);
        for i in 0..self.rows {
            for k in 0..other.cols {
                let mut acc = vec![0u32; self.order];
                for j in 0..self.cols {
                    let prod = group.ring_mul(self.entry(i, j), other.entry(j, k), p);
                    for (a, b) in acc.iter_mut().zip(prod) {
                        *a = p.add(*a, b);
                    }
                }
                let start = (i * other.cols + k) * self.order;
                out.data[start..start + self.order].copy_from_slice(&acc);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Resolution {
    pub p: Prime,
    pub lambda: Composition,
    pub group_order: usize,
    /// Number of summands of `P_n`.
    pub ranks: Vec<usize>,
    /// `differentials[n - 1]` is `d_n : P_n → P_{n-1}`, row `i` the image of the `i`-th generator.
    pub differentials: Vec<GroupRingMatrix>,
    /// When set, `P_0 = kG·e` for this idempotent and the resolution stops there.
    pub cover_idempotent: Option<Vec<u32>>,
}

impl Resolution {
    pub fn length(&self) -> usize {
        self.ranks.len() - 1
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("resolution serializes")
    }

    fn truncated(&self, length: usize) -> Resolution {
        Resolution {
            p: self.p,
            lambda: self.lambda.clone(),
            group_order: self.group_order,
            ranks: self.ranks[..=length].to_vec(),
            differentials: self.differentials[..length].to_vec(),
            cover_idempotent: self.cover_idempotent.clone(),
        }
    }

    /// Checks `ε ∘ d_1 = 0` and `d_n ∘ d_{n+1} = 0`.
    pub fn composes_to_zero(&self, group: &YoungGroup) -> bool {
        if let Some(d1) = self.differentials.first() {
            let augmented_ok = (0..d1.rows).all(|i| {
                let s: u64 = d1.entry(i, 0).iter().map(|&x| x as u64).sum();
                s.is_multiple_of(self.p.get() as u64)
            });
            if !augmented_ok {
                return false;
            }
        }
        self.differentials
            .windows(2)
            .all(|w| w[1].mul(&w[0], group, self.p).is_zero())
    }

    /// Checks exactness at every interior term by dimension counting:
    /// `dim ker d_n = rank d_{n+1}` as `F_p`-linear maps.
    pub fn is_exact(&self, group: &YoungGroup) -> bool {
        if self.cover_idempotent.is_some() {
            return true;
        }
        let order = group.order();
        let mut kernel_dims = Vec::new();
        let mut image_dims = Vec::new();
        // augmentation: kernel has dimension |G| - 1
        kernel_dims.push(order - 1);
        for d in &self.differentials {
            let m = linear_map(d, group, self.p);
            let rank = m.rank(self.p);
            image_dims.push(rank);
            kernel_dims.push(d.rows * order - rank);
        }
        image_dims
            .iter()
            .zip(&kernel_dims)
            .all(|(im, ker)| im == ker)
    }
}

/// Hard limits for the brute-force computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Capacity {
    pub group_order: usize,
    /// Largest `F_p`-dimension `r_n · |G|` of a resolution term.
    pub width: usize,
    /// Largest bar-complex target dimension held in dense echelon form.
    pub bar_width: usize,
    /// Budget for `rows × width²` in a bar-complex rank computation.
    pub bar_work: u64,
}

impl Default for Capacity {
    fn default() -> Self {
        Capacity {
            group_order: 1000,
            width: 5000,
            bar_width: 20_000,
            bar_work: 1_000_000_000_000,
        }
    }
}

/// `F_p`-linear matrix of `d : F_rows → F_cols` in the row convention
/// (row `(i, h)` is the image of `h·e_i`).
pub(crate) fn linear_map(d: &GroupRingMatrix, group: &YoungGroup, p: Prime) -> Matrix {
    let order = group.order();
    let rows: Vec<Vec<u32>> = (0..d.rows)
        .flat_map(|i| {
            let gen = d.row_vector(i);
            (0..order).map(move |h| left_translate(group, h, gen))
        })
        .collect();
    let _ = p;
    Matrix::from_rows(&rows, d.cols * order)
}

/// `h · v` for `v ∈ (kG)^r`.
pub(crate) fn left_translate(group: &YoungGroup, h: usize, v: &[u32]) -> Vec<u32> {
    let order = group.order();
    let mut out = vec![0u32; v.len()];
    for (block_in, block_out) in v.chunks(order).zip(out.chunks_mut(order)) {
        for (g, &x) in block_in.iter().enumerate() {
            if x != 0 {
                block_out[group.mul(h, g)] = x;
            }
        }
    }
    out
}

/// `x · v` for a group-ring element `x`, blockwise.
fn left_multiply(group: &YoungGroup, x: &[u32], v: &[u32], p: Prime) -> Vec<u32> {
    let order = group.order();
    let mut out = Vec::with_capacity(v.len());
    for block in v.chunks(order) {
        out.extend(group.ring_mul(x, block, p));
    }
    out
}

type CacheKey = (Composition, u32);

fn cache() -> &'static Mutex<HashMap<CacheKey, Arc<Resolution>>> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, Arc<Resolution>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// A resolution of the trivial module of length `length`.
///
/// When `p ∤ |G|` the trivial module is projective and the result is the
/// single term `kG·e`, `e = |G|^{-1} Σ g`. Otherwise it is a free resolution.
/// Results are cached per `(λ, p)`.
pub fn resolve_trivial(
    group: &YoungGroup,
    p: Prime,
    length: usize,
    cap: &Capacity,
) -> Result<Resolution> {
    let order = group.order();
    if !order.is_multiple_of(p.get() as usize) {
        let inv = p.inv((order % p.get() as usize) as u32);
        let mut ranks = vec![0; length + 1];
        ranks[0] = 1;
        let differentials = (1..=length)
            .map(|n| GroupRingMatrix::zeros(0, usize::from(n == 1), order))
            .collect();
        return Ok(Resolution {
            p,
            lambda: group.lambda().clone(),
            group_order: order,
            ranks,
            differentials,
            cover_idempotent: Some(vec![inv; order]),
        });
    }
    resolve_trivial_free(group, p, length, cap)
}

/// The free resolution with greedily minimized generators, even when `p ∤ |G|`.
pub fn resolve_trivial_free(
    group: &YoungGroup,
    p: Prime,
    length: usize,
    cap: &Capacity,
) -> Result<Resolution> {
    let key = (group.lambda().clone(), p.get());
    if let Some(hit) = cache().lock().expect("cache lock").get(&key).cloned() {
        if hit.length() >= length {
            let res = hit.truncated(length);
            check_width(&res, cap)?;
            return Ok(res);
        }
    }
    let res = build_free(group, p, length, cap)?;
    let mut guard = cache().lock().expect("cache lock");
    let longer = guard.get(&key).is_some_and(|c| c.length() >= res.length());
    if !longer {
        guard.insert(key, Arc::new(res.clone()));
    }
    Ok(res)
}

fn check_width(res: &Resolution, cap: &Capacity) -> Result<()> {
    for &r in &res.ranks {
        let w = r * res.group_order;
        if w > cap.width {
            return Err(Error::capacity("resolution width", w, cap.width));
        }
    }
    Ok(())
}

pub(crate) fn build_free(
    group: &YoungGroup,
    p: Prime,
    length: usize,
    cap: &Capacity,
) -> Result<Resolution> {
    let order = group.order();
    if order > cap.width {
        return Err(Error::capacity("resolution width", order, cap.width));
    }
    let radical = radical_basis(group, p);
    let radical_gens = right_ideal_generators(group, p, &radical);

    let mut ranks = vec![1usize];
    let mut differentials = Vec::with_capacity(length);
    // augmentation kernel: g - 1 for g ≠ 1
    let mut kernel: Vec<Vec<u32>> = (1..order)
        .map(|g| {
            let mut v = vec![0u32; order];
            v[g] = 1;
            v[0] = p.neg(1);
            v
        })
        .collect();

    for n in 0..length {
        let r_prev = ranks[n];
        if kernel.is_empty() {
            ranks.push(0);
            differentials.push(GroupRingMatrix::zeros(0, r_prev, order));
            continue;
        }
        let gens = cover_generators(group, p, &kernel, &radical_gens, r_prev * order);
        let r = gens.len();
        if r * order > cap.width {
            let partial = Resolution {
                p,
                lambda: group.lambda().clone(),
                group_order: order,
                ranks: ranks.clone(),
                differentials: differentials.clone(),
                cover_idempotent: None,
            };
            return Err(Error::capacity("resolution width", r * order, cap.width)
                .with_partial(Partial::Resolution(partial)));
        }
        let d = GroupRingMatrix {
            rows: r,
            cols: r_prev,
            order,
            data: gens.concat(),
        };
        if n + 1 < length {
            kernel = linear_map(&d, group, p).left_kernel(p);
        }
        ranks.push(r);
        differentials.push(d);
    }

    Ok(Resolution {
        p,
        lambda: group.lambda().clone(),
        group_order: order,
        ranks,
        differentials,
        cover_idempotent: None,
    })
}

/// Elements of `kernel` that generate it as a module: each is taken only if
/// it is not already in `J·K` plus the submodule generated so far.
fn cover_generators(
    group: &YoungGroup,
    p: Prime,
    kernel: &[Vec<u32>],
    radical_gens: &[Vec<u32>],
    width: usize,
) -> Vec<Vec<u32>> {
    let mut span = Subspace::new(width, p);
    for x in radical_gens {
        for k in kernel {
            span.insert(left_multiply(group, x, k, p));
        }
    }
    let target = kernel.len();
    let mut gens = Vec::new();
    for k in kernel {
        if span.dim() == target {
            break;
        }
        if span.contains(k) {
            continue;
        }
        gens.push(k.clone());
        for h in 0..group.order() {
            span.insert(left_translate(group, h, k));
        }
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup(parts: Vec<usize>, p: u32) -> (YoungGroup, Prime) {
        let g = YoungGroup::new(&Composition::new(parts).unwrap(), 1000).unwrap();
        (g, Prime::new(p).unwrap())
    }

    #[test]
    fn cyclic_of_order_two_is_periodic() {
        let (g, p) = setup(vec![2], 2);
        let res = resolve_trivial(&g, p, 5, &Capacity::default()).unwrap();
        assert_eq!(res.ranks, vec![1; 6]);
        assert!(res.composes_to_zero(&g));
        assert!(res.is_exact(&g));
    }

    #[test]
    fn coprime_order_gives_projective_trivial_module() {
        let (g, p) = setup(vec![2], 3);
        let res = resolve_trivial(&g, p, 5, &Capacity::default()).unwrap();
        assert_eq!(res.ranks, vec![1, 0, 0, 0, 0, 0]);
        let (g, p) = setup(vec![1, 1], 5);
        assert_eq!(
            resolve_trivial(&g, p, 3, &Capacity::default())
                .unwrap()
                .ranks,
            vec![1, 0, 0, 0]
        );
    }

    #[test]
    fn symmetric_group_resolutions_are_exact() {
        for (parts, q) in [
            (vec![3], 3u32),
            (vec![3], 2),
            (vec![4], 2),
            (vec![2, 2], 2),
            (vec![4], 3),
        ] {
            let (g, p) = setup(parts, q);
            let res = resolve_trivial_free(&g, p, 4, &Capacity::default()).unwrap();
            assert!(res.composes_to_zero(&g));
            assert!(res.is_exact(&g));
        }
    }

    #[test]
    fn width_capacity_reports_partial() {
        let (g, p) = setup(vec![4], 2);
        let cap = Capacity {
            width: 48,
            ..Capacity::default()
        };
        match build_free(&g, p, 8, &cap) {
            Err(Error::Capacity {
                partial: Some(part),
                ..
            }) => {
                assert!(matches!(*part, Partial::Resolution(_)));
            }
            other => panic!("expected capacity error, got {other:?}"),
        }
    }
}
