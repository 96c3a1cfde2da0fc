//! Jacobson radical of `F_p Σ_λ` by the characteristic-p trace criterion.
//!
//! Starting from `I_{-1} = A` (the regular representation, an algebra of
//! `N × N` matrices with `N = |G|`), each round keeps the elements `a` of the
//! previous ideal with `g_i(ab) = 0` for every `b ∈ A`, where
//! `g_i(a) = Tr(â^{p^i}) / p^i mod p` and `â` is the integer lift of `a`.
//! On `I_{i-1}` the map `g_i` is additive, so each round is a kernel
//! computation. After round `⌊log_p N⌋` the ideal is the radical.
//!
//! In the regular representation the lift of `ρ(z)` is `ρ(ẑ)` for the lifted
//! group-ring element `ẑ`, so `Tr(ρ(ẑ)^k) = |G| · (ẑ^k)_1` and the powers
//! can be taken in `(Z/p^{i+1})[G]`.

use super::group::YoungGroup;
use crate::field::Prime;
use crate::linalg::{Matrix, Subspace};

/// Basis of `J(F_p Σ_λ)` as group-ring coefficient vectors.
pub fn radical_basis(group: &YoungGroup, p: Prime) -> Vec<Vec<u32>> {
    let n = group.order();
    if !n.is_multiple_of(p.get() as usize) {
        return Vec::new();
    }
    let q = p.get() as u64;
    let mut rounds = 0u32;
    while q.pow(rounds + 1) <= n as u64 {
        rounds += 1;
    }

    let mut ideal: Vec<Vec<u32>> = (0..n).map(|g| unit(n, g)).collect();
    for i in 0..=rounds {
        if ideal.is_empty() {
            break;
        }
        let modulus = q.pow(i + 1);
        let divisor = q.pow(i);
        // pairing[k][g] = g_i(a_k · g)
        let pairing: Vec<Vec<u32>> = ideal
            .iter()
            .map(|a| {
                (0..n)
                    .map(|g| {
                        let ag = right_translate(group, a, g);
                        trace_functional(group, &ag, q, i, modulus, divisor)
                    })
                    .collect()
            })
            .collect();
        let m = Matrix::from_rows(&pairing, n);
        let kernel = m.left_kernel(p);
        ideal = kernel.into_iter().map(|c| combine(&ideal, &c, p)).collect();
        // keep an echelon basis
        ideal = Subspace::from_vectors(n, p, ideal).basis().to_vec();
    }
    ideal
}

fn trace_functional(
    group: &YoungGroup,
    a: &[u32],
    q: u64,
    i: u32,
    modulus: u64,
    divisor: u64,
) -> u32 {
    let mut z: Vec<u64> = a.iter().map(|&x| x as u64).collect();
    for _ in 0..i {
        z = ring_power(group, &z, q, modulus);
    }
    let trace = (group.order() as u64 % modulus) * z[0] % modulus;
    debug_assert_eq!(
        trace % divisor,
        0,
        "trace not divisible on the current ideal"
    );
    ((trace / divisor) % q) as u32
}

// z^e in (Z/modulus)[G]
fn ring_power(group: &YoungGroup, z: &[u64], e: u64, modulus: u64) -> Vec<u64> {
    let mut acc = z.to_vec();
    for _ in 1..e {
        acc = ring_mul_mod(group, &acc, z, modulus);
    }
    acc
}

fn ring_mul_mod(group: &YoungGroup, a: &[u64], b: &[u64], modulus: u64) -> Vec<u64> {
    let n = group.order();
    let mut acc = vec![0u64; n];
    for (g, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (h, &y) in b.iter().enumerate() {
            if y != 0 {
                let gh = group.mul(g, h);
                acc[gh] = (acc[gh] + x * y) % modulus;
            }
        }
    }
    acc
}

// a · g as a coefficient vector
fn right_translate(group: &YoungGroup, a: &[u32], g: usize) -> Vec<u32> {
    let mut out = vec![0u32; a.len()];
    for (h, &x) in a.iter().enumerate() {
        if x != 0 {
            out[group.mul(h, g)] = x;
        }
    }
    out
}

fn combine(basis: &[Vec<u32>], coeffs: &[u32], p: Prime) -> Vec<u32> {
    let mut out = vec![0u32; basis[0].len()];
    for (b, &c) in basis.iter().zip(coeffs) {
        crate::linalg::axpy(&mut out, b, c, p);
    }
    out
}

fn unit(n: usize, i: usize) -> Vec<u32> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

/// Generators of the radical as a right ideal, chosen greedily from `basis`.
pub fn right_ideal_generators(group: &YoungGroup, p: Prime, basis: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let n = group.order();
    let mut span = Subspace::new(n, p);
    let mut gens = Vec::new();
    for b in basis {
        if span.contains(b) {
            continue;
        }
        gens.push(b.clone());
        for g in 0..n {
            span.insert(right_translate(group, b, g));
        }
    }
    gens
}

/// Smallest `k` with `J^k = 0`, or `None` if the powers stall before vanishing.
pub fn nilpotency_index(group: &YoungGroup, p: Prime, basis: &[Vec<u32>]) -> Option<usize> {
    let n = group.order();
    if basis.is_empty() {
        return Some(1);
    }
    let mut power: Vec<Vec<u32>> = basis.to_vec();
    let mut k = 1;
    loop {
        let mut next = Subspace::new(n, p);
        for a in &power {
            for b in basis {
                next.insert(group.ring_mul(a, b, p));
            }
        }
        k += 1;
        if next.dim() == 0 {
            return Some(k);
        }
        if next.dim() == power.len() {
            return None;
        }
        power = next.basis().to_vec();
    }
}

/// Whether the span of `basis` is a two-sided ideal.
pub fn is_two_sided_ideal(group: &YoungGroup, p: Prime, basis: &[Vec<u32>]) -> bool {
    let n = group.order();
    let span = Subspace::from_vectors(n, p, basis.iter().cloned());
    let gens: Vec<Vec<u32>> = group
        .generator_elements()
        .iter()
        .map(|&s| unit(n, s))
        .collect();
    basis.iter().all(|a| {
        gens.iter().all(|s| {
            span.contains(&group.ring_mul(s, a, p)) && span.contains(&group.ring_mul(a, s, p))
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::Composition;

    fn radical_dim(parts: Vec<usize>, p: u32) -> usize {
        let g = YoungGroup::new(&Composition::new(parts).unwrap(), 1000).unwrap();
        radical_basis(&g, Prime::new(p).unwrap()).len()
    }

    #[test]
    fn known_radical_dimensions() {
        // |G| minus the sum of squares of simple module dimensions
        assert_eq!(radical_dim(vec![2], 2), 1);
        assert_eq!(radical_dim(vec![3], 3), 4);
        assert_eq!(radical_dim(vec![2], 3), 0);
        assert_eq!(radical_dim(vec![3], 2), 1);
        assert_eq!(radical_dim(vec![4], 2), 19);
        assert_eq!(radical_dim(vec![4], 3), 4);
        // p-groups: the augmentation ideal
        assert_eq!(radical_dim(vec![2, 2], 2), 3);
        assert_eq!(radical_dim(vec![2, 2, 2], 2), 7);
        // Σ_3 × Σ_2 at p = 3: J(kΣ_3) ⊗ kΣ_2
        assert_eq!(radical_dim(vec![3, 2], 3), 8);
    }

    #[test]
    fn radical_is_nilpotent_ideal() {
        for (parts, p) in [
            (vec![4], 2u32),
            (vec![4], 3),
            (vec![3], 3),
            (vec![2, 2], 2),
            (vec![3, 1], 2),
        ] {
            let g = YoungGroup::new(&Composition::new(parts).unwrap(), 1000).unwrap();
            let p = Prime::new(p).unwrap();
            let j = radical_basis(&g, p);
            assert!(is_two_sided_ideal(&g, p, &j));
            assert!(nilpotency_index(&g, p, &j).is_some());
            let gens = right_ideal_generators(&g, p, &j);
            assert!(!gens.is_empty() && gens.len() <= j.len());
        }
    }
}
