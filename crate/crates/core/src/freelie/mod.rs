//! The multilinear part `Lie(n)` of the free Lie algebra over `F_p`.

mod assoc;
mod basis;
mod tree;

pub use assoc::{associative_expansion, normal_form_by_expansion};
pub use basis::{
    lyndon_basis, lyndon_words, normal_form, standard_bracketing, LieElement, Straightener,
    MAX_BASIS_ARITY,
};
pub use tree::BracketTree;

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::field::Prime;
use crate::linalg::Matrix;
use crate::oracle::{coxeter_positions, GModuleRep};
use crate::perm::Perm;

/// Largest arity for which dense action matrices are built.
pub const MAX_ACTION_ARITY: usize = 7;

/// Matrix of `σ` on `Lie(n)`; column `j` holds the coordinates of `σ` applied
/// to the `j`-th basis bracketing.
pub fn action_matrix(n: usize, p: Prime, sigma: &Perm) -> Result<Matrix> {
    if n > MAX_ACTION_ARITY {
        return Err(Error::capacity("Lie action arity", n, MAX_ACTION_ARITY));
    }
    if sigma.degree() != n {
        return Err(Error::invalid(format!(
            "permutation acts on {} points, expected {n}",
            sigma.degree()
        )));
    }
    let basis = lyndon_basis(n)?;
    let dim = basis.len();
    let mut st = Straightener::new(p);
    let mut m = Matrix::zeros(dim, dim);
    for (j, b) in basis.iter().enumerate() {
        let image = st.normal_form(&b.permuted(sigma), n)?;
        for (&i, &c) in &image.coeffs {
            m.set(i, j, c);
        }
    }
    Ok(m)
}

/// `Lie(n)` restricted to the Young subgroup `Σ_λ`.
pub fn lie_module_rep(n: usize, p: Prime, lambda: &Composition) -> Result<GModuleRep> {
    if lambda.total() != n {
        return Err(Error::invalid(format!(
            "composition {lambda} does not sum to {n}"
        )));
    }
    let dim = (1..n).product::<usize>().max(1);
    let gens = coxeter_positions(lambda)
        .into_iter()
        .map(|(a, b)| action_matrix(n, p, &Perm::transposition(n, a + 1, b + 1)))
        .collect::<Result<Vec<_>>>()?;
    GModuleRep::new(p, lambda.clone(), dim, gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prime(p: u32) -> Prime {
        Prime::new(p).unwrap()
    }

    #[test]
    fn transposition_examples() {
        let m = action_matrix(2, prime(3), &Perm::parse_cycles(2, "(1 2)").unwrap()).unwrap();
        assert_eq!(m.to_rows(), vec![vec![2]]);
        let m = action_matrix(3, prime(2), &Perm::parse_cycles(3, "(2 3)").unwrap()).unwrap();
        assert_eq!(m.to_rows(), vec![vec![1, 1], vec![0, 1]]);
        let m = action_matrix(4, prime(5), &Perm::identity(4)).unwrap();
        assert!(m.is_identity());
    }

    #[test]
    fn restricted_modules() {
        let c = |s: &str| s.parse::<Composition>().unwrap();
        let m = lie_module_rep(4, prime(2), &c("4")).unwrap();
        assert_eq!((m.dim, m.gens.len()), (6, 3));
        let m = lie_module_rep(4, prime(2), &c("2,2")).unwrap();
        assert_eq!((m.dim, m.gens.len()), (6, 2));
        let m = lie_module_rep(3, prime(3), &c("1,1,1")).unwrap();
        assert_eq!((m.dim, m.gens.len()), (2, 0));
        assert!(lie_module_rep(4, prime(2), &c("2,1")).is_err());
    }
}
