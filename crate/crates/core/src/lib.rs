//! Homology of symmetric groups with coefficients in the Lie module.
//!
//! - [`words`]: counts of admissible Dyer-Lashof words by degree
//! - [`growth`]: polynomial growth estimates and explicit lower-bound families
//! - [`freelie`]: the Lyndon basis of `Lie(n)` and its `Σ_n` action
//! - [`oracle`]: brute-force `Tor`/`Ext` over Young subgroups
//! - [`complexity`]: complexity of `Lie(n)` and its branching version

pub mod checks;
pub mod complexity;
pub mod composition;
pub mod error;
pub mod field;
pub mod freelie;
pub mod growth;
pub mod linalg;
pub mod oracle;
pub mod perm;
pub mod words;

pub use composition::Composition;
pub use error::{Error, Partial, Result};
pub use field::Prime;
pub use perm::Perm;
pub use words::DimSeries;
