//! Exact computation of graded Poisson and Hochschild (co)homology of polynomial algebras,
//! twisted Poincaré duality reports, and mechanical checks of Hopf algebroid identities.

pub mod error;
pub mod exact;
pub mod fixtures;
pub mod hochschild;
pub mod homology;
pub mod hopf;
pub mod modules;
pub mod poisson;

pub use error::CoreError;
pub use exact::{Poly, Rational, SparseMatrix, Variables};
