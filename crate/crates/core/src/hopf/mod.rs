//! Finite checks of bialgebroid, translation-map, antipode and dualizing-module identities on
//! `A ⊗ A^op` for finite-dimensional `A` and on generators of `V(L)`.

pub mod enveloping;
pub mod finite_algebra;
pub mod linear;
pub mod report;
pub mod vl;

pub use enveloping::{enveloping_report, Enveloping};
pub use finite_algebra::{FiniteAlgebra, FiniteAlgebraSpec};
pub use report::{AxiomReport, CheckResult};
pub use vl::{vl_report, ReductionOrder, VLModel};
