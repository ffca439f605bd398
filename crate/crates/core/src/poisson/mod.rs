//! Poisson brackets on polynomial rings and the Lie–Rinehart data they induce.

pub mod lie_rinehart;
pub mod polyvector;
pub mod structure;
pub mod twist;

pub use lie_rinehart::{to_lie_rinehart, AxiomCheck, LieRinehartPresentation, Section};
pub use polyvector::{schouten_bracket, Polyvector, VectorField};
pub use structure::{
    hamiltonian_field, jacobi_by_expansion, jacobi_check, jacobiator, modular_field, JacobiVerdict, PoissonStructure,
};
pub use twist::{huebschmann_right_action, top_polyvector_module, twist_module, twist_via_antipode};
