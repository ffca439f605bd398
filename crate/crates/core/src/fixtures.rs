//! Builtin Poisson fixtures and coefficient modules.

use crate::exact::{parse_poly, CoreError, Poly};
use crate::homology::FlatLeftModule;
use crate::modules::zero_matrix;
use crate::poisson::{LieRinehartPresentation, PoissonStructure};

/// A named bracket candidate; `valid` is false for deliberate Jacobi counterexamples.
pub struct PoissonFixture {
    pub name: &'static str,
    pub variables: &'static [&'static str],
    pub upper: &'static [(usize, usize, &'static str)],
    pub degree: Option<u32>,
    pub valid: bool,
}

pub const POISSON_FIXTURES: &[PoissonFixture] = &[
    PoissonFixture { name: "zero2", variables: &["x", "y"], upper: &[], degree: Some(2), valid: true },
    PoissonFixture { name: "symp2", variables: &["x", "y"], upper: &[(0, 1, "1")], degree: Some(0), valid: true },
    PoissonFixture { name: "aff1", variables: &["x", "y"], upper: &[(0, 1, "y")], degree: Some(1), valid: true },
    PoissonFixture {
        name: "so3",
        variables: &["x", "y", "z"],
        upper: &[(0, 1, "z"), (1, 2, "x"), (0, 2, "-y")],
        degree: Some(1),
        valid: true,
    },
    PoissonFixture { name: "quad2", variables: &["x", "y"], upper: &[(0, 1, "x*y")], degree: Some(2), valid: true },
    PoissonFixture {
        name: "jfail",
        variables: &["x", "y", "z"],
        upper: &[(0, 1, "y"), (1, 2, "z"), (0, 2, "-x")],
        degree: Some(1),
        valid: false,
    },
];

pub fn poisson_fixture(name: &str) -> Option<&'static PoissonFixture> {
    POISSON_FIXTURES.iter().find(|f| f.name == name)
}

impl PoissonFixture {
    /// The bracket; only antisymmetry and homogeneity are enforced here.
    pub fn candidate(&self) -> PoissonStructure {
        PoissonStructure::from_upper(self.variables, self.upper, self.degree).expect("builtin fixture is well formed")
    }

    pub fn structure(&self) -> Result<PoissonStructure, CoreError> {
        let c = self.candidate();
        PoissonStructure::new(c.vars().clone(), c.matrix().to_vec(), self.degree)
    }
}

/// Rank-2 flat module on `symp2`: weights `[0, 2]`, `Θ_dx = x N`, `Θ_dy = -y N`, `N g_2 = g_1`.
pub fn symp2_rank2_module(lr: &LieRinehartPresentation) -> FlatLeftModule {
    let v = lr.vars();
    let mut tx = zero_matrix(v, 2);
    let mut ty = zero_matrix(v, 2);
    tx[0][1] = Poly::var(v, 0);
    ty[0][1] = parse_poly("-y", v).expect("literal");
    FlatLeftModule {
        generator_names: vec!["g1".into(), "g2".into()],
        generator_weights: vec![0, 2],
        connections: vec![tx, ty],
    }
}
