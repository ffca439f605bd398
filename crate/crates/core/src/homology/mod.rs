//! Rinehart (co)homology per weight and the twisted duality comparison.

pub mod complex;
pub mod rinehart;

pub use complex::{
    betti_table, check_square_zero, compare_tables, euler_strands, slice_ranks, BettiTable, Direction, DualityReport,
    EntryVerdict, EulerStrand, GradedComplex,
};
pub use rinehart::{ChainComplex, CochainComplex};

pub use crate::modules::{check_flatness, combined, CombinedRightModule, Curvature, FlatLeftModule};

use crate::exact::CoreError;
use crate::modules::RightModuleData;
use crate::poisson::{huebschmann_right_action, to_lie_rinehart, twist_module, LieRinehartPresentation, PoissonStructure};

pub fn cohomology_table(
    lr: &LieRinehartPresentation,
    m: &FlatLeftModule,
    window: (i64, i64),
    fixture: &str,
) -> Result<BettiTable, CoreError> {
    betti_table(&CochainComplex::new(lr, m)?, window, "cohomology", fixture)
}

pub fn homology_table(
    lr: &LieRinehartPresentation,
    n: &RightModuleData,
    window: (i64, i64),
    fixture: &str,
) -> Result<BettiTable, CoreError> {
    betti_table(&ChainComplex::new(lr, n)?, window, "homology", fixture)
}

/// Right coefficient modules for the homology side of the duality.
pub struct HomologyCoefficients {
    pub lie_rinehart: LieRinehartPresentation,
    pub huebschmann: RightModuleData,
    pub twist: RightModuleData,
    /// `A_P ⊗ (_SΛ ⊗ M)`.
    pub twisted: CombinedRightModule,
    /// `A_P ⊗ M`.
    pub untwisted: CombinedRightModule,
}

pub fn homology_coefficients(pi: &PoissonStructure, m: &FlatLeftModule) -> Result<HomologyCoefficients, CoreError> {
    let lr = to_lie_rinehart(pi)?;
    m.validate(&lr)?;
    let ap = huebschmann_right_action(pi, &lr)?;
    let twist = twist_module(&lr)?;
    let left_twist = twist.antipode_untwist(&ap);
    let x = left_twist.tensor(m, lr.vars());
    x.validate(&lr)?;
    let twisted = combined(&lr, &ap, "A_P", &x, "Lambda*M");
    twisted.module.validate(&lr)?;
    let untwisted = combined(&lr, &ap, "A_P", m, "M");
    untwisted.module.validate(&lr)?;
    Ok(HomologyCoefficients { lie_rinehart: lr, huebschmann: ap, twist, twisted, untwisted })
}

/// `H^i(L, M)` against `H_{n-i}(L, A_P ⊗ (_SΛ ⊗ M))` on one window.
pub fn duality_report(
    pi: &PoissonStructure,
    m: &FlatLeftModule,
    window: (i64, i64),
    fixture: &str,
) -> Result<DualityReport, CoreError> {
    let c = homology_coefficients(pi, m)?;
    let left = cohomology_table(&c.lie_rinehart, m, window, fixture)?;
    let right = homology_table(&c.lie_rinehart, &c.twisted.module, window, fixture)?;
    Ok(compare_tables(left, right, c.lie_rinehart.rank()))
}

/// The same comparison without the `Λ` factor.
pub fn untwisted_comparison(
    pi: &PoissonStructure,
    m: &FlatLeftModule,
    window: (i64, i64),
    fixture: &str,
) -> Result<DualityReport, CoreError> {
    let c = homology_coefficients(pi, m)?;
    let left = cohomology_table(&c.lie_rinehart, m, window, fixture)?;
    let right = homology_table(&c.lie_rinehart, &c.untwisted.module, window, fixture)?;
    Ok(compare_tables(left, right, c.lie_rinehart.rank()))
}
