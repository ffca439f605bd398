use hopfdual_core::exact::{Poly, Rational, Variables};
use hopfdual_core::fixtures::{poisson_fixture, symp2_rank2_module, POISSON_FIXTURES};
use hopfdual_core::homology::{
    check_square_zero, duality_report, homology_coefficients, untwisted_comparison, ChainComplex, CochainComplex,
    FlatLeftModule,
};
use hopfdual_core::poisson::{
    jacobi_by_expansion, jacobi_check, to_lie_rinehart, JacobiVerdict, PoissonStructure,
};
use proptest::prelude::*;

const WINDOW: (i64, i64) = (-6, 8);

fn structure(name: &str) -> PoissonStructure {
    poisson_fixture(name).unwrap().structure().unwrap()
}

#[test]
fn jacobi_routes_agree_on_fixtures() {
    let mut invalid = 0;
    for f in POISSON_FIXTURES {
        let pi = f.candidate();
        let verdict = jacobi_check(&pi);
        assert_eq!(verdict, jacobi_by_expansion(&pi), "{}", f.name);
        assert_eq!(verdict.is_pass(), f.valid, "{}", f.name);
        invalid += usize::from(!f.valid);
    }
    assert_eq!(invalid, 1);
}

#[test]
fn jfail_witness_is_the_only_triple() {
    match jacobi_check(&poisson_fixture("jfail").unwrap().candidate()) {
        JacobiVerdict::Fail { i, j, k, jacobiator } => {
            assert_eq!((i, j, k), (0, 1, 2));
            assert_eq!(jacobiator.to_string(), "-x - y - z");
        }
        JacobiVerdict::Pass => panic!("jfail passed"),
    }
}

proptest! {
    // Linear brackets in three variables: Lie algebra structure constants, most of which fail Jacobi.
    #[test]
    fn jacobi_routes_agree_on_linear_brackets(c in prop::collection::vec(-2i64..=2, 9)) {
        let v = Variables::new(&["x", "y", "z"]);
        let lin = |k: usize| -> Poly {
            let mut p = Poly::zero(&v);
            for l in 0..3 {
                p += &Poly::var(&v, l).scale(&Rational::from_integer(c[3 * k + l].into()));
            }
            p
        };
        let mut m = vec![vec![Poly::zero(&v); 3]; 3];
        for (k, (i, j)) in [(0, 1), (0, 2), (1, 2)].into_iter().enumerate() {
            m[i][j] = lin(k);
            m[j][i] = -&lin(k);
        }
        let pi = PoissonStructure::candidate(v.clone(), m, Some(1)).unwrap();
        prop_assert_eq!(jacobi_check(&pi), jacobi_by_expansion(&pi));
    }
}

#[test]
fn differentials_square_to_zero() {
    for f in POISSON_FIXTURES.iter().filter(|f| f.valid) {
        let pi = f.structure().unwrap();
        let lr = to_lie_rinehart(&pi).unwrap();
        let m = FlatLeftModule::base(&lr);
        let co = homology_coefficients(&pi, &m).unwrap();
        assert_eq!(check_square_zero(&CochainComplex::new(&lr, &m).unwrap(), (-6, 10)).unwrap(), None, "{}", f.name);
        for n in [&co.twisted.module, &co.untwisted.module, &co.huebschmann] {
            assert_eq!(check_square_zero(&ChainComplex::new(&lr, n).unwrap(), (-6, 10)).unwrap(), None, "{}", f.name);
        }
    }
}

#[test]
fn twisted_duality_holds_at_shift_zero() {
    for name in ["symp2", "aff1", "so3", "quad2", "zero2"] {
        let pi = structure(name);
        let lr = to_lie_rinehart(&pi).unwrap();
        let r = duality_report(&pi, &FlatLeftModule::base(&lr), WINDOW, name).unwrap();
        assert!(r.passed, "{name}: {:?}", r.mismatches().next());
        assert_eq!(r.shift, Some(0), "{name}");
    }
    let pi = structure("symp2");
    let lr = to_lie_rinehart(&pi).unwrap();
    let r = duality_report(&pi, &symp2_rank2_module(&lr), WINDOW, "symp2-rank2").unwrap();
    assert!(r.passed);
    assert_eq!(r.shift, Some(0));
}

#[test]
fn aff1_needs_the_twist() {
    let pi = structure("aff1");
    let lr = to_lie_rinehart(&pi).unwrap();
    let r = untwisted_comparison(&pi, &FlatLeftModule::base(&lr), WINDOW, "aff1").unwrap();
    assert!(!r.passed);
    assert!(r.mismatches().count() > 0);
}

#[test]
fn unimodular_fixtures_degenerate() {
    for name in ["symp2", "so3"] {
        let pi = structure(name);
        let lr = to_lie_rinehart(&pi).unwrap();
        let m = FlatLeftModule::base(&lr);
        let co = homology_coefficients(&pi, &m).unwrap();
        assert!(co.twist.actions.iter().flatten().flatten().all(Poly::is_zero), "{name}");
        let n = lr.rank() as i64;
        let twisted = hopfdual_core::homology::homology_table(&lr, &co.twisted.module, (-6 - n, 8), name).unwrap();
        let untwisted = hopfdual_core::homology::homology_table(&lr, &co.untwisted.module, (-6, 8 + n), name).unwrap();
        let mut nonzero = 0;
        for (&(i, w), &d) in &twisted.entries {
            assert_eq!(Some(d), untwisted.get(i, w + n), "{name} at ({i}, {w})");
            nonzero += usize::from(d > 0);
        }
        assert!(nonzero > 0);
    }
}
