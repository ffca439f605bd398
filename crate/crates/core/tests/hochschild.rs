use hopfdual_core::exact::monomial_count;
use hopfdual_core::hochschild::{
    ext_enveloping_table, hh_cohomology_table, hh_homology_table, hkr_check, vdb_duality_report, Bimodule, KoszulComplex,
};
use hopfdual_core::homology::{check_square_zero, Direction};

#[test]
fn koszul_differentials_square_to_zero() {
    let mut modules = vec![Bimodule::base(0)];
    for m in 1..=3 {
        modules.extend([Bimodule::base(m), Bimodule::derivations(m)]);
    }
    modules.extend([Bimodule::enveloping(1), Bimodule::enveloping(2)]);
    for module in modules {
        let m = module.koszul_rank();
        {
            for dir in [Direction::Cochain, Direction::Chain] {
                let c = KoszulComplex::new(module.clone(), dir).unwrap();
                assert_eq!(check_square_zero(&c, (-6, 10)).unwrap(), None, "{} m={m} {dir:?}", module.name);
            }
        }
    }
}

#[test]
fn van_den_bergh_duality() {
    for m in 1..=2 {
        for module in [Bimodule::base(m), Bimodule::derivations(m)] {
            let r = vdb_duality_report(&module, (-4, 8)).unwrap();
            assert!(r.passed, "{} m={m}: {:?}", module.name, r.mismatches().next());
            assert_eq!(r.shift, Some(0));
        }
    }
}

#[test]
fn tables_match_hkr_counts() {
    for m in 1..=2 {
        for module in [Bimodule::base(m), Bimodule::derivations(m)] {
            let co = hh_cohomology_table(&module, (-4, 8)).unwrap();
            let ho = hh_homology_table(&module, (-4, 8)).unwrap();
            assert!(hkr_check(&module, &co, Direction::Cochain).passed, "{} m={m}", module.name);
            assert!(hkr_check(&module, &ho, Direction::Chain).passed, "{} m={m}", module.name);
        }
    }
}

#[test]
fn ext_into_enveloping_is_concentrated() {
    for m in 1..=2usize {
        let t = ext_enveloping_table(m, (-6, 8)).unwrap();
        for (&(i, w), &d) in &t.entries {
            // a free A-module of rank one on a generator of weight -m
            let expected = if i == m { monomial_count(m, w + m as i64) } else { 0 };
            assert_eq!(d, expected, "m={m}, i={i}, w={w}");
        }
        assert_eq!(t.get(m, -(m as i64)), Some(1));
    }
}
