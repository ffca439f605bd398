use hopfdual_core::fixtures::poisson_fixture;
use hopfdual_core::hopf::{enveloping_report, vl_report, FiniteAlgebra, FiniteAlgebraSpec};

#[test]
fn enveloping_suites_pass_on_builtins() {
    for alg in [FiniteAlgebra::dual_numbers(), FiniteAlgebra::upper_triangular()] {
        let r = enveloping_report(&alg);
        assert!(r.passed(), "{}: {:?}", alg.name, r.failures());
        let d = alg.dim();
        assert_eq!(r.check("sch6").unwrap().cases, d.pow(4));
        assert!(r.checks.iter().all(|c| c.cases > 0), "{}", alg.name);
    }
}

#[test]
fn algebras_load_from_json() {
    let text = r#"{
        "name": "k2",
        "basis": ["e1", "e2"],
        "structure_constants": [[0, 0, 0, "1"], [1, 1, 1, "1"]],
        "unit": ["1", "1"]
    }"#;
    let spec: FiniteAlgebraSpec = serde_json::from_str(text).unwrap();
    let alg = FiniteAlgebra::from_spec(&spec).unwrap();
    assert!(alg.is_commutative());
    assert!(enveloping_report(&alg).passed());
}

#[test]
fn nonassociative_tables_are_rejected() {
    // e·e = f, f·e = 0, e·f = f is not associative: (e·e)·e = 0 but e·(e·e) = f.
    let text = r#"{
        "name": "bad",
        "basis": ["1", "e", "f"],
        "structure_constants": [[0,0,0,"1"],[0,1,1,"1"],[1,0,1,"1"],[0,2,2,"1"],[2,0,2,"1"],[1,1,2,"1"],[1,2,2,"1"]],
        "unit": ["1", "0", "0"]
    }"#;
    let spec: FiniteAlgebraSpec = serde_json::from_str(text).unwrap();
    assert!(FiniteAlgebra::from_spec(&spec).is_err());
}

#[test]
fn vl_suites_pass_on_generators() {
    for name in ["aff1", "so3", "quad2", "symp2"] {
        let pi = poisson_fixture(name).unwrap().structure().unwrap();
        let r = vl_report(name, &pi).unwrap();
        assert!(r.passed(), "{name}: {:?}", r.failures());
        assert_eq!(r.structure, format!("VL-{name}"));
        for check in ["confluence", "sch2", "sch3", "sch6", "sch7", "sch8", "sch9", "superga1-combined", "laterza-generators"] {
            assert!(r.check(check).unwrap().cases > 0, "{name}: {check}");
        }
    }
}
