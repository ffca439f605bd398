use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use clap::Parser;

use hopfdual_cli::{render, run_with_threads, Cli, Format, Report};
use hopfdual_core::exact::monomial_count;
use hopfdual_core::fixtures::{poisson_fixture, symp2_rank2_module, POISSON_FIXTURES};
use hopfdual_core::hochschild::{
    ext_enveloping_table, hh_cohomology_table, hh_homology_table, hkr_check, vdb_duality_report, Bimodule, KoszulComplex,
};
use hopfdual_core::homology::{
    check_square_zero, duality_report, homology_coefficients, homology_table, untwisted_comparison, ChainComplex,
    CochainComplex, Direction, FlatLeftModule,
};
use hopfdual_core::hopf::{enveloping_report, vl_report, FiniteAlgebra};
use hopfdual_core::poisson::{jacobi_by_expansion, jacobi_check, to_lie_rinehart};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion_1() -> Outcome {
    let mut valid = 0;
    for f in POISSON_FIXTURES {
        let pi = f.candidate();
        let (s, e) = (jacobi_check(&pi), jacobi_by_expansion(&pi));
        ensure(s == e, || format!("{}: Schouten {s:?} vs expansion {e:?}", f.name))?;
        ensure(s.is_pass() == f.valid, || format!("{}: verdict {s:?}", f.name))?;
        valid += usize::from(f.valid);
    }
    ensure(valid == 5 && POISSON_FIXTURES.len() == 6, || format!("{valid} valid of {}", POISSON_FIXTURES.len()))?;
    Ok("6 candidates, routes agree".into())
}

fn criterion_2() -> Outcome {
    let w = (-6, 10);
    let mut checked = 0;
    for f in POISSON_FIXTURES.iter().filter(|f| f.valid) {
        let pi = f.structure().map_err(|e| e.to_string())?;
        let lr = to_lie_rinehart(&pi).map_err(|e| e.to_string())?;
        let mut modules = vec![FlatLeftModule::base(&lr)];
        if f.name == "symp2" {
            modules.push(symp2_rank2_module(&lr));
        }
        for m in &modules {
            let c = CochainComplex::new(&lr, m).map_err(|e| e.to_string())?;
            let r = check_square_zero(&c, w).map_err(|e| e.to_string())?;
            ensure(r.is_none(), || format!("{} cochain d² ≠ 0 at {r:?}", f.name))?;
            let co = homology_coefficients(&pi, m).map_err(|e| e.to_string())?;
            for n in [&co.twisted.module, &co.untwisted.module, &co.huebschmann] {
                let c = ChainComplex::new(&lr, n).map_err(|e| e.to_string())?;
                let r = check_square_zero(&c, w).map_err(|e| e.to_string())?;
                ensure(r.is_none(), || format!("{} chain ∂² ≠ 0 at {r:?}", f.name))?;
                checked += 1;
            }
            checked += 1;
        }
    }
    for m in 1..=2 {
        for b in [Bimodule::base(m), Bimodule::derivations(m)] {
            for dir in [Direction::Cochain, Direction::Chain] {
                let c = KoszulComplex::new(b.clone(), dir).map_err(|e| e.to_string())?;
                let r = check_square_zero(&c, w).map_err(|e| e.to_string())?;
                ensure(r.is_none(), || format!("Koszul {} m={m} {dir:?} at {r:?}", b.name))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} complexes"))
}

fn criterion_3() -> Outcome {
    let w = (-6, 8);
    let mut shifts = Vec::new();
    for name in ["symp2", "aff1", "so3", "quad2", "symp2-rank2"] {
        let base = name.trim_end_matches("-rank2");
        let pi = poisson_fixture(base).unwrap().structure().map_err(|e| e.to_string())?;
        let lr = to_lie_rinehart(&pi).map_err(|e| e.to_string())?;
        let m = if name == base { FlatLeftModule::base(&lr) } else { symp2_rank2_module(&lr) };
        let r = duality_report(&pi, &m, w, name).map_err(|e| e.to_string())?;
        ensure(r.passed, || format!("{name}: first mismatch {:?}", r.mismatches().next()))?;
        shifts.push(r.shift.ok_or_else(|| format!("{name}: no uniform shift"))?);
    }
    ensure(shifts.iter().all(|&s| s == shifts[0]), || format!("shifts differ: {shifts:?}"))?;
    Ok(format!("5 comparisons, shift {}", shifts[0]))
}

fn criterion_4() -> Outcome {
    let pi = poisson_fixture("aff1").unwrap().structure().map_err(|e| e.to_string())?;
    let lr = to_lie_rinehart(&pi).map_err(|e| e.to_string())?;
    let r = untwisted_comparison(&pi, &FlatLeftModule::base(&lr), (-6, 8), "aff1").map_err(|e| e.to_string())?;
    let n = r.mismatches().count();
    ensure(n > 0, || "untwisted comparison matched everywhere".into())?;
    let e = r.mismatches().next().unwrap();
    Ok(format!("{n} mismatches, first (i, w) = ({}, {})", e.degree, e.weight))
}

fn criterion_5() -> Outcome {
    for name in ["symp2", "so3"] {
        let pi = poisson_fixture(name).unwrap().structure().map_err(|e| e.to_string())?;
        let lr = to_lie_rinehart(&pi).map_err(|e| e.to_string())?;
        let co = homology_coefficients(&pi, &FlatLeftModule::base(&lr)).map_err(|e| e.to_string())?;
        ensure(co.twist.actions.iter().flatten().flatten().all(|p| p.is_zero()), || format!("{name}: twist acts"))?;
        let n = lr.rank() as i64;
        let twisted = homology_table(&lr, &co.twisted.module, (-6, 8), name).map_err(|e| e.to_string())?;
        let plain = homology_table(&lr, &co.untwisted.module, (-6 + n, 8 + n), name).map_err(|e| e.to_string())?;
        for (&(i, w), &d) in &twisted.entries {
            ensure(plain.get(i, w + n) == Some(d), || format!("{name} at ({i}, {w}): {d} vs {:?}", plain.get(i, w + n)))?;
        }
    }
    Ok("twist zero, tables agree after translation by n".into())
}

fn criterion_6() -> Outcome {
    let w = (-4, 8);
    for m in 1..=2 {
        for b in [Bimodule::base(m), Bimodule::derivations(m)] {
            let r = vdb_duality_report(&b, w).map_err(|e| e.to_string())?;
            ensure(r.passed, || format!("{} m={m}: {:?}", b.name, r.mismatches().next()))?;
            let co = hh_cohomology_table(&b, w).map_err(|e| e.to_string())?;
            let ho = hh_homology_table(&b, w).map_err(|e| e.to_string())?;
            let hc = hkr_check(&b, &co, Direction::Cochain);
            let hh = hkr_check(&b, &ho, Direction::Chain);
            ensure(hc.passed && hh.passed, || format!("{} m={m}: HKR {hc:?} {hh:?}", b.name))?;
        }
    }
    Ok("m = 1, 2 with A and Der(A)".into())
}

fn criterion_7() -> Outcome {
    for m in 1..=2usize {
        let t = ext_enveloping_table(m, (-6, 8)).map_err(|e| e.to_string())?;
        for (&(i, w), &d) in &t.entries {
            let expected = if i == m { monomial_count(m, w + m as i64) } else { 0 };
            ensure(d == expected, || format!("m={m}: Ext^{i} at weight {w} has dimension {d}, expected {expected}"))?;
        }
        ensure(t.get(m, -(m as i64)) == Some(1), || format!("m={m}: no generator at weight -{m}"))?;
    }
    Ok("Ext^i = 0 for i ≠ m; Ext^m free of rank one on weight -m".into())
}

fn criterion_8() -> Outcome {
    let mut total = 0;
    let mut reports = vec![
        enveloping_report(&FiniteAlgebra::dual_numbers()),
        enveloping_report(&FiniteAlgebra::upper_triangular()),
    ];
    for name in ["aff1", "so3"] {
        let pi = poisson_fixture(name).unwrap().structure().map_err(|e| e.to_string())?;
        reports.push(vl_report(name, &pi).map_err(|e| e.to_string())?);
    }
    for r in &reports {
        ensure(r.passed(), || format!("{}: {:?}", r.structure, r.failures()))?;
        ensure(r.checks.iter().all(|c| c.cases > 0), || format!("{}: a check ran no cases", r.structure))?;
        total += r.checks.iter().map(|c| c.cases).sum::<usize>();
    }
    let pairs = (reports[0].check("sch6").map(|c| c.cases), reports[1].check("sch6").map(|c| c.cases));
    ensure(pairs == (Some(16), Some(81)), || format!("sch6 pair counts {pairs:?}"))?;
    Ok(format!("{} structures, {total} cases", reports.len()))
}

/// Every command exercised by the criteria above.
const INVOCATIONS: &[&[&str]] = &[
    &["jacobi", "builtin:aff1"],
    &["jacobi", "builtin:jfail"],
    &["cohomology", "builtin:symp2", "--min-weight", "0", "--max-weight", "6"],
    &["cohomology", "builtin:zero2", "--min-weight", "0", "--max-weight", "0"],
    &["homology", "builtin:aff1", "--coefficients", "twist"],
    &["duality", "builtin:symp2"],
    &["duality", "builtin:symp2-rank2"],
    &["duality", "builtin:aff1", "--untwisted-comparison"],
    &["duality", "builtin:so3", "--untwisted-comparison"],
    &["duality", "builtin:quad2"],
    &["hochschild", "builtin:hh0", "--duality"],
    &["hochschild", "builtin:hh1", "--duality"],
    &["hochschild", "builtin:hh2", "--duality"],
    &["hochschild", "builtin:hh2-der", "--duality"],
    &["hochschild", "builtin:ext2"],
    &["axioms", "builtin:Ae-dual-numbers"],
    &["axioms", "builtin:Ae-uppertriangular2"],
    &["axioms", "builtin:VL-aff1"],
    &["axioms", "builtin:VL-so3"],
];

fn cli(args: &[&str], threads: usize) -> Cli {
    let mut argv = vec!["hopfdual"];
    argv.extend_from_slice(args);
    let t = threads.to_string();
    argv.extend(["--threads", &t]);
    Cli::try_parse_from(argv).expect("valid arguments")
}

fn without_timing(mut r: Report) -> Report {
    r.timing_ms = 0;
    r
}

fn criterion_9() -> Outcome {
    for args in INVOCATIONS {
        let one = run_with_threads(&cli(args, 1)).map_err(|e| e.to_string())?;
        let four = run_with_threads(&cli(args, 4)).map_err(|e| e.to_string())?;
        let (a, b) = (without_timing(one), without_timing(four));
        for format in [Format::Json, Format::Csv, Format::Text] {
            ensure(render(&a, format) == render(&b, format), || format!("{args:?} differs in {format:?}"))?;
        }
    }
    // separate processes, compared byte for byte once the timing line is dropped
    let strip = |s: String| s.lines().filter(|l| !l.contains("\"timing_ms\"")).collect::<Vec<_>>().join("\n");
    for args in [INVOCATIONS[7], INVOCATIONS[12], INVOCATIONS[16]] {
        let mut a = args.to_vec();
        a.extend(["--threads", "1"]);
        let mut b = args.to_vec();
        b.extend(["--threads", "3"]);
        let (x, y) = (binary(&a), binary(&b));
        ensure(x.0 == y.0 && strip(x.1) == strip(y.1), || format!("{args:?} differs between processes"))?;
    }
    Ok(format!("{} invocations, threads 1 vs 4 in process, 3 across processes", INVOCATIONS.len()))
}

/// Criterion number, its runner and its time budget in seconds.
type Criterion = (u32, fn() -> Outcome, u64);

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 9] = [
        (1, criterion_1, 1),
        (2, criterion_2, 30),
        (3, criterion_3, 60),
        (4, criterion_4, 10),
        (5, criterion_5, 10),
        (6, criterion_6, 20),
        (7, criterion_7, 10),
        (8, criterion_8, 10),
        (9, criterion_9, 120),
    ];
    let mut failed = Vec::new();
    for (n, run, budget) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let result = match outcome {
            Ok(detail) if elapsed <= Duration::from_secs(budget) => Ok(detail),
            Ok(detail) => Err(format!("{detail}; over the {budget} s budget")),
            Err(e) => Err(e),
        };
        match result {
            Ok(detail) => println!("criterion {n}: PASS ({detail}; {:.2} s)", elapsed.as_secs_f64()),
            Err(e) => {
                println!("criterion {n}: FAIL ({e}; {:.2} s)", elapsed.as_secs_f64());
                failed.push(n);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

fn golden_name(args: &[&str]) -> String {
    args.iter()
        .map(|a| a.trim_start_matches("builtin:").trim_start_matches("--"))
        .collect::<Vec<_>>()
        .join("_")
}

/// Reports match the checked-in goldens; `HOPFDUAL_BLESS=1` rewrites them.
#[test]
fn golden_reports() {
    let bless = std::env::var_os("HOPFDUAL_BLESS").is_some();
    for args in INVOCATIONS {
        let report = without_timing(run_with_threads(&cli(args, 2)).unwrap());
        let json = report.to_json();
        let path = golden_dir().join(format!("{}.json", golden_name(args)));
        if bless {
            std::fs::create_dir_all(golden_dir()).unwrap();
            std::fs::write(&path, &json).unwrap();
            continue;
        }
        let expected = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden {}", path.display()));
        assert_eq!(json, expected, "{args:?}");
        let parsed: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed, report, "{args:?} does not round-trip");
    }
}

#[test]
fn spec_examples() {
    let run = |args: &[&str]| run_with_threads(&cli(args, 2)).unwrap();
    let r = run(&["cohomology", "builtin:symp2", "--min-weight", "0", "--max-weight", "6"]);
    let t = r.table("cohomology").unwrap();
    assert!(t.entries.iter().all(|&(i, w, d)| d == usize::from(i == 0 && w == 0)));
    let r = run(&["cohomology", "builtin:zero2", "--min-weight", "0", "--max-weight", "0"]);
    assert_eq!(r.table("cohomology").unwrap().entries, vec![(0, 0, 1), (1, 0, 4), (2, 0, 3)]);
    let r = run(&["duality", "builtin:aff1", "--untwisted-comparison"]);
    assert!(r.passed());
    assert_eq!(r.shift, Some(0));
    assert!(!r.verdict("untwisted-comparison").unwrap().passed);
    let r = run(&["jacobi", "builtin:jfail"]);
    assert_eq!(r.verdict("jacobi").unwrap().detail.as_deref(), Some("(x, y, z): -x - y - z"));
    let r = run(&["hochschild", "builtin:hh0", "--duality"]);
    assert!(r.passed());
    let t = r.table("hochschild-cohomology").unwrap();
    assert!(t.entries.iter().all(|&(i, w, d)| d == usize::from(i == 0 && w == 0)));
}

fn binary(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hopfdual")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hopfdual-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn exit_codes() {
    assert_eq!(binary(&["jacobi", "builtin:aff1"]).0, 0);
    assert_eq!(binary(&["axioms", "builtin:Ae-dual-numbers"]).0, 0);
    let (code, stdout, _) = binary(&["jacobi", "builtin:jfail", "--format", "text"]);
    assert_eq!(code, 1);
    assert!(stdout.contains("FAIL jacobi: (x, y, z)"));

    let jfail = r#"{"kind": "poisson", "name": "jfail", "variables": ["x", "y", "z"],
        "bracket": [[0, 1, "y"], [1, 2, "z"], [2, 0, "x"]]}"#;
    let path = temp_file("jfail.json", jfail);
    assert_eq!(binary(&["jacobi", path.to_str().unwrap()]).0, 1);
    // a Jacobi counterexample is not a valid input for cohomology
    assert_eq!(binary(&["cohomology", path.to_str().unwrap()]).0, 2);

    let malformed = r#"{"kind": "poisson", "name": "bad", "variables": ["x", "y"], "bracket": [[0, 1, "x+*y"]]}"#;
    let path = temp_file("malformed.json", malformed);
    let (code, _, stderr) = binary(&["jacobi", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(stderr.contains("position 2"), "{stderr}");

    let mixed = r#"{"kind": "poisson", "name": "mixed", "variables": ["x", "y", "z"],
        "bracket": [[0, 1, "z"], [1, 2, "x^2"]]}"#;
    let path = temp_file("mixed.json", mixed);
    let (code, _, stderr) = binary(&["cohomology", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(stderr.contains("x^2"), "{stderr}");

    let nonassoc = r#"{"kind": "finite-algebra", "name": "bad", "basis": ["1", "e", "f"],
        "structure_constants": [[0,0,0,"1"],[0,1,1,"1"],[1,0,1,"1"],[0,2,2,"1"],[2,0,2,"1"],[1,1,2,"1"],[1,2,2,"1"]],
        "unit": ["1", "0", "0"]}"#;
    let path = temp_file("nonassoc.json", nonassoc);
    assert_eq!(binary(&["axioms", path.to_str().unwrap()]).0, 2);
    assert_eq!(binary(&["axioms", "builtin:missing"]).0, 2);
    assert_eq!(binary(&["duality", "/nonexistent/structure.json"]).0, 2);
}

#[test]
fn structure_files_match_builtins() {
    let aff1 = r#"{"kind": "poisson", "name": "aff1", "variables": ["x", "y"], "bracket": [[0, 1, "y"]]}"#;
    let path = temp_file("aff1.json", aff1);
    let from_file = without_timing(run_with_threads(&cli(&["duality", path.to_str().unwrap()], 2)).unwrap());
    let builtin = without_timing(run_with_threads(&cli(&["duality", "builtin:aff1"], 2)).unwrap());
    assert_eq!(from_file, builtin);

    let rank2 = r#"{"kind": "poisson", "name": "symp2-rank2", "variables": ["x", "y"], "bracket": [[0, 1, "1"]],
        "module": {"generators": ["g1", "g2"], "weights": [0, 2],
                   "actions": [[["0", "x"], ["0", "0"]], [["0", "-y"], ["0", "0"]]]}}"#;
    let path = temp_file("rank2.json", rank2);
    let from_file = without_timing(run_with_threads(&cli(&["duality", path.to_str().unwrap()], 2)).unwrap());
    let builtin = without_timing(run_with_threads(&cli(&["duality", "builtin:symp2-rank2"], 2)).unwrap());
    assert_eq!(from_file, builtin);

    let hh = r#"{"kind": "hochschild", "name": "hh2", "num_vars": 2, "module": "A"}"#;
    let path = temp_file("hh2.json", hh);
    let from_file = without_timing(run_with_threads(&cli(&["hochschild", path.to_str().unwrap(), "--duality"], 2)).unwrap());
    let builtin = without_timing(run_with_threads(&cli(&["hochschild", "builtin:hh2", "--duality"], 2)).unwrap());
    assert_eq!(from_file, builtin);
}
