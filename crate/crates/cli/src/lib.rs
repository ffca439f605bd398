//! Batch front end for the hopfdual engine: loads a structure file or builtin fixture, runs one
//! computation and returns a [`Report`].

pub mod input;
pub mod report;

use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hopfdual_core::exact::monomial_count;
use hopfdual_core::hochschild::{hh_cohomology_table, hh_homology_table, hkr_check, vdb_duality_report, Bimodule, KoszulComplex};
use hopfdual_core::homology::{
    check_square_zero, compare_tables, homology_coefficients, homology_table, cohomology_table, ChainComplex, CochainComplex,
    Direction, DualityReport, FlatLeftModule,
};
use hopfdual_core::hopf::{enveloping_report, vl_report, AxiomReport};
use hopfdual_core::poisson::{
    huebschmann_right_action, jacobi_by_expansion, jacobi_check, to_lie_rinehart, twist_module, JacobiVerdict, PoissonStructure,
};

pub use input::{load, parse_structure, Input, BUILTINS};
pub use report::{Report, Table, Verdict};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Unreadable, malformed or mathematically invalid input (exit code 2).
    Input(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "input error: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

#[derive(Parser, Debug, Clone)]
#[command(name = "hopfdual", version, about = "Graded Poisson and Hochschild (co)homology, twisted duality and Hopf algebroid checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Worker threads for slice computations (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Jacobi identity through [π, π] and by direct expansion.
    Jacobi(Source),
    /// Poisson cohomology per degree and weight.
    Cohomology(GradedArgs),
    /// Poisson homology per degree and weight.
    Homology(GradedArgs),
    /// Cohomology against twisted homology.
    Duality(DualityArgs),
    /// Hochschild (co)homology through the Koszul resolution.
    Hochschild(HochschildArgs),
    /// Bialgebroid, translation, antipode, module and dualizing checks.
    Axioms(Source),
}

#[derive(Args, Debug, Clone)]
pub struct Source {
    /// A JSON structure file or `builtin:<name>`.
    pub input: String,
}

#[derive(Args, Debug, Clone, Copy, Default)]
pub struct WindowArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub min_weight: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub max_weight: Option<i64>,
}

#[derive(Args, Debug, Clone)]
pub struct GradedArgs {
    pub input: String,
    #[command(flatten)]
    pub window: WindowArgs,
    /// Defaults to the file's module block when there is one, otherwise `A`.
    #[arg(long, value_enum)]
    pub coefficients: Option<Coefficients>,
}

#[derive(Args, Debug, Clone)]
pub struct DualityArgs {
    pub input: String,
    #[command(flatten)]
    pub window: WindowArgs,
    #[arg(long, value_enum)]
    pub coefficients: Option<Coefficients>,
    /// Also compare against homology without the top-exterior-power twist.
    #[arg(long)]
    pub untwisted_comparison: bool,
}

#[derive(Args, Debug, Clone)]
pub struct HochschildArgs {
    pub input: String,
    #[command(flatten)]
    pub window: WindowArgs,
    /// Compare HH^i(A, M) with HH_{m-i}(A, Λ^m Der(A) ⊗ M).
    #[arg(long)]
    pub duality: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coefficients {
    /// The base algebra.
    #[value(name = "A", alias = "a")]
    A,
    /// The module twisted by the top exterior power `_SΛ`.
    Twist,
    /// The module block of the structure file.
    FileModule,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl Cli {
    pub fn input(&self) -> &str {
        match &self.command {
            Command::Jacobi(s) | Command::Axioms(s) => &s.input,
            Command::Cohomology(a) | Command::Homology(a) => &a.input,
            Command::Duality(a) => &a.input,
            Command::Hochschild(a) => &a.input,
        }
    }

    fn name(&self) -> &'static str {
        match &self.command {
            Command::Jacobi(_) => "jacobi",
            Command::Cohomology(_) => "cohomology",
            Command::Homology(_) => "homology",
            Command::Duality(_) => "duality",
            Command::Hochschild(_) => "hochschild",
            Command::Axioms(_) => "axioms",
        }
    }
}

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv(),
        Format::Text => report.to_text(),
    }
}

/// 0 when every non-diagnostic verdict passes, 1 otherwise.
pub fn exit_code(report: &Report) -> i32 {
    if report.passed() {
        0
    } else {
        1
    }
}

/// Runs the command on the current rayon pool.
pub fn run(cli: &Cli) -> Result<Report, CliError> {
    let start = Instant::now();
    let input = load(cli.input())?;
    let mut report = Report {
        command: cli.name().to_string(),
        fixture: input.name(),
        tables: Vec::new(),
        verdicts: Vec::new(),
        shift: None,
        notes: Vec::new(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        timing_ms: 0,
    };
    match &cli.command {
        Command::Jacobi(_) => jacobi(&input, &mut report)?,
        Command::Cohomology(a) => graded(&input, a, Direction::Cochain, &mut report)?,
        Command::Homology(a) => graded(&input, a, Direction::Chain, &mut report)?,
        Command::Duality(a) => duality(&input, a, &mut report)?,
        Command::Hochschild(a) => hochschild(&input, a, &mut report)?,
        Command::Axioms(_) => axioms(&input, &mut report)?,
    }
    report.timing_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// Runs the command on a pool of `threads` workers, or the global pool when `None`.
pub fn run_with_threads(cli: &Cli) -> Result<Report, CliError> {
    match cli.threads {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| CliError::Input(format!("cannot start {n} threads: {e}")))?;
            pool.install(|| run(cli))
        }
        None => run(cli),
    }
}

fn wrong_kind(input: &Input, expected: &str) -> CliError {
    CliError::Input(format!("{} expects a {expected} structure, got {}", input.name(), input.kind()))
}

fn window(args: &WindowArgs, from_file: Option<(i64, i64)>, n: usize) -> Result<(i64, i64), CliError> {
    let (lo, hi) = from_file.unwrap_or((-(n as i64) - 2, 8));
    let w = (args.min_weight.unwrap_or(lo), args.max_weight.unwrap_or(hi));
    if w.0 > w.1 {
        return Err(CliError::Input(format!("empty weight window [{}, {}]", w.0, w.1)));
    }
    Ok(w)
}

fn jacobi(input: &Input, report: &mut Report) -> Result<(), CliError> {
    let Input::Poisson { candidate, .. } = input else { return Err(wrong_kind(input, "poisson")) };
    let describe = |v: &JacobiVerdict| match v {
        JacobiVerdict::Pass => None,
        JacobiVerdict::Fail { i, j, k, jacobiator } => {
            let n = candidate.vars().names();
            Some(format!("({}, {}, {}): {jacobiator}", n[*i], n[*j], n[*k]))
        }
    };
    let schouten = jacobi_check(candidate);
    let expansion = jacobi_by_expansion(candidate);
    let mut v = Verdict::check("jacobi", schouten.is_pass());
    v.detail = describe(&schouten);
    report.verdicts.push(v);
    report.verdicts.push(Verdict::check("schouten-matches-expansion", schouten == expansion));
    Ok(())
}

type PoissonInput<'a> = (&'a PoissonStructure, Option<&'a input::ModuleBlock>, Option<(i64, i64)>);

/// The Poisson structure, with the Jacobi identity enforced.
fn poisson(input: &Input) -> Result<PoissonInput<'_>, CliError> {
    let Input::Poisson { candidate, module, window, .. } = input else { return Err(wrong_kind(input, "poisson")) };
    if let JacobiVerdict::Fail { i, j, k, jacobiator } = jacobi_check(candidate) {
        let n = candidate.vars().names();
        return Err(CliError::Input(format!("not a Poisson bracket: Jacobi fails on ({}, {}, {}) with {jacobiator}", n[i], n[j], n[k])));
    }
    Ok((candidate, module.as_ref(), *window))
}

fn coefficient_module(
    pi: &PoissonStructure,
    block: Option<&input::ModuleBlock>,
    choice: Option<Coefficients>,
) -> Result<(FlatLeftModule, Coefficients), CliError> {
    let lr = to_lie_rinehart(pi)?;
    let choice = choice.unwrap_or(if block.is_some() { Coefficients::FileModule } else { Coefficients::A });
    let m = match (choice, block) {
        (Coefficients::A, _) => FlatLeftModule::base(&lr),
        (_, Some(b)) => input::flat_module(pi, b)?,
        (Coefficients::Twist, None) => FlatLeftModule::base(&lr),
        (Coefficients::FileModule, None) => return Err(CliError::Input("no module block in the structure file".into())),
    };
    Ok((m, choice))
}

fn graded(input: &Input, args: &GradedArgs, direction: Direction, report: &mut Report) -> Result<(), CliError> {
    let (pi, block, file_window) = poisson(input)?;
    let lr = to_lie_rinehart(pi)?;
    let w = window(&args.window, file_window, lr.rank())?;
    let (m, choice) = coefficient_module(pi, block, args.coefficients)?;
    let twisted = choice == Coefficients::Twist;
    let fixture = &report.fixture;
    let (table, square_zero) = match direction {
        Direction::Cochain => {
            let m = if twisted {
                let ap = huebschmann_right_action(pi, &lr)?;
                let left = twist_module(&lr)?.antipode_untwist(&ap).tensor(&m, lr.vars());
                left.validate(&lr)?;
                left
            } else {
                m
            };
            let c = CochainComplex::new(&lr, &m)?;
            (cohomology_table(&lr, &m, w, fixture)?, check_square_zero(&c, w)?)
        }
        Direction::Chain => {
            let co = homology_coefficients(pi, &m)?;
            let n = if twisted { &co.twisted.module } else { &co.untwisted.module };
            let c = ChainComplex::new(&lr, n)?;
            (homology_table(&lr, n, w, fixture)?, check_square_zero(&c, w)?)
        }
    };
    let label = match choice {
        Coefficients::A => "A",
        Coefficients::Twist => "twist",
        Coefficients::FileModule => "file-module",
    };
    report.notes.push(format!("coefficients: {label}"));
    report.tables.push(Table::from(&table));
    report.verdicts.push(square_zero_verdict(square_zero));
    Ok(())
}

fn square_zero_verdict(failure: Option<(usize, i64)>) -> Verdict {
    let v = Verdict::check("square-zero", failure.is_none());
    match failure {
        Some((k, w)) => v.with_detail(format!("d∘d ≠ 0 out of degree {k}, weight {w}")),
        None => v,
    }
}

fn duality_verdict(name: &str, r: &DualityReport, diagnostic: bool) -> Verdict {
    let mut v = if diagnostic { Verdict::diagnostic(name, r.passed) } else { Verdict::check(name, r.passed) };
    let mismatches: Vec<_> = r.mismatches().collect();
    v.cases = Some(r.verdicts.len());
    v.detail = match (r.shift, mismatches.first()) {
        (Some(s), _) => Some(format!("uniform shift {s}; matching shifts {:?}", r.matching_shifts)),
        (None, Some(e)) => Some(format!(
            "{} mismatching entries at shift 0, first at degree {} weight {}: {} vs {}",
            mismatches.len(),
            e.degree,
            e.weight,
            e.left,
            e.right
        )),
        (None, None) => None,
    };
    v
}

fn duality(input: &Input, args: &DualityArgs, report: &mut Report) -> Result<(), CliError> {
    let (pi, block, file_window) = poisson(input)?;
    let lr = to_lie_rinehart(pi)?;
    let w = window(&args.window, file_window, lr.rank())?;
    if args.coefficients == Some(Coefficients::Twist) {
        return Err(CliError::Input("duality applies the twist itself; use --coefficients A or file-module".into()));
    }
    let (m, _) = coefficient_module(pi, block, args.coefficients)?;
    let co = homology_coefficients(pi, &m)?;
    let left = cohomology_table(&lr, &m, w, &report.fixture)?;
    let right = homology_table(&lr, &co.twisted.module, w, &report.fixture)?;
    let r = compare_tables(left.clone(), right, lr.rank());
    report.tables.push(Table::from(&r.left));
    report.tables.push(Table::from(&r.right).renamed("twisted-homology"));
    report.verdicts.push(duality_verdict("twisted-duality", &r, false));
    report.shift = r.shift;
    if args.untwisted_comparison {
        let plain = homology_table(&lr, &co.untwisted.module, w, &report.fixture)?;
        let u = compare_tables(left, plain, lr.rank());
        report.tables.push(Table::from(&u.right).renamed("untwisted-homology"));
        report.verdicts.push(duality_verdict("untwisted-comparison", &u, true));
    }
    let twist_zero = co.twist.actions.iter().flatten().flatten().all(|p| p.is_zero());
    report.notes.push(format!("twist module action is zero (unimodular): {twist_zero}"));
    Ok(())
}

fn hochschild(input: &Input, args: &HochschildArgs, report: &mut Report) -> Result<(), CliError> {
    let Input::Hochschild { module, window: file_window, .. } = input else { return Err(wrong_kind(input, "hochschild")) };
    let m = module.koszul_rank();
    let w = window(&args.window, *file_window, m)?;
    let co = hh_cohomology_table(module, w)?;
    let ho = hh_homology_table(module, w)?;
    for dir in [Direction::Cochain, Direction::Chain] {
        let c = KoszulComplex::new(module.clone(), dir)?;
        let mut v = square_zero_verdict(check_square_zero(&c, w)?);
        v.name = format!("square-zero-{}", if dir == Direction::Cochain { "cochain" } else { "chain" });
        report.verdicts.push(v);
    }
    if module.left == module.right {
        for (t, dir, name) in [(&co, Direction::Cochain, "hkr-cohomology"), (&ho, Direction::Chain, "hkr-homology")] {
            let h = hkr_check(module, t, dir);
            let mut v = Verdict::check(name, h.passed);
            v.detail = h.first_mismatch.map(|(i, w, d, e)| format!("degree {i} weight {w}: {d}, closed form {e}"));
            report.verdicts.push(v);
        }
    }
    if module.name == Bimodule::enveloping(m).name {
        // Ext^i_{A^e}(A, A^e): a free A-module of rank one on weight -m in degree m, zero elsewhere.
        let bad = co.entry_list().into_iter().find(|&(i, wt, d)| d != if i == m { monomial_count(m, wt + m as i64) } else { 0 });
        let mut v = Verdict::check("ext-concentration", bad.is_none());
        v.detail = bad.map(|(i, wt, d)| format!("degree {i} weight {wt} has dimension {d}"));
        report.verdicts.push(v);
    }
    report.tables.push(Table::from(&co));
    report.tables.push(Table::from(&ho));
    if args.duality {
        let r = vdb_duality_report(module, w)?;
        report.tables.push(Table::from(&r.right).renamed("twisted-hochschild-homology"));
        report.verdicts.push(duality_verdict("vdb-duality", &r, false));
        report.shift = r.shift;
    }
    Ok(())
}

fn push_axioms(report: &mut Report, r: &AxiomReport) {
    for c in &r.checks {
        let mut v = Verdict::check(&format!("{}/{}", c.suite, c.name), c.passed);
        v.cases = Some(c.cases);
        v.detail = match (&c.witness, c.trivial) {
            (Some(w), _) => Some(format!("fails on {w}")),
            (None, true) => Some("trivial".into()),
            (None, false) => None,
        };
        report.verdicts.push(v);
    }
    report.notes.extend(r.diagnostics.iter().cloned());
}

fn axioms(input: &Input, report: &mut Report) -> Result<(), CliError> {
    match input {
        Input::Algebra(alg) => push_axioms(report, &enveloping_report(alg)),
        Input::Poisson { name, .. } => {
            let (pi, _, _) = poisson(input)?;
            let base = name.strip_prefix("VL-").unwrap_or(name);
            push_axioms(report, &vl_report(base, pi)?);
        }
        Input::Hochschild { .. } => return Err(wrong_kind(input, "finite-algebra or poisson")),
    }
    Ok(())
}
