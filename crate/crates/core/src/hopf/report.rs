use serde::Serialize;

/// Outcome of one identity checked on a finite set of cases.
#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub suite: String,
    pub name: String,
    pub passed: bool,
    pub cases: usize,
    /// First failing case, when there is one.
    pub witness: Option<String>,
    /// Set for checks that hold for structural reasons (e.g. commuting actions).
    pub trivial: bool,
}

/// Accumulates cases for one check.
pub struct Check {
    suite: String,
    name: String,
    cases: usize,
    witness: Option<String>,
    trivial: bool,
}

impl Check {
    pub fn new(suite: &str, name: &str) -> Self {
        Check { suite: suite.into(), name: name.into(), cases: 0, witness: None, trivial: false }
    }

    pub fn trivial(mut self) -> Self {
        self.trivial = true;
        self
    }

    /// Records one case; `describe` is only called on the first failure.
    pub fn case(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(describe());
        }
    }

    pub fn finish(self) -> CheckResult {
        CheckResult {
            passed: self.witness.is_none(),
            suite: self.suite,
            name: self.name,
            cases: self.cases,
            witness: self.witness,
            trivial: self.trivial,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomReport {
    pub structure: String,
    pub checks: Vec<CheckResult>,
    /// Facts computed alongside the checks that are not themselves pass/fail.
    pub diagnostics: Vec<String>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> Vec<&CheckResult> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}
