//! The JSON report and its CSV and text renderings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use hopfdual_core::homology::BettiTable;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table {
    pub kind: String,
    pub window: (i64, i64),
    /// `[degree, weight, dimension]`, sorted by degree then weight.
    pub entries: Vec<(usize, i64, usize)>,
}

impl From<&BettiTable> for Table {
    fn from(t: &BettiTable) -> Self {
        Table { kind: t.kind.clone(), window: t.window, entries: t.entry_list() }
    }
}

impl Table {
    pub fn renamed(mut self, kind: &str) -> Self {
        self.kind = kind.to_string();
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub name: String,
    pub passed: bool,
    /// Diagnostics are reported but do not decide the exit code.
    pub diagnostic: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cases: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Verdict {
    pub fn check(name: &str, passed: bool) -> Self {
        Verdict { name: name.into(), passed, diagnostic: false, cases: None, detail: None }
    }

    pub fn diagnostic(name: &str, passed: bool) -> Self {
        Verdict { diagnostic: true, ..Verdict::check(name, passed) }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub fixture: String,
    pub tables: Vec<Table>,
    pub verdicts: Vec<Verdict>,
    pub shift: Option<i64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub version: String,
    pub timing_ms: u64,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.verdicts.iter().filter(|v| !v.diagnostic).all(|v| v.passed)
    }

    pub fn table(&self, kind: &str) -> Option<&Table> {
        self.tables.iter().find(|t| t.kind == kind)
    }

    pub fn verdict(&self, name: &str) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.name == name)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("section,name,degree,weight,value\n");
        for t in &self.tables {
            for (i, w, d) in &t.entries {
                let _ = writeln!(out, "table,{},{i},{w},{d}", t.kind);
            }
        }
        for v in &self.verdicts {
            let _ = writeln!(out, "verdict,{},,,{}", v.name, if v.passed { "PASS" } else { "FAIL" });
        }
        if let Some(s) = self.shift {
            let _ = writeln!(out, "shift,,,,{s}");
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}  (hopfdual {})\n", self.command, self.fixture, self.version);
        for t in &self.tables {
            let _ = writeln!(out, "\n{}  weights {}..{}", t.kind, t.window.0, t.window.1);
            let degrees = t.entries.iter().map(|e| e.0).max().map_or(0, |d| d + 1);
            let weights: Vec<i64> = (t.window.0..=t.window.1).collect();
            let _ = write!(out, "{:>5}", "i\\w");
            for w in &weights {
                let _ = write!(out, "{w:>6}");
            }
            out.push('\n');
            for i in 0..degrees {
                let _ = write!(out, "{i:>5}");
                for &w in &weights {
                    match t.entries.iter().find(|e| e.0 == i && e.1 == w) {
                        Some(e) => {
                            let _ = write!(out, "{:>6}", e.2);
                        }
                        None => out.push_str("     ."),
                    }
                }
                out.push('\n');
            }
        }
        if !self.verdicts.is_empty() {
            out.push('\n');
        }
        for v in &self.verdicts {
            let tag = match (v.passed, v.diagnostic) {
                (true, false) => "PASS",
                (false, false) => "FAIL",
                (true, true) => "pass",
                (false, true) => "fail",
            };
            let _ = write!(out, "{tag} {}", v.name);
            if let Some(c) = v.cases {
                let _ = write!(out, " ({c} cases)");
            }
            if let Some(d) = &v.detail {
                let _ = write!(out, ": {d}");
            }
            out.push('\n');
        }
        if let Some(s) = self.shift {
            let _ = writeln!(out, "shift {s}");
        }
        for n in &self.notes {
            let _ = writeln!(out, "note: {n}");
        }
        out
    }
}
