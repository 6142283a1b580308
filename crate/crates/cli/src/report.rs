use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use cassonlin::{Orientation, ORIENTATION_SIGN};
use serde::Serialize;
use serde_json::Value;

/// One pass/fail line: which identity, under which tolerance, on how many
/// cases.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub identity: String,
    pub passed: bool,
    pub tolerance: String,
    pub cases: usize,
    pub detail: String,
}

const SHOWN_FAILURES: usize = 3;

impl Check {
    pub fn new(identity: impl Into<String>, tolerance: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Self { identity: identity.into(), passed, tolerance: tolerance.into(), cases: 1, detail: detail.into() }
    }

    /// Passes when no case failed and at least `required` cases ran.
    pub fn from_cases(
        identity: impl Into<String>,
        tolerance: impl Into<String>,
        ran: usize,
        required: usize,
        failures: &[String],
    ) -> Self {
        let mut detail = format!("{ran} cases");
        if ran < required {
            let _ = write!(detail, ", {required} required");
        }
        if !failures.is_empty() {
            let _ = write!(detail, ", {} failed", failures.len());
            for f in failures.iter().take(SHOWN_FAILURES) {
                let _ = write!(detail, "; {f}");
            }
        }
        Self {
            identity: identity.into(),
            passed: failures.is_empty() && ran >= required,
            tolerance: tolerance.into(),
            cases: ran,
            detail,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Conventions {
    pub orientation: Orientation,
    pub orientation_sign: i32,
    pub square_root_branch: &'static str,
    pub alpha_convention: &'static str,
    pub omega_convention: &'static str,
}

impl Conventions {
    pub fn new(orientation: Orientation) -> Self {
        Self {
            orientation,
            orientation_sign: ORIENTATION_SIGN,
            square_root_branch: "omega^(1/2) = e^(i a) with a in [0, pi)",
            alpha_convention: "--alpha a_k means omega_k = e^(2 i a_k)",
            omega_convention: "--omega and --eval t_k mean omega_k = e^(i t_k)",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub checks: Vec<Check>,
    pub seed: Option<u64>,
    /// Seconds per phase.
    pub timings: BTreeMap<String, f64>,
    pub conventions: Conventions,
}

impl RunReport {
    pub fn new(command: &str, inputs: Value, orientation: Orientation) -> Self {
        Self {
            command: command.into(),
            inputs,
            results: Value::Null,
            checks: Vec::new(),
            seed: None,
            timings: BTreeMap::new(),
            conventions: Conventions::new(orientation),
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// Runs `f`, recording its wall time under `phase`.
    pub fn timed<T>(&mut self, phase: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        self.timings.insert(phase.into(), start.elapsed().as_secs_f64());
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// Human-readable rendering: the check table, then the results.
    pub fn render_table(&self) -> String {
        let mut out = self.command.clone();
        if let Some(seed) = self.seed {
            let _ = write!(out, " (seed {seed})");
        }
        out.push('\n');
        if !self.checks.is_empty() {
            let width = self.checks.iter().map(|c| c.identity.len()).max().unwrap_or(0);
            for c in &self.checks {
                let verdict = if c.passed { "pass" } else { "FAIL" };
                let _ = writeln!(out, "  {verdict}  {:width$}  [{}]  {}", c.identity, c.tolerance, c.detail);
            }
        }
        for (phase, secs) in &self.timings {
            let _ = writeln!(out, "  time  {phase}: {secs:.2}s");
        }
        if !self.results.is_null() {
            out.push_str(&serde_json::to_string_pretty(&self.results).expect("results serialize"));
            out.push('\n');
        }
        out
    }
}

/// Optional wall-clock limit for randomized suites.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    deadline: Option<Instant>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Self { deadline: None }
    }

    pub fn seconds(s: f64) -> Self {
        Self { deadline: Some(Instant::now() + Duration::from_secs_f64(s)) }
    }

    pub fn exhausted(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }
}
