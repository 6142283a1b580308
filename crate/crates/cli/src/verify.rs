use cassonlin::SolverOptions;
use serde_json::json;

use crate::random::rng;
use crate::report::{Budget, RunReport};
use crate::suites;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scope {
    All,
    Gassner,
    Alexander,
    Signature,
    Cassonlin,
}

/// Case counts of the randomized suites.
pub const IDENTITY_BRAIDS: usize = 200;
pub const TORRES_CLOSURES: usize = 20;
pub const LONG_BRAIDS: usize = 100;

/// Runs the suites of `scope`. Randomized suites stop early when `budget`
/// runs out, which then shows up as a failed check with too few cases.
pub fn verify(scope: Scope, budget: Budget, opts: &SolverOptions) -> RunReport {
    let mut report = RunReport::new("verify", json!({ "scope": scope }), opts.orientation);
    report.seed = Some(opts.seed);
    let mut r = rng(opts.seed);
    let wants = |s: Scope| scope == Scope::All || scope == s;

    if wants(Scope::Gassner) {
        let checks = report.timed("gassner", || {
            vec![
                suites::identity_battery(&mut r, IDENTITY_BRAIDS, budget),
                suites::gassner_products(&mut r, IDENTITY_BRAIDS, budget),
            ]
        });
        report.checks.extend(checks);
    }
    if wants(Scope::Alexander) {
        let checks = report.timed("alexander", || {
            vec![
                suites::potential_examples(),
                suites::potential_symmetry(&mut r, IDENTITY_BRAIDS, budget),
                suites::torres(&mut r, TORRES_CLOSURES, budget),
            ]
        });
        report.checks.extend(checks);
    }
    if wants(Scope::Signature) {
        let checks = report.timed("signature", || vec![suites::signature_parity()]);
        report.checks.extend(checks);
    }
    if wants(Scope::Cassonlin) {
        let checks = report.timed("cassonlin", || {
            vec![
                suites::long_checks(&mut r, LONG_BRAIDS, budget),
                suites::casson_lin_base_cases(&mut r, 10, opts),
                suites::markov_invariance(opts),
                suites::crossing_change(&mut r, 3, opts),
                suites::signature_formula_family(&mut r, 1, 5, opts),
                suites::signature_formula_family(&mut r, 2, 5, opts),
                suites::local_constancy(&mut r, 5, opts),
                suites::reducibility(&mut r, 20, opts),
            ]
        });
        report.checks.extend(checks);
    }
    report
}
