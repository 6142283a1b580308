//! The acceptance criteria, one line each. Runs without the test harness so
//! the lines are printed as they finish; exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use cassonlin::SolverOptions;
use glcli::random::{rng, DEFAULT_SEED};
use glcli::suites;
use glcli::{Budget, Check, IDENTITY_BRAIDS, LONG_BRAIDS, TORRES_CLOSURES};
use rand_chacha::ChaCha8Rng;

struct Criterion {
    title: &'static str,
    limit: Duration,
    run: fn(&mut ChaCha8Rng, &SolverOptions) -> Vec<Check>,
}

fn minutes(m: u64) -> Duration {
    Duration::from_secs(60 * m)
}

fn criteria() -> Vec<Criterion> {
    vec![
        Criterion {
            title: "symbolic identity battery",
            limit: minutes(2),
            run: |r, _| vec![suites::identity_battery(r, IDENTITY_BRAIDS, Budget::unlimited())],
        },
        Criterion {
            title: "Gassner multiplicativity and dual paths",
            limit: minutes(2),
            run: |r, _| vec![suites::gassner_products(r, IDENTITY_BRAIDS, Budget::unlimited())],
        },
        Criterion {
            title: "potential function checks",
            limit: minutes(1),
            run: |r, _| {
                vec![
                    suites::potential_examples(),
                    suites::potential_symmetry(r, IDENTITY_BRAIDS, Budget::unlimited()),
                    suites::torres(r, TORRES_CLOSURES, Budget::unlimited()),
                ]
            },
        },
        Criterion {
            title: "linearization at abelian tuples",
            limit: minutes(3),
            run: |r, _| vec![suites::long_checks(r, LONG_BRAIDS, Budget::unlimited())],
        },
        Criterion {
            title: "h base cases",
            limit: minutes(2),
            run: |r, o| vec![suites::casson_lin_base_cases(r, 10, o)],
        },
        Criterion { title: "Markov invariance of h", limit: minutes(5), run: |_, o| vec![suites::markov_invariance(o)] },
        Criterion {
            title: "crossing change formula",
            limit: minutes(5),
            run: |r, o| vec![suites::crossing_change(r, 4, o)],
        },
        Criterion {
            title: "h against signatures, linking number one family",
            limit: minutes(10),
            run: |r, o| vec![suites::signature_formula_family(r, 1, 5, o), suites::signature_formula_family(r, 2, 5, o)],
        },
        Criterion { title: "local constancy of h", limit: minutes(2), run: |r, o| vec![suites::local_constancy(r, 5, o)] },
        Criterion {
            title: "reducibility criterion",
            limit: minutes(2),
            run: |r, o| vec![suites::reducibility(r, 20, o)],
        },
    ]
}

fn main() -> ExitCode {
    let seed = std::env::var("GL_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(DEFAULT_SEED);
    let opts = SolverOptions { seed, ..SolverOptions::default() };
    println!("acceptance (seed {seed})");
    let mut all = true;
    for (k, c) in criteria().iter().enumerate() {
        let mut r = rng(seed.wrapping_add(k as u64));
        let start = Instant::now();
        let checks = (c.run)(&mut r, &opts);
        let elapsed = start.elapsed();
        let in_time = elapsed <= c.limit;
        let passed = in_time && checks.iter().all(|ch| ch.passed);
        all &= passed;
        let details: Vec<String> = checks.iter().map(|ch| format!("{} [{}]: {}", ch.identity, ch.tolerance, ch.detail)).collect();
        println!(
            "criterion {:>2} {}: {} ({:.1}s of {}s) {}",
            k + 1,
            c.title,
            if passed { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            c.limit.as_secs(),
            details.join(" | ")
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
