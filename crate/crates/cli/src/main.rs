use std::path::PathBuf;
use std::process::ExitCode;

use alexander::{casson_lin_defined, link_polynomials, potential};
use cassonlin::{casson_lin, crossing_delta, long_check_all_signs, Orientation, SolverOptions};
use clap::{Args, Parser, Subcommand};
use gassner::{evaluate, gassner_reduced, gassner_unreduced};
use glcli::{
    check_arity, parse_point, read_braid, read_seifert, signature_formula_demo, torus_from_arguments, verify, Budget, Check,
    CliError, RunReport, Scope,
};
use laurent::{poly_to_json, Poly, PolyMat};
use serde_json::{json, Value};
use signature::signature_nullity;

#[derive(Parser)]
#[command(name = "gl", about = "Colored Gassner matrices, potentials, signatures and Casson-Lin invariants of braid closures")]
struct Cli {
    /// Render a human-readable table instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Solver {
    /// Seed for the multistart search.
    #[arg(long, env = "GL_SEED", default_value_t = glcli::random::DEFAULT_SEED)]
    seed: u64,
    /// Cap on the total number of solver starts.
    #[arg(long)]
    restarts: Option<usize>,
    /// Use the opposite ambient orientation (flips every sign).
    #[arg(long)]
    reversed: bool,
}

impl Solver {
    fn options(&self) -> SolverOptions {
        let mut opts = SolverOptions { seed: self.seed, ..SolverOptions::default() };
        if let Some(n) = self.restarts {
            opts.max_batches = n.div_ceil(opts.batch_size).max(1);
        }
        if self.reversed {
            opts.orientation = Orientation::Reversed;
        }
        opts
    }
}

#[derive(Subcommand)]
enum Command {
    /// Colored Gassner matrix, exact or evaluated at `ω_k = e^{iθ_k}`.
    Gassner {
        braidfile: PathBuf,
        #[arg(long)]
        reduced: bool,
        #[arg(long, num_args = 1.., allow_negative_numbers = true)]
        eval: Option<Vec<f64>>,
    },
    /// Potential function.
    Potential { braidfile: PathBuf },
    /// Multivariable Alexander polynomial, unit-normalized.
    Alexander { braidfile: PathBuf },
    /// Whether the Casson-Lin invariant is defined at `α`.
    Defined {
        braidfile: PathBuf,
        #[arg(long, num_args = 1.., required = true)]
        alpha: Vec<f64>,
    },
    /// Signature and nullity of a Seifert system at `ω_k = e^{iθ_k}`.
    Signature {
        seifertfile: PathBuf,
        #[arg(long, num_args = 1.., required = true, allow_negative_numbers = true)]
        omega: Vec<f64>,
    },
    /// Signed count of irreducible fixed classes.
    CassonLin {
        braidfile: PathBuf,
        #[arg(long, num_args = 1.., required = true)]
        alpha: Vec<f64>,
        #[command(flatten)]
        solver: Solver,
    },
    /// Predicted and observed change of `h` under `β -> σ_1^2 β`.
    CrossingDelta {
        braidfile: PathBuf,
        #[arg(long, num_args = 1.., required = true)]
        alpha: Vec<f64>,
        #[command(flatten)]
        solver: Solver,
    },
    /// Linearization of the action at every abelian tuple.
    VerifyLong {
        braidfile: PathBuf,
        #[arg(long, num_args = 1.., required = true)]
        alpha: Vec<f64>,
    },
    /// `h` against the signature side at each `--at a_1,a_2`.
    SignatureFormula {
        braidfile: PathBuf,
        seifertfile: PathBuf,
        #[arg(long = "at", required = true)]
        points: Vec<String>,
        #[command(flatten)]
        solver: Solver,
    },
    /// Identity battery and invariant checks.
    Verify {
        #[arg(long, value_enum, default_value_t = Scope::All)]
        scope: Scope,
        /// Wall-clock budget in seconds for the randomized suites.
        #[arg(long)]
        budget: Option<f64>,
        #[command(flatten)]
        solver: Solver,
    },
}

fn poly_json(p: &Poly) -> Value {
    json!({ "text": p.to_string(), "terms": poly_to_json(p) })
}

fn matrix_json(m: &PolyMat) -> Value {
    Value::Array(m.to_rows().iter().map(|row| Value::Array(row.iter().map(poly_json).collect())).collect())
}

fn run(command: Command) -> Result<RunReport, CliError> {
    let standard = Orientation::Standard;
    Ok(match command {
        Command::Gassner { braidfile, reduced, eval } => {
            let b = read_braid(&braidfile)?;
            let mut report = RunReport::new("gassner", json!({ "braid": b.to_string(), "reduced": reduced, "eval": eval }), standard);
            let g = if reduced { gassner_reduced(&b)? } else { gassner_unreduced(&b)? };
            report.results = match eval {
                None => json!({ "basis": format!("{:?}", g.basis), "matrix": matrix_json(&g.matrix) }),
                Some(theta) => {
                    check_arity(&b, &theta, "arguments")?;
                    let m = evaluate(&g.matrix, &torus_from_arguments(&theta)?);
                    let rows: Vec<Vec<[f64; 2]>> =
                        (0..m.nrows()).map(|i| (0..m.ncols()).map(|j| [m[(i, j)].re, m[(i, j)].im]).collect()).collect();
                    json!({ "basis": format!("{:?}", g.basis), "matrix": rows })
                }
            };
            report
        }
        Command::Potential { braidfile } => {
            let b = read_braid(&braidfile)?;
            let p = potential(&b)?;
            let mut report = RunReport::new("potential", json!({ "braid": b.to_string() }), standard);
            report.results = json!({
                "text": p.to_string(),
                "numerator": poly_json(p.numerator()),
                "over_conway_factor": p.has_conway_denominator(),
            });
            report
        }
        Command::Alexander { braidfile } => {
            let b = read_braid(&braidfile)?;
            let l = link_polynomials(&b)?;
            let mut report = RunReport::new("alexander", json!({ "braid": b.to_string() }), standard);
            report.results = json!({
                "alexander": poly_json(&l.alexander),
                "potential": l.potential.to_string(),
                "components": l.n_components,
                "mu": l.mu,
                "colors": l.colors,
            });
            report
        }
        Command::Defined { braidfile, alpha } => {
            let b = read_braid(&braidfile)?;
            check_arity(&b, &alpha, "angles")?;
            let mut report = RunReport::new("defined", json!({ "braid": b.to_string(), "alpha": alpha }), standard);
            report.results = json!({ "defined": casson_lin_defined(&b, &alpha)? });
            report
        }
        Command::Signature { seifertfile, omega } => {
            let s = read_seifert(&seifertfile)?;
            if omega.len() != s.mu() {
                return Err(CliError::Input(format!("{} arguments for {} colors", omega.len(), s.mu())));
            }
            let mut report = RunReport::new("signature", json!({ "seifert": s.meta.name, "omega": omega }), standard);
            report.results = serde_json::to_value(signature_nullity(&s, &torus_from_arguments(&omega)?)?)?;
            report
        }
        Command::CassonLin { braidfile, alpha, solver } => {
            let b = read_braid(&braidfile)?;
            check_arity(&b, &alpha, "angles")?;
            let opts = solver.options();
            let mut report =
                RunReport::new("casson-lin", json!({ "braid": b.to_string(), "alpha": alpha }), opts.orientation);
            report.seed = Some(opts.seed);
            let result = report.timed("search", || casson_lin(&b, &alpha, &opts))?;
            report.results = serde_json::to_value(result)?;
            report
        }
        Command::CrossingDelta { braidfile, alpha, solver } => {
            let b = read_braid(&braidfile)?;
            check_arity(&b, &alpha, "angles")?;
            let opts = solver.options();
            let mut report =
                RunReport::new("crossing-delta", json!({ "braid": b.to_string(), "alpha": alpha }), opts.orientation);
            report.seed = Some(opts.seed);
            let r = report.timed("search", || crossing_delta(&b, &alpha, &opts))?;
            report.checks.push(Check::new(
                "crossing change formula for h",
                "exact integers",
                r.predicted == r.observed,
                format!("predicted {}, observed {}", r.predicted, r.observed),
            ));
            report.checks.push(Check::new(
                "potential quotients are real",
                "imaginary part < 1e-9",
                r.max_imaginary < 1e-9,
                format!("{:.1e}", r.max_imaginary),
            ));
            report.results = serde_json::to_value(r)?;
            report
        }
        Command::VerifyLong { braidfile, alpha } => {
            let b = read_braid(&braidfile)?;
            check_arity(&b, &alpha, "angles")?;
            let mut report = RunReport::new("verify-long", json!({ "braid": b.to_string(), "alpha": alpha }), standard);
            let reports = long_check_all_signs(&b, &alpha)?;
            for r in &reports {
                report.checks.push(Check::new(
                    format!("linearization is permutation plus Gassner, eps = {:?}", r.eps),
                    "relative error < 1e-6",
                    r.passed,
                    format!("{:.1e} / {:.1e} / {:.1e}", r.permutation_error, r.gassner_error, r.structure_error),
                ));
            }
            report.results = serde_json::to_value(reports)?;
            report
        }
        Command::SignatureFormula { braidfile, seifertfile, points, solver } => {
            let b = read_braid(&braidfile)?;
            let s = read_seifert(&seifertfile)?;
            let alphas = points.iter().map(|p| parse_point(p)).collect::<Result<Vec<_>, _>>()?;
            for a in &alphas {
                check_arity(&b, a, "angles")?;
            }
            signature_formula_demo(&b, &s, &alphas, &solver.options())?
        }
        Command::Verify { scope, budget, solver } => {
            let budget = budget.map_or_else(Budget::unlimited, Budget::seconds);
            verify(scope, budget, &solver.options())
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(report) => {
            if cli.pretty {
                print!("{}", report.render_table());
            } else {
                println!("{}", report.to_json());
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
