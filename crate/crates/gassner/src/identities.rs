use std::fmt;

use braidcore::ColoredBraidWord;
use laurent::{Poly, PolyMat};

use crate::error::GassnerError;
use crate::matrix::{gassner_gbasis, gassner_reduced, gassner_unreduced, minor_det, prefix_monomials};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    Skipped(&'static str),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub outcome: Outcome,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    /// No check failed; skipped checks count as passing.
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| !matches!(c.outcome, Outcome::Fail(_)))
    }

    pub fn failures(&self) -> Vec<&IdentityCheck> {
        self.checks.iter().filter(|c| matches!(c.outcome, Outcome::Fail(_))).collect()
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.outcome {
                Outcome::Pass => writeln!(f, "{}: pass", c.name)?,
                Outcome::Fail(why) => writeln!(f, "{}: FAIL ({why})", c.name)?,
                Outcome::Skipped(why) => writeln!(f, "{}: skipped ({why})", c.name)?,
            }
        }
        Ok(())
    }
}

fn outcome(failure: Option<String>) -> Outcome {
    failure.map_or(Outcome::Pass, Outcome::Fail)
}

/// Row and column sums: `Σ_j (t_{c_j} - 1) B_{ij} = t_{c_i} - 1` and
/// `Σ_i m_i B_{ij} = m_j`, 0-based `m_k = t_{c_1}⋯t_{c_k}`.
fn fox_sums(b: &PolyMat, t_minus_one: &[Poly], m: &[Poly]) -> (Outcome, Outcome) {
    let n = b.rows();
    let rows = (0..n).find_map(|i| {
        let lhs = (0..n).fold(Poly::zero(b.mu()), |acc, j| acc + &t_minus_one[j] * b.get(i, j));
        (lhs != t_minus_one[i]).then(|| format!("row {i}: {lhs}"))
    });
    let cols = (0..n).find_map(|j| {
        let lhs = (0..n).fold(Poly::zero(b.mu()), |acc, i| acc + &m[i] * b.get(i, j));
        (lhs != m[j]).then(|| format!("column {j}: {lhs}"))
    });
    (outcome(rows), outcome(cols))
}

/// `(t_{c_m'} - 1) m_{l'} B(l, m) = (-1)^{l+l'+m+m'} (t_{c_m} - 1) m_l B(l', m')`.
fn minor_exchange(minors: &[Vec<Poly>], t_minus_one: &[Poly], m: &[Poly]) -> Outcome {
    let n = minors.len();
    for l in 0..n {
        for lp in 0..n {
            for c in 0..n {
                for cp in 0..n {
                    let lhs = &(&t_minus_one[cp] * &m[lp]) * &minors[l][c];
                    let mut rhs = &(&t_minus_one[c] * &m[l]) * &minors[lp][cp];
                    if (l + lp + c + cp) % 2 == 1 {
                        rhs = -rhs;
                    }
                    if lhs != rhs {
                        return Outcome::Fail(format!("l={l} l'={lp} m={c} m'={cp}"));
                    }
                }
            }
        }
    }
    Outcome::Pass
}

/// Runs every exact identity on a color-preserving braid. Failures are
/// reported, never raised; errors only come from computing the matrices.
pub fn identity_suite(beta: &ColoredBraidWord) -> Result<IdentityReport, GassnerError> {
    let c = beta.bottom();
    let (mu, n) = (c.mu(), beta.strands());
    let one = Poly::one(mu);
    let b = gassner_unreduced(beta)?.matrix;
    let m = prefix_monomials(c);
    let t_minus_one: Vec<Poly> = (0..n).map(|i| Poly::var(mu, c.color(i) - 1) - &one).collect();
    let minors: Vec<Vec<Poly>> = (0..n).map(|l| (0..n).map(|col| minor_det(&b, l, col)).collect()).collect();

    let mut checks = Vec::new();
    let (rows, cols) = fox_sums(&b, &t_minus_one, &m);
    checks.push(IdentityCheck { name: "row_sums", outcome: rows });
    checks.push(IdentityCheck { name: "column_sums", outcome: cols });
    checks.push(IdentityCheck { name: "minor_exchange", outcome: minor_exchange(&minors, &t_minus_one, &m) });

    // (m_n - 1) B(1,1) = (t_{c_1} - 1) det(B̄ - I)
    let reduced = gassner_reduced(beta)?.matrix;
    let reduced_det = reduced.minus_identity().det()?;
    let lhs = &(&m[n] - &one) * &minors[0][0];
    let rhs = &t_minus_one[0] * &reduced_det;
    checks.push(IdentityCheck {
        name: "reduced_determinant",
        outcome: outcome((lhs != rhs).then(|| format!("{lhs} vs {rhs}"))),
    });

    let double_twist = if n < 2 || c.color(0) != c.color(1) {
        Outcome::Skipped("first two strands differ in color")
    } else {
        let twisted = beta.left_multiply(&[1, 1])?;
        let lhs = minor_det(&gassner_unreduced(&twisted)?.matrix, 0, 0);
        let keep: Vec<usize> = (2..n).collect();
        let d = b.select(&keep, &keep).minus_identity().det()?;
        let t1 = Poly::var(mu, c.color(0) - 1);
        let rhs = &(&(&t1 * &t1) * &minors[0][0]) + &(&t_minus_one[0] * &d);
        outcome((lhs != rhs).then(|| format!("{lhs} vs {rhs}")))
    };
    checks.push(IdentityCheck { name: "double_twist_minor", outcome: double_twist });

    let gbasis = if n < 2 {
        Outcome::Skipped("needs two strands")
    } else {
        let bt = gassner_gbasis(beta)?.matrix;
        // -(m_n - 1) B̃(n, n-1) = (m_{n-1} - 1) B̃(n, n), 1-based minors
        let lhs = -(&(&m[n] - &one) * &minor_det(&bt, n - 1, n - 2));
        let rhs = &(&m[n - 1] - &one) * &minor_det(&bt, n - 1, n - 1);
        let mut failure = (lhs != rhs).then(|| format!("{lhs} vs {rhs}"));
        if failure.is_none() && minor_det(&bt, n - 1, n - 1) != reduced_det {
            failure = Some("corner minor differs from reduced determinant".into());
        }
        outcome(failure)
    };
    checks.push(IdentityCheck { name: "gbasis_minors", outcome: gbasis });

    Ok(IdentityReport { checks })
}
