use alexander::casson_lin_defined;
use braidcore::ColoredBraidWord;
use serde::Serialize;

use crate::class::RepClass;
use crate::error::CassonLinError;
use crate::sign::{intersection_sign_at, ORIENTATION_SIGN};
use crate::solver::{fixed_residual, search_fixed_classes, Orientation, SearchStats, SolverOptions};

fn check_alpha(b: &ColoredBraidWord, alpha: &[f64]) -> Result<(), CassonLinError> {
    b.require_color_preserving()?;
    if alpha.len() != b.mu() {
        return Err(CassonLinError::PreconditionViolated(format!("{} angles for {} colors", alpha.len(), b.mu())));
    }
    if alpha.iter().any(|a| !(*a > 0.0 && *a < std::f64::consts::PI)) {
        return Err(CassonLinError::PreconditionViolated("angles must lie in (0, pi)".into()));
    }
    if !casson_lin_defined(b, alpha)? {
        return Err(CassonLinError::NotDefinedHere);
    }
    Ok(())
}

/// Irreducible fixed classes of `β` on the trace spheres `tr X_i = 2 cos α_{c_i}`.
pub fn find_fixed_classes(
    b: &ColoredBraidWord,
    alpha: &[f64],
    opts: &SolverOptions,
) -> Result<(Vec<RepClass>, SearchStats), CassonLinError> {
    check_alpha(b, alpha)?;
    Ok(search_fixed_classes(b, alpha, opts))
}

#[derive(Clone, Debug, Serialize)]
pub struct SignedClass {
    pub class: RepClass,
    pub sign: i32,
    pub residual: f64,
    pub condition: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct FixedPointResult {
    pub alpha: Vec<f64>,
    pub classes: Vec<SignedClass>,
    pub h: i64,
    pub stats: SearchStats,
    pub seed: u64,
    /// Smallest reciprocal condition number over the classes.
    pub transversality_margin: f64,
    pub orientation: Orientation,
    pub orientation_sign: i32,
}

/// The intersection sign of one class, which must be a nondegenerate fixed point.
pub fn intersection_sign(
    cls: &RepClass,
    b: &ColoredBraidWord,
    opts: &SolverOptions,
) -> Result<SignedClass, CassonLinError> {
    let local = intersection_sign_at(b, &cls.representative, opts.orientation);
    if !(local.condition <= opts.max_condition) {
        return Err(CassonLinError::NonTransverse { condition: local.condition });
    }
    Ok(SignedClass {
        class: cls.clone(),
        sign: local.sign,
        residual: fixed_residual(b, &cls.representative),
        condition: local.condition,
    })
}

/// `h_L(α)` as the signed count of irreducible fixed classes.
pub fn casson_lin(b: &ColoredBraidWord, alpha: &[f64], opts: &SolverOptions) -> Result<FixedPointResult, CassonLinError> {
    let (classes, stats) = find_fixed_classes(b, alpha, opts)?;
    let classes = classes.iter().map(|c| intersection_sign(c, b, opts)).collect::<Result<Vec<_>, _>>()?;
    let h = classes.iter().map(|c| i64::from(c.sign)).sum();
    let transversality_margin = classes.iter().map(|c| 1.0 / c.condition).fold(1.0, f64::min);
    Ok(FixedPointResult {
        alpha: alpha.to_vec(),
        classes,
        h,
        stats,
        seed: opts.seed,
        transversality_margin,
        orientation: opts.orientation,
        orientation_sign: ORIENTATION_SIGN,
    })
}
