use braidcore::ColoredBraidWord;
use laurent::{PolyMat, Torus, C64};
use nalgebra::DMatrix;

use crate::error::GassnerError;
use crate::matrix::{gassner_reduced, gassner_unreduced, prefix_monomials};

pub fn evaluate(m: &PolyMat, z: &Torus) -> DMatrix<C64> {
    let rows = m.evaluate(z);
    DMatrix::from_fn(m.rows(), m.cols(), |i, j| rows[i][j])
}

/// `|g̃ B_ω - g̃|` for the row vector `g̃ = (1, ω_{c_1}, …, ω_{c_1}⋯ω_{c_{n-1}})`.
pub fn fixed_vector_residual(b: &ColoredBraidWord, z: &Torus) -> Result<f64, GassnerError> {
    let m = evaluate(&gassner_unreduced(b)?.matrix, z);
    let v = DMatrix::from_fn(1, b.strands(), |_, j| prefix_monomials(b.bottom())[j].evaluate(z));
    Ok((&v * &m - &v).norm())
}

/// Whether `g̃` spans the fixed vectors of `B_ω`: it is fixed and
/// `B_ω - I` has rank `n - 1`.
///
/// Requires `ω_{c_1}⋯ω_{c_n} ≠ 1` and `det(B̄_ω - I) ≠ 0`, checked with
/// the point's tolerance.
pub fn fixed_vector_check(b: &ColoredBraidWord, z: &Torus) -> Result<bool, GassnerError> {
    let tol = z.tolerance();
    let c = b.bottom();
    let total = prefix_monomials(c)[c.len()].evaluate(z);
    if (total - C64::new(1.0, 0.0)).norm() <= tol {
        return Err(GassnerError::PreconditionViolated("product of the strand variables is 1".into()));
    }
    let reduced = evaluate(&gassner_reduced(b)?.matrix.minus_identity(), z);
    if reduced.determinant().norm() <= tol {
        return Err(GassnerError::PreconditionViolated("closure's Alexander polynomial vanishes".into()));
    }
    if fixed_vector_residual(b, z)? > tol.sqrt() {
        return Ok(false);
    }
    let n = b.strands();
    let shifted = evaluate(&gassner_unreduced(b)?.matrix, z) - DMatrix::<C64>::identity(n, n);
    let sv = shifted.singular_values();
    let scale = sv.max().max(1.0);
    let rank = sv.iter().filter(|&&s| s > tol.sqrt() * scale).count();
    Ok(rank + 1 == n)
}
