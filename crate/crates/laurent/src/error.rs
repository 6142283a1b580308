use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LaurentError {
    #[error("variable count mismatch: {0} vs {1}")]
    VariableCountMismatch(usize, usize),
    #[error("matrix is {0}x{1}, expected square")]
    NotSquare(usize, usize),
    #[error("matrix shapes {0:?} and {1:?} are incompatible")]
    ShapeMismatch((usize, usize), (usize, usize)),
    #[error("not divisible")]
    NotDivisible,
    #[error("division by zero")]
    DivisionByZero,
    #[error("odd stored exponent where an integral exponent is required")]
    HalfExponentResidue,
    #[error("torus point off the unit circle: |omega_{0}| = {1}")]
    OffCircle(usize, f64),
    #[error("malformed polynomial data: {0}")]
    Parse(String),
}
