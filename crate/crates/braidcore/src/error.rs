use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("top coloring {top:?} does not match bottom coloring {bottom:?}")]
    ColoringMismatch { top: Vec<usize>, bottom: Vec<usize> },
    #[error("color {0} outside 1..={1}")]
    InvalidColor(usize, usize),
    #[error("color {0} of 1..={1} is never used")]
    UnusedColor(usize, usize),
    #[error("a closure component visits colors {0} and {1}")]
    InconsistentColoring(usize, usize),
    #[error("generator {0} outside ±1..±{1}")]
    GeneratorOutOfRange(i32, usize),
    #[error("coloring has {0} entries for {1} strands")]
    LengthMismatch(usize, usize),
    #[error("braid is not color preserving")]
    NotColorPreserving,
    #[error("braid file: {0}")]
    Parse(String),
}
