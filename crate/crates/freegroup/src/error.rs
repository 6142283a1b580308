use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FreeGroupError {
    #[error("generator {0} outside ±1..±{1}")]
    GeneratorOutOfRange(i32, usize),
}
