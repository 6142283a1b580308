//! Colored braid words and the combinatorics of their closures.
//!
//! Letters are signed generator indices: `+i` is `σ_i` and `-i` is `σ_i^{-1}`
//! with `1 ≤ i < n`. In `σ_i` the strand at position `i` passes over the
//! strand at position `i + 1`, and that crossing counts as positive.
//! Colors are 1-based; positions, strands and components are 0-based.

mod closure;
mod coloring;
mod error;
mod parse;
mod word;

pub use closure::{ClosureData, Component};
pub use coloring::Coloring;
pub use error::BraidError;
pub use word::{ColoredBraidWord, Permutation};
