use serde::{Deserialize, Serialize};

use crate::error::BraidError;

/// A surjective map from strand positions onto the colors `1..=mu`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coloring {
    colors: Vec<usize>,
    mu: usize,
}

impl Coloring {
    pub fn new(colors: Vec<usize>, mu: usize) -> Result<Self, BraidError> {
        let mut seen = vec![false; mu];
        for &c in &colors {
            if c == 0 || c > mu {
                return Err(BraidError::InvalidColor(c, mu));
            }
            seen[c - 1] = true;
        }
        if let Some(k) = seen.iter().position(|s| !s) {
            return Err(BraidError::UnusedColor(k + 1, mu));
        }
        Ok(Self { colors, mu })
    }

    /// Every strand gets color 1.
    pub fn uniform(n: usize) -> Self {
        Self { colors: vec![1; n], mu: 1 }
    }

    /// Strand `i` gets color `i + 1`.
    pub fn ordered(n: usize) -> Self {
        Self { colors: (1..=n).collect(), mu: n }
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn mu(&self) -> usize {
        self.mu
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Color at 0-based position `i`.
    pub fn color(&self, i: usize) -> usize {
        self.colors[i]
    }

    pub(crate) fn swapped(&self, a: usize) -> Self {
        let mut colors = self.colors.clone();
        colors.swap(a, a + 1);
        Self { colors, mu: self.mu }
    }

    pub(crate) fn pushed(&self, color: usize) -> Self {
        let mut colors = self.colors.clone();
        colors.push(color);
        Self { colors, mu: self.mu }
    }
}
