use serde::{Deserialize, Serialize};

use crate::closure::ClosureData;
use crate::coloring::Coloring;
use crate::error::BraidError;

/// A bijection of strand positions, 0-based: `images[p]` is where the strand
/// entering at position `p` leaves the braid.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self { images: (0..n).collect() }
    }

    /// Panics unless `images` is a bijection of `0..images.len()`.
    pub fn from_images(images: Vec<usize>) -> Self {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            assert!(i < images.len() && !seen[i], "not a bijection: {images:?}");
            seen[i] = true;
        }
        Self { images }
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, p: usize) -> usize {
        self.images[p]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Self { images: inv }
    }

    /// `self` then `other`.
    pub fn then(&self, other: &Self) -> Self {
        Self { images: self.images.iter().map(|&i| other.images[i]).collect() }
    }

    /// Cycles in order of their smallest element, each starting there.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p);
                p = self.images[p];
            }
            out.push(cycle);
        }
        out
    }
}

/// A braid word on `strands` strands with a coloring of its starting level.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ColoredBraidWord {
    strands: usize,
    bottom: Coloring,
    letters: Vec<i32>,
}

impl ColoredBraidWord {
    pub fn new(strands: usize, bottom: Coloring, letters: Vec<i32>) -> Result<Self, BraidError> {
        if bottom.len() != strands {
            return Err(BraidError::LengthMismatch(bottom.len(), strands));
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(BraidError::GeneratorOutOfRange(l, strands.saturating_sub(1)));
            }
        }
        Ok(Self { strands, bottom, letters })
    }

    /// A color-preserving word: every cycle of the induced permutation takes
    /// the label `labels[p]` of its smallest position `p`, and the labels in
    /// use are renumbered `1..=mu` in increasing order.
    pub fn colored_by_cycles(strands: usize, letters: Vec<i32>, labels: &[usize]) -> Result<Self, BraidError> {
        if labels.len() != strands {
            return Err(BraidError::LengthMismatch(labels.len(), strands));
        }
        let plain = Self::new(strands, Coloring::uniform(strands), letters)?;
        let cycles = plain.induced_permutation().cycles();
        let mut used: Vec<usize> = cycles.iter().map(|c| labels[c[0]]).collect();
        used.sort_unstable();
        used.dedup();
        let mut colors = vec![0; strands];
        for cycle in &cycles {
            let color = used.binary_search(&labels[cycle[0]]).unwrap() + 1;
            for &p in cycle {
                colors[p] = color;
            }
        }
        Ok(Self { bottom: Coloring::new(colors, used.len())?, ..plain })
    }

    pub fn identity(bottom: Coloring) -> Self {
        Self { strands: bottom.len(), bottom, letters: Vec::new() }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn bottom(&self) -> &Coloring {
        &self.bottom
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn mu(&self) -> usize {
        self.bottom.mu()
    }

    /// Colorings of the `len() + 1` levels; level `j` sits just before letter `j`.
    pub fn levels(&self) -> Vec<Coloring> {
        let mut out = Vec::with_capacity(self.letters.len() + 1);
        let mut c = self.bottom.clone();
        for &l in &self.letters {
            let next = c.swapped(l.unsigned_abs() as usize - 1);
            out.push(c);
            c = next;
        }
        out.push(c);
        out
    }

    pub fn top(&self) -> Coloring {
        self.letters
            .iter()
            .fold(self.bottom.clone(), |c, &l| c.swapped(l.unsigned_abs() as usize - 1))
    }

    /// A `(c,c)`-braid: top and bottom colorings agree.
    pub fn is_color_preserving(&self) -> bool {
        self.top() == self.bottom
    }

    pub fn require_color_preserving(&self) -> Result<(), BraidError> {
        if self.is_color_preserving() {
            Ok(())
        } else {
            Err(BraidError::NotColorPreserving)
        }
    }

    pub fn induced_permutation(&self) -> Permutation {
        // at[q] = strand currently at position q
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let a = l.unsigned_abs() as usize - 1;
            at.swap(a, a + 1);
        }
        let mut images = vec![0; self.strands];
        for (q, &s) in at.iter().enumerate() {
            images[s] = q;
        }
        Permutation { images }
    }

    /// The inverse braid, starting from this word's top coloring.
    pub fn invert(&self) -> Self {
        Self {
            strands: self.strands,
            bottom: self.top(),
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &Self) -> Result<Self, BraidError> {
        let top = self.top();
        if self.strands != other.strands || top != other.bottom {
            return Err(BraidError::ColoringMismatch {
                top: top.colors().to_vec(),
                bottom: other.bottom.colors().to_vec(),
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self { strands: self.strands, bottom: self.bottom.clone(), letters })
    }

    /// `prefix · self`, with the starting coloring chosen so the prefix ends
    /// on this word's bottom coloring.
    pub fn left_multiply(&self, prefix: &[i32]) -> Result<Self, BraidError> {
        let mut bottom = self.bottom.clone();
        for &l in prefix.iter().rev() {
            if l == 0 || l.unsigned_abs() as usize >= self.strands {
                return Err(BraidError::GeneratorOutOfRange(l, self.strands - 1));
            }
            bottom = bottom.swapped(l.unsigned_abs() as usize - 1);
        }
        let mut letters = prefix.to_vec();
        letters.extend_from_slice(&self.letters);
        Ok(Self { strands: self.strands, bottom, letters })
    }

    /// Append a trivial strand of an existing color on the right.
    pub fn include_strand(&self, color: usize) -> Result<Self, BraidError> {
        if color == 0 || color > self.mu() {
            return Err(BraidError::InvalidColor(color, self.mu()));
        }
        Ok(Self {
            strands: self.strands + 1,
            bottom: self.bottom.pushed(color),
            letters: self.letters.clone(),
        })
    }

    /// `σ_n^{±1} · i(self)` on `n + 1` strands, the new strand colored like strand `n`.
    pub fn markov_stabilize(&self, sign: i32) -> Result<Self, BraidError> {
        self.require_color_preserving()?;
        let n = self.strands;
        let color = self.bottom.color(n - 1);
        let mut out = self.include_strand(color)?;
        let letter = if sign >= 0 { n as i32 } else { -(n as i32) };
        out.letters.insert(0, letter);
        Ok(out)
    }

    /// From `γβ` to `βγ`.
    pub fn markov_slide(gamma: &Self, beta: &Self) -> Result<Self, BraidError> {
        gamma.compose(beta)?;
        beta.compose(gamma)
    }

    /// Cyclic rotation moving the first `k` letters to the end.
    pub fn rotate(&self, k: usize) -> Result<Self, BraidError> {
        let k = k % self.letters.len().max(1);
        let head = Self::new(self.strands, self.bottom.clone(), self.letters[..k].to_vec())?;
        let tail = Self::new(self.strands, head.top(), self.letters[k..].to_vec())?;
        Self::markov_slide(&head, &tail)
    }

    /// The braid of the sublink formed by the strands of the listed colors:
    /// all other strands and every crossing involving them are deleted, and
    /// the kept colors are renumbered `1..` in increasing order.
    pub fn restrict_to_colors(&self, keep: &[usize]) -> Result<Self, BraidError> {
        self.require_color_preserving()?;
        let mut kept_colors: Vec<usize> = keep.to_vec();
        kept_colors.sort_unstable();
        kept_colors.dedup();
        for &c in &kept_colors {
            if c == 0 || c > self.mu() {
                return Err(BraidError::InvalidColor(c, self.mu()));
            }
        }
        let kept = |c: usize| kept_colors.binary_search(&c).is_ok();
        let mut letters = Vec::new();
        let mut level = self.bottom.clone();
        for &l in &self.letters {
            let a = l.unsigned_abs() as usize - 1;
            if kept(level.color(a)) && kept(level.color(a + 1)) {
                let below = (0..a).filter(|&p| kept(level.color(p))).count() as i32;
                letters.push(l.signum() * (below + 1));
            }
            level = level.swapped(a);
        }
        let colors: Vec<usize> = self
            .bottom
            .colors()
            .iter()
            .filter(|&&c| kept(c))
            .map(|c| kept_colors.binary_search(c).unwrap() + 1)
            .collect();
        let strands = colors.len();
        Self::new(strands, Coloring::new(colors, kept_colors.len())?, letters)
    }

    pub fn closure(&self) -> Result<ClosureData, BraidError> {
        ClosureData::of(self)
    }

    /// `(color of the over-strand, sign)` for every letter, read level by level.
    ///
    /// In `σ_i` the over-strand is the one entering at position `i`; in
    /// `σ_i^{-1}` it is the one entering at position `i + 1`.
    pub fn over_strand_colors(&self) -> Vec<(usize, i32)> {
        let levels = self.levels();
        self.letters
            .iter()
            .zip(&levels)
            .map(|(&l, c)| {
                let a = l.unsigned_abs() as usize - 1;
                if l > 0 {
                    (c.color(a), 1)
                } else {
                    (c.color(a + 1), -1)
                }
            })
            .collect()
    }
}
