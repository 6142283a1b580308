use std::fmt;

use braidcore::ColoredBraidWord;

use crate::error::FreeGroupError;

/// A freely reduced word: no letter is ever adjacent to its inverse.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FreeWord {
    letters: Vec<i32>,
}

impl FreeWord {
    pub fn identity() -> Self {
        Self::default()
    }

    /// The generator `x_i`, `i ≥ 1`.
    pub fn gen(i: usize) -> Self {
        assert!(i >= 1);
        Self { letters: vec![i as i32] }
    }

    /// `x_1 x_2 ⋯ x_i`.
    pub fn prefix_product(i: usize) -> Self {
        Self { letters: (1..=i as i32).collect() }
    }

    /// Freely reduces `letters`. Zero letters are rejected.
    pub fn new(letters: impl IntoIterator<Item = i32>) -> Self {
        let mut w = Self::identity();
        for l in letters {
            w.push(l);
        }
        w
    }

    fn push(&mut self, l: i32) {
        assert_ne!(l, 0, "zero is not a generator");
        if self.letters.last() == Some(&-l) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
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

    pub fn max_generator(&self) -> usize {
        self.letters.iter().map(|l| l.unsigned_abs() as usize).max().unwrap_or(0)
    }

    pub fn check_rank(&self, n: usize) -> Result<(), FreeGroupError> {
        match self.letters.iter().find(|l| l.unsigned_abs() as usize > n) {
            Some(&l) => Err(FreeGroupError::GeneratorOutOfRange(l, n)),
            None => Ok(()),
        }
    }

    pub fn inverse(&self) -> Self {
        Self { letters: self.letters.iter().rev().map(|l| -l).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut w = self.clone();
        for &l in &other.letters {
            w.push(l);
        }
        w
    }

    pub fn pow(&self, k: i32) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        (0..k.unsigned_abs()).fold(Self::identity(), |acc, _| acc.mul(&base))
    }

    /// Signed exponent sum of each generator `1..=n`.
    pub fn exponent_sums(&self, n: usize) -> Vec<i64> {
        let mut out = vec![0; n];
        for &l in &self.letters {
            out[l.unsigned_abs() as usize - 1] += i64::from(l.signum());
        }
        out
    }

    /// Replace generator `k` by `images[k - 1]` and reduce.
    pub fn substitute(&self, images: &[FreeWord]) -> Self {
        let mut out = Self::identity();
        for &l in &self.letters {
            let img = &images[l.unsigned_abs() as usize - 1];
            if l > 0 {
                out = out.mul(img);
            } else {
                out = out.mul(&img.inverse());
            }
        }
        out
    }

    /// Rewrite a word in `x_i` as a word in `g_i = x_1⋯x_i`
    /// through `x_1 = g_1`, `x_i = g_{i-1}^{-1} g_i`.
    pub fn to_gbasis(&self) -> Self {
        let n = self.max_generator();
        let images: Vec<FreeWord> =
            (1..=n as i32).map(|i| if i == 1 { Self::new([1]) } else { Self::new([-(i - 1), i]) }).collect();
        self.substitute(&images)
    }

    /// Rewrite a word in `g_i` as a word in `x_i`.
    pub fn from_gbasis(&self) -> Self {
        let images: Vec<FreeWord> = (1..=self.max_generator()).map(Self::prefix_product).collect();
        self.substitute(&images)
    }
}

impl fmt::Debug for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|&l| if l > 0 { format!("x{l}") } else { format!("x{}^-1", -l) })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Images `x_i · b` of the generators under the right action of `b`.
///
/// The right action satisfies `x · (b_1 b_2) = (x · b_1) · b_2`, so the
/// images of a product are the images of `b_1` with every generator
/// replaced by its image under `b_2`; letters are therefore folded in from
/// the right end of the word.
pub fn action_images(b: &ColoredBraidWord) -> Vec<FreeWord> {
    let n = b.strands();
    let mut images: Vec<FreeWord> = (1..=n).map(FreeWord::gen).collect();
    for &l in b.letters().iter().rev() {
        let a = l.unsigned_abs() as usize - 1;
        let (u, v) = (images[a].clone(), images[a + 1].clone());
        if l > 0 {
            // x_i ↦ x_i x_{i+1} x_i^{-1}, x_{i+1} ↦ x_i
            images[a] = u.mul(&v).mul(&u.inverse());
            images[a + 1] = u;
        } else {
            // x_i ↦ x_{i+1}, x_{i+1} ↦ x_{i+1}^{-1} x_i x_{i+1}
            images[a] = v.clone();
            images[a + 1] = v.inverse().mul(&u).mul(&v);
        }
    }
    images
}

/// The right action `w · b`.
pub fn braid_act(w: &FreeWord, b: &ColoredBraidWord) -> Result<FreeWord, FreeGroupError> {
    w.check_rank(b.strands())?;
    Ok(w.substitute(&action_images(b)))
}
