//! Seeded random corpora. Every generator draws only from the passed RNG, so
//! a run is reproducible from its seed.

use std::f64::consts::PI;

use braidcore::ColoredBraidWord;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_SEED: u64 = 0x5eed;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A word of length `0..=max_len` in `σ_1^{±1}, …, σ_{n-1}^{±1}`.
pub fn random_word(rng: &mut impl Rng, n: usize, max_len: usize) -> Vec<i32> {
    if n < 2 {
        return Vec::new();
    }
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| {
            let i = rng.gen_range(1..n as i32);
            if rng.gen_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect()
}

/// A color-preserving braid on `2..=max_n` strands with at most `max_mu`
/// colors, each cycle of the permutation getting a random color.
pub fn random_cc_braid(rng: &mut impl Rng, max_n: usize, max_len: usize, max_mu: usize) -> ColoredBraidWord {
    let n = rng.gen_range(2..=max_n);
    let letters = random_word(rng, n, max_len);
    let labels: Vec<usize> = (0..n).map(|_| rng.gen_range(1..=max_mu)).collect();
    ColoredBraidWord::colored_by_cycles(n, letters, &labels).expect("labels match strands")
}

/// A braid whose closure has exactly two components, colored by component.
pub fn random_two_component(rng: &mut impl Rng, max_n: usize, max_len: usize) -> ColoredBraidWord {
    loop {
        let n = rng.gen_range(2..=max_n);
        let letters = random_word(rng, n, max_len);
        let labels: Vec<usize> = (1..=n).collect();
        let b = ColoredBraidWord::colored_by_cycles(n, letters, &labels).expect("labels match strands");
        if b.mu() == 2 {
            return b;
        }
    }
}

/// Angles uniform in `(margin, π - margin)`.
pub fn random_angles(rng: &mut impl Rng, mu: usize, margin: f64) -> Vec<f64> {
    (0..mu).map(|_| rng.gen_range(margin..PI - margin)).collect()
}
