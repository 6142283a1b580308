use std::collections::BTreeMap;

use laurent::{Poly, PolyMat};
use nalgebra::DMatrix;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::SignatureError;

/// Index of `ε ∈ {±1}^μ`: bit `k` is set exactly when `ε_{k+1} = -1`.
pub type SignMask = usize;

pub fn sign_vector(mask: SignMask, mu: usize) -> Vec<i32> {
    (0..mu).map(|k| if mask >> k & 1 == 1 { -1 } else { 1 }).collect()
}

pub fn sign_key(mask: SignMask, mu: usize) -> String {
    sign_vector(mask, mu).iter().map(|&e| if e > 0 { '+' } else { '-' }).collect()
}

fn parse_key(key: &str, mu: usize) -> Result<SignMask, SignatureError> {
    if key.chars().count() != mu {
        return Err(SignatureError::InvalidSystem(format!("key {key:?} does not have {mu} signs")));
    }
    key.chars().enumerate().try_fold(0, |mask, (k, ch)| match ch {
        '+' => Ok(mask),
        '-' | '−' => Ok(mask | 1 << k),
        _ => Err(SignatureError::InvalidSystem(format!("bad sign {ch:?} in key {key:?}"))),
    })
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeifertMeta {
    #[serde(default)]
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub components: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub linking: Option<Vec<Vec<i64>>>,
}

#[derive(Serialize, Deserialize)]
struct SeifertFile {
    mu: usize,
    size: usize,
    matrices: BTreeMap<String, Vec<Vec<i64>>>,
    #[serde(default)]
    meta: SeifertMeta,
}

/// Generalized Seifert matrices `A^ε` of a C-complex, one per sign vector.
///
/// Invariant: `A^{-ε} = (A^ε)^T` for every `ε`, all `2^μ` present.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "SeifertFile", into = "SeifertFile")]
pub struct SeifertSystem {
    mu: usize,
    size: usize,
    matrices: Vec<DMatrix<i64>>,
    pub meta: SeifertMeta,
}

impl SeifertSystem {
    /// `matrices[mask]` is `A^ε` for the sign vector encoded by `mask`.
    pub fn new(mu: usize, size: usize, matrices: Vec<DMatrix<i64>>, meta: SeifertMeta) -> Result<Self, SignatureError> {
        if mu == 0 {
            return Err(SignatureError::InvalidSystem("mu must be positive".into()));
        }
        if matrices.len() != 1 << mu {
            return Err(SignatureError::InvalidSystem(format!("{} matrices for mu = {mu}", matrices.len())));
        }
        if let Some(bad) = matrices.iter().position(|a| a.nrows() != size || a.ncols() != size) {
            return Err(SignatureError::InvalidSystem(format!("matrix {} is not {size}x{size}", sign_key(bad, mu))));
        }
        let full = (1 << mu) - 1;
        for (mask, a) in matrices.iter().enumerate() {
            if matrices[full ^ mask] != a.transpose() {
                return Err(SignatureError::InvalidSystem(format!(
                    "A^{} is not the transpose of A^{}",
                    sign_key(full ^ mask, mu),
                    sign_key(mask, mu)
                )));
            }
        }
        Ok(Self { mu, size, matrices, meta })
    }

    /// `A^ε = A` when `ε_k = +1` and `A^T` otherwise, for every `ε`: the
    /// system of a C-complex whose curves all lie on the surface of color `k`.
    pub fn supported_on(mu: usize, k: usize, a: DMatrix<i64>, meta: SeifertMeta) -> Result<Self, SignatureError> {
        let size = a.nrows();
        let matrices = (0..1 << mu).map(|mask| if mask >> k & 1 == 0 { a.clone() } else { a.transpose() }).collect();
        Self::new(mu, size, matrices, meta)
    }

    pub fn mu(&self) -> usize {
        self.mu
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn matrix(&self, mask: SignMask) -> &DMatrix<i64> {
        &self.matrices[mask]
    }

    pub fn matrices(&self) -> &[DMatrix<i64>] {
        &self.matrices
    }

    /// `A(t) = Σ_ε ε_1⋯ε_μ t_1^{ε_1}⋯t_μ^{ε_μ} A^ε`, whose determinant gives
    /// the potential function up to powers of `t_i - t_i^{-1}`.
    pub fn conway_matrix(&self) -> PolyMat {
        let mu = self.mu;
        let weights: Vec<Poly> = (0..1 << mu)
            .map(|mask| {
                let eps = sign_vector(mask, mu);
                let sign: i32 = eps.iter().product();
                Poly::monomial(eps.iter().map(|e| 2 * e).collect(), BigInt::from(sign))
            })
            .collect();
        PolyMat::from_fn(mu, self.size, self.size, |i, j| {
            let mut entry = Poly::zero(mu);
            for (w, a) in weights.iter().zip(&self.matrices) {
                if a[(i, j)] != 0 {
                    entry = entry + w * &Poly::constant(mu, BigInt::from(a[(i, j)]));
                }
            }
            entry
        })
    }
}

impl TryFrom<SeifertFile> for SeifertSystem {
    type Error = SignatureError;

    fn try_from(f: SeifertFile) -> Result<Self, SignatureError> {
        if f.mu == 0 || f.mu > 16 {
            return Err(SignatureError::InvalidSystem(format!("unsupported mu = {}", f.mu)));
        }
        let mut slots: Vec<Option<DMatrix<i64>>> = vec![None; 1 << f.mu];
        for (key, rows) in &f.matrices {
            let mask = parse_key(key, f.mu)?;
            if rows.len() != f.size || rows.iter().any(|r| r.len() != f.size) {
                return Err(SignatureError::InvalidSystem(format!("matrix {key} is not {0}x{0}", f.size)));
            }
            if slots[mask].is_some() {
                return Err(SignatureError::InvalidSystem(format!("duplicate key {key}")));
            }
            slots[mask] = Some(DMatrix::from_fn(f.size, f.size, |i, j| rows[i][j]));
        }
        let mut matrices = Vec::with_capacity(slots.len());
        for (mask, slot) in slots.into_iter().enumerate() {
            matrices.push(slot.ok_or_else(|| SignatureError::InvalidSystem(format!("missing key {}", sign_key(mask, f.mu))))?);
        }
        Self::new(f.mu, f.size, matrices, f.meta)
    }
}

impl From<SeifertSystem> for SeifertFile {
    fn from(s: SeifertSystem) -> Self {
        let matrices = s
            .matrices
            .iter()
            .enumerate()
            .map(|(mask, a)| (sign_key(mask, s.mu), a.row_iter().map(|r| r.iter().copied().collect()).collect()))
            .collect();
        SeifertFile { mu: s.mu, size: s.size, matrices, meta: s.meta }
    }
}
