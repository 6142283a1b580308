use braidcore::ColoredBraidWord;
use laurent::Poly;

use crate::error::AlexanderError;
use crate::potential::{potential, Potential};

#[derive(Clone, Debug, PartialEq)]
pub struct LinkPolynomials {
    pub potential: Potential,
    /// Unit-normalized: minimal exponents zero, first coefficient positive.
    pub alexander: Poly,
    pub n_components: usize,
    pub mu: usize,
    pub colors: Vec<usize>,
}

/// `Δ` from `∇`: with `μ = 1`, `Δ(t^2) ≐ ∇ (t - t^{-1})`; otherwise
/// `Δ(t_1^2, …, t_μ^2) ≐ ∇`.
pub fn alexander_from_potential(p: &Potential) -> Result<Poly, AlexanderError> {
    let doubled = if p.mu() == 1 {
        p.times_conway_factor()
    } else {
        p.as_polynomial().cloned().ok_or(AlexanderError::HalfExponentResidue)?
    };
    let (_, shifted) = doubled.normalized();
    let halved = shifted.halve_exponents().map_err(|_| AlexanderError::HalfExponentResidue)?;
    if !halved.is_integral() {
        return Err(AlexanderError::HalfExponentResidue);
    }
    Ok(halved.normalized().1)
}

pub fn alexander_poly(b: &ColoredBraidWord) -> Result<Poly, AlexanderError> {
    alexander_from_potential(&potential(b)?)
}

pub fn link_polynomials(b: &ColoredBraidWord) -> Result<LinkPolynomials, AlexanderError> {
    let potential = potential(b)?;
    let alexander = alexander_from_potential(&potential)?;
    Ok(LinkPolynomials {
        potential,
        alexander,
        n_components: b.closure()?.num_components(),
        mu: b.mu(),
        colors: b.bottom().colors().to_vec(),
    })
}
