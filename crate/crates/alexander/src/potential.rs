use std::fmt;

use braidcore::ColoredBraidWord;
use gassner::{beta_monomial, gassner_reduced, prefix_monomials};
use laurent::{Poly, Torus, C64};

use crate::error::AlexanderError;

/// The potential function `∇`, a Laurent polynomial except for one-colored
/// knots, where it is `numerator / (t - t^{-1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Potential {
    numerator: Poly,
    /// Only ever set when `mu == 1`.
    over_conway: bool,
}

fn conway_factor(mu: usize, k: usize) -> Poly {
    Poly::var(mu, k) - Poly::var_pow(mu, k, -1)
}

impl Potential {
    pub fn polynomial(p: Poly) -> Self {
        Self { numerator: p, over_conway: false }
    }

    /// `numerator / (t - t^{-1})` in one variable, reduced to a polynomial
    /// whenever the quotient is exact.
    pub fn over_conway_factor(numerator: Poly) -> Self {
        assert_eq!(numerator.mu(), 1);
        match numerator.exact_divide(&conway_factor(1, 0)) {
            Ok(q) => Self::polynomial(q),
            Err(_) => Self { numerator, over_conway: true },
        }
    }

    pub fn mu(&self) -> usize {
        self.numerator.mu()
    }

    pub fn numerator(&self) -> &Poly {
        &self.numerator
    }

    pub fn has_conway_denominator(&self) -> bool {
        self.over_conway
    }

    pub fn as_polynomial(&self) -> Option<&Poly> {
        (!self.over_conway).then_some(&self.numerator)
    }

    /// `∇ · (t_1 - t_1^{-1})`, always a polynomial.
    pub fn times_conway_factor(&self) -> Poly {
        if self.over_conway {
            self.numerator.clone()
        } else {
            &self.numerator * &conway_factor(self.mu(), 0)
        }
    }

    pub fn scale_sign(&self, negate: bool) -> Self {
        if negate {
            Self { numerator: -&self.numerator, over_conway: self.over_conway }
        } else {
            self.clone()
        }
    }

    /// `∇(t_1^{-1}, …, t_μ^{-1})`.
    pub fn invert_variables(&self) -> Self {
        let inv = self.numerator.invert_variables();
        // (t^{-1} - t) = -(t - t^{-1})
        Self { numerator: if self.over_conway { -inv } else { inv }, over_conway: self.over_conway }
    }

    /// `∇` at `t_k = ω_k^{1/2}`, the square roots being the point's chosen roots.
    pub fn evaluate_half(&self, z: &Torus) -> C64 {
        let halved = self.numerator.halve_exponents().expect("potential exponents are integral");
        let value = halved.evaluate(z);
        if self.over_conway {
            let r = z.roots()[0];
            value / (r - r.inv())
        } else {
            value
        }
    }

    /// Error bound of [`Self::evaluate_half`] before any division.
    pub fn eval_error_bound(&self) -> f64 {
        self.numerator.eval_error_bound()
    }
}

impl fmt::Display for Potential {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.over_conway {
            write!(f, "({}) / (t1 - t1^-1)", self.numerator)
        } else {
            write!(f, "{}", self.numerator)
        }
    }
}

/// The closed formula in the reduced Gassner matrix exactly as written,
/// `(-1)^{n+1} ⟨β⟩ g(det(B̄ - I)) / (t_{c_1}⋯t_{c_n} - t_{c_1}^{-1}⋯t_{c_n}^{-1})`.
///
/// This equals `(-1)^{ν+1} ∇` for a closure with `ν` components; see
/// [`potential`].
pub fn potential_literal(b: &ColoredBraidWord) -> Result<Potential, AlexanderError> {
    b.require_color_preserving()?;
    let c = b.bottom();
    let (mu, n) = (c.mu(), b.strands());
    let det = gassner_reduced(b)?.matrix.minus_identity().det()?;
    let mut num = &beta_monomial(b) * &det.double_exponents();
    if n % 2 == 0 {
        num = -num;
    }
    let total = prefix_monomials(c)[n].clone();
    let den = &total - &total.invert_variables();
    if mu == 1 {
        let d = (&num * &conway_factor(1, 0)).exact_divide(&den).map_err(|_| AlexanderError::NotDivisible)?;
        Ok(Potential::over_conway_factor(d))
    } else {
        Ok(Potential::polynomial(num.exact_divide(&den).map_err(|_| AlexanderError::NotDivisible)?))
    }
}

/// The potential function, normalized so that the positive Hopf link has
/// `∇ = 1` and a knot has `∇ (t - t^{-1})(1) = 1`.
pub fn potential(b: &ColoredBraidWord) -> Result<Potential, AlexanderError> {
    let nu = b.closure()?.num_components();
    Ok(potential_literal(b)?.scale_sign(nu % 2 == 0))
}
