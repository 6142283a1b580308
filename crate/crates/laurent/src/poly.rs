use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use num_integer::Integer;
use num_traits::{Float, NumAssign, Signed, ToPrimitive};

use crate::error::LaurentError;
use crate::torus::TorusPoint;

/// Coefficient ring of a [`LaurentPoly`]: any signed integer type.
pub trait Coeff:
    Clone + fmt::Debug + fmt::Display + Integer + Signed + NumAssign + ToPrimitive + Send + Sync
{
}

impl<C> Coeff for C where
    C: Clone + fmt::Debug + fmt::Display + Integer + Signed + NumAssign + ToPrimitive + Send + Sync
{
}

/// Laurent polynomial in `mu` variables. Exponents count half-steps.
///
/// Terms are kept in a `BTreeMap`, so the representation is canonical:
/// structural equality is ring equality and no zero coefficient is stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly<C> {
    mu: usize,
    terms: BTreeMap<Vec<i32>, C>,
}

impl<C: Coeff> LaurentPoly<C> {
    pub fn zero(mu: usize) -> Self {
        Self { mu, terms: BTreeMap::new() }
    }

    pub fn one(mu: usize) -> Self {
        Self::constant(mu, C::one())
    }

    pub fn constant(mu: usize, c: C) -> Self {
        Self::monomial(vec![0; mu], c)
    }

    /// `c · t^{exps/2}`; the variable count is `exps.len()`.
    pub fn monomial(exps: Vec<i32>, c: C) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    /// The variable `t_k` (0-based `k`).
    pub fn var(mu: usize, k: usize) -> Self {
        Self::var_pow(mu, k, 1)
    }

    /// `t_k^e` for an integer `e`.
    pub fn var_pow(mu: usize, k: usize, e: i32) -> Self {
        assert!(k < mu, "variable index {k} out of range for mu = {mu}");
        let mut exps = vec![0; mu];
        exps[k] = 2 * e;
        Self::monomial(exps, C::one())
    }

    pub fn from_terms<I>(mu: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<i32>, C)>,
    {
        let mut p = Self::zero(mu);
        for (e, c) in terms {
            assert_eq!(e.len(), mu);
            p.add_term(e, c);
        }
        p
    }

    pub fn mu(&self) -> usize {
        self.mu
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i32>, C> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one(self.mu)
    }

    /// Coefficient of `t^{exps/2}`.
    pub fn coeff(&self, exps: &[i32]) -> C {
        self.terms.get(exps).cloned().unwrap_or_else(C::zero)
    }

    /// True when every stored exponent is even.
    pub fn is_integral(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|x| x % 2 == 0))
    }

    /// True for `±t^e`.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().all(|c| c.abs().is_one())
    }

    pub(crate) fn add_term(&mut self, exps: Vec<i32>, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.mu);
        }
        let terms = self.terms.iter().map(|(e, x)| (e.clone(), x.clone() * c.clone())).collect();
        Self { mu: self.mu, terms }
    }

    /// Multiplication by the monomial `t^{exps/2}`.
    pub fn shift(&self, exps: &[i32]) -> Self {
        assert_eq!(exps.len(), self.mu);
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (add_exps(e, exps), c.clone()))
            .collect();
        Self { mu: self.mu, terms }
    }

    /// The substitution `t_i ↦ t_i^2`.
    pub fn double_exponents(&self) -> Self {
        self.map_exponents(|e| e * 2)
    }

    /// The substitution `t_i ↦ t_i^{1/2}`; fails on odd stored exponents.
    pub fn halve_exponents(&self) -> Result<Self, LaurentError> {
        if !self.is_integral() {
            return Err(LaurentError::HalfExponentResidue);
        }
        Ok(self.map_exponents(|e| e / 2))
    }

    /// The substitution `t_i ↦ t_i^{-1}`.
    pub fn invert_variables(&self) -> Self {
        self.map_exponents(|e| -e)
    }

    fn map_exponents(&self, f: impl Fn(i32) -> i32) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.iter().map(|&x| f(x)).collect(), c.clone()));
        Self::from_terms(self.mu, terms)
    }

    /// The substitution `t_k ↦ 1`; the variable count is unchanged.
    pub fn specialize_one(&self, k: usize) -> Self {
        let terms = self.terms.iter().map(|(e, c)| {
            let mut e = e.clone();
            e[k] = 0;
            (e, c.clone())
        });
        Self::from_terms(self.mu, terms)
    }

    /// The substitution `t_i ↦ s_{map[i]}` into a ring with `new_mu` variables.
    pub fn merge_variables(&self, map: &[usize], new_mu: usize) -> Self {
        assert_eq!(map.len(), self.mu);
        let terms = self.terms.iter().map(|(e, c)| {
            let mut f = vec![0; new_mu];
            for (i, &x) in e.iter().enumerate() {
                f[map[i]] += x;
            }
            (f, c.clone())
        });
        Self::from_terms(new_mu, terms)
    }

    pub fn min_exponents(&self) -> Option<Vec<i32>> {
        self.fold_exponents(i32::min)
    }

    pub fn max_exponents(&self) -> Option<Vec<i32>> {
        self.fold_exponents(i32::max)
    }

    fn fold_exponents(&self, f: impl Fn(i32, i32) -> i32) -> Option<Vec<i32>> {
        let mut it = self.terms.keys();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, e| acc.iter().zip(e).map(|(&a, &b)| f(a, b)).collect()))
    }

    /// Unit normal form: minimal exponent of each variable shifted to zero and
    /// the lexicographically first coefficient made positive. Returns the
    /// applied shift alongside the normalized polynomial.
    pub fn normalized(&self) -> (Vec<i32>, Self) {
        let Some(min) = self.min_exponents() else {
            return (vec![0; self.mu], self.clone());
        };
        let shift: Vec<i32> = min.iter().map(|x| -x).collect();
        let mut p = self.shift(&shift);
        if p.terms.values().next().is_some_and(|c| c.is_negative()) {
            p = -p;
        }
        (shift, p)
    }

    /// `self = ±t^e · other` for an integral exponent vector `e`.
    pub fn equal_up_to_units(&self, other: &Self) -> bool {
        if self.mu != other.mu {
            return false;
        }
        let (s, p) = self.normalized();
        let (t, q) = other.normalized();
        p == q && s.iter().zip(&t).all(|(a, b)| (a - b) % 2 == 0)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, LaurentError> {
        self.same_mu(other)?;
        Ok(self + other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, LaurentError> {
        self.same_mu(other)?;
        Ok(self * other)
    }

    fn same_mu(&self, other: &Self) -> Result<(), LaurentError> {
        if self.mu == other.mu {
            Ok(())
        } else {
            Err(LaurentError::VariableCountMismatch(self.mu, other.mu))
        }
    }

    /// Exact quotient `self / q`.
    ///
    /// Division by leading terms in lexicographic order. A true quotient has
    /// every exponent inside the box `[min(p) - min(q), max(p) - max(q)]`, so
    /// leaving that box certifies non-divisibility and bounds the loop.
    pub fn exact_divide(&self, q: &Self) -> Result<Self, LaurentError> {
        self.same_mu(q)?;
        let Some((q_lead_e, q_lead_c)) = q.terms.iter().next_back() else {
            return Err(LaurentError::DivisionByZero);
        };
        if self.is_zero() {
            return Ok(Self::zero(self.mu));
        }
        let lo = sub_exps(&self.min_exponents().unwrap(), &q.min_exponents().unwrap());
        let hi = sub_exps(&self.max_exponents().unwrap(), &q.max_exponents().unwrap());
        if lo.iter().zip(&hi).any(|(a, b)| a > b) {
            return Err(LaurentError::NotDivisible);
        }
        let mut rem = self.clone();
        let mut quot = Self::zero(self.mu);
        while let Some((e, c)) = rem.terms.iter().next_back() {
            let (qc, r) = c.div_rem(q_lead_c);
            if !r.is_zero() {
                return Err(LaurentError::NotDivisible);
            }
            let de = sub_exps(e, q_lead_e);
            if de.iter().zip(lo.iter().zip(&hi)).any(|(x, (a, b))| x < a || x > b) {
                return Err(LaurentError::NotDivisible);
            }
            for (qe, qcoef) in &q.terms {
                rem.add_term(add_exps(qe, &de), -(qcoef.clone() * qc.clone()));
            }
            quot.add_term(de, qc);
        }
        Ok(quot)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.mu);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Value at the point whose half-step roots are `roots`: each stored
    /// exponent `k` of `t_i` contributes `roots[i]^k`, so `t_i = roots[i]^2`.
    pub fn evaluate_roots<T: Float>(&self, roots: &[Complex<T>]) -> Complex<T> {
        assert_eq!(roots.len(), self.mu);
        let mut acc = Complex::new(T::zero(), T::zero());
        for (e, c) in &self.terms {
            let mut m = Complex::new(T::from(c.to_f64().unwrap_or(f64::NAN)).unwrap(), T::zero());
            for (r, &k) in roots.iter().zip(e) {
                if k != 0 {
                    m = m * r.powi(k);
                }
            }
            acc = acc + m;
        }
        acc
    }

    /// Value at a torus point, half-integer powers taken on its pinned branch.
    pub fn evaluate<T: Float>(&self, z: &TorusPoint<T>) -> Complex<T> {
        self.evaluate_roots(z.roots())
    }

    pub fn coeff_abs_sum(&self) -> f64 {
        self.terms.values().map(|c| c.abs().to_f64().unwrap_or(f64::INFINITY)).sum()
    }

    /// A priori bound on the rounding error of [`Self::evaluate`] at a unit-modulus point.
    pub fn eval_error_bound(&self) -> f64 {
        let max = self
            .terms
            .values()
            .map(|c| c.abs().to_f64().unwrap_or(f64::INFINITY))
            .fold(0.0, f64::max);
        let degree: i32 = self
            .terms
            .keys()
            .map(|e| e.iter().map(|x| x.abs()).sum::<i32>())
            .max()
            .unwrap_or(0);
        self.terms.len() as f64 * max * f64::EPSILON * (1.0 + degree as f64)
    }
}

fn add_exps(a: &[i32], b: &[i32]) -> Vec<i32> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub_exps(a: &[i32], b: &[i32]) -> Vec<i32> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

impl<'a, C: Coeff> Add<&'a LaurentPoly<C>> for &'a LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn add(self, rhs: &'a LaurentPoly<C>) -> LaurentPoly<C> {
        assert_eq!(self.mu, rhs.mu, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<'a, C: Coeff> Sub<&'a LaurentPoly<C>> for &'a LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn sub(self, rhs: &'a LaurentPoly<C>) -> LaurentPoly<C> {
        assert_eq!(self.mu, rhs.mu, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl<'a, C: Coeff> Mul<&'a LaurentPoly<C>> for &'a LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, rhs: &'a LaurentPoly<C>) -> LaurentPoly<C> {
        assert_eq!(self.mu, rhs.mu, "variable count mismatch");
        let mut out = LaurentPoly::zero(self.mu);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(add_exps(ea, eb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<C: Coeff> Neg for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect();
        LaurentPoly { mu: self.mu, terms }
    }
}

impl<C: Coeff> Neg for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl<C: Coeff> $tr<LaurentPoly<C>> for LaurentPoly<C> {
            type Output = LaurentPoly<C>;
            fn $f(self, rhs: LaurentPoly<C>) -> LaurentPoly<C> {
                (&self).$f(&rhs)
            }
        }
        impl<'a, C: Coeff> $tr<&'a LaurentPoly<C>> for LaurentPoly<C> {
            type Output = LaurentPoly<C>;
            fn $f(self, rhs: &'a LaurentPoly<C>) -> LaurentPoly<C> {
                (&self).$f(rhs)
            }
        }
        impl<'a, C: Coeff> $tr<LaurentPoly<C>> for &'a LaurentPoly<C> {
            type Output = LaurentPoly<C>;
            fn $f(self, rhs: LaurentPoly<C>) -> LaurentPoly<C> {
                self.$f(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<C: Coeff> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono = monomial_string(e);
            let neg = c.is_negative();
            let a = c.abs();
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if mono.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{a}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly[{}]({})", self.mu, self)
    }
}

fn monomial_string(e: &[i32]) -> String {
    let mut parts = Vec::new();
    for (i, &k) in e.iter().enumerate() {
        let name = format!("t{}", i + 1);
        match k {
            0 => {}
            2 => parts.push(name),
            k if k % 2 == 0 => parts.push(format!("{name}^{}", k / 2)),
            k => parts.push(format!("{name}^({k}/2)")),
        }
    }
    parts.join("*")
}
