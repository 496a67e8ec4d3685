//! Integer Laurent polynomials Z[t, t^-1], the rational function field
//! Q(t), and classes in Q(t) / Z[t, t^-1].

mod dense;
mod parse;
mod ratfun;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use parse::ParsePolyError;
pub use ratfun::{RatFun, TorsionClass};

use crate::error::AlgebraError;
use crate::serde_int::Int;

/// An element of Z[t, t^-1].
///
/// Stored sparsely as exponent -> nonzero coefficient, so two polynomials are
/// equal exactly when their term maps are equal.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

/// A unit of Z[t, t^-1]: `sign * t^exponent` with `sign` = ±1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Unit {
    pub negative: bool,
    pub exponent: i64,
}

impl Unit {
    pub const ONE: Unit = Unit { negative: false, exponent: 0 };

    pub fn to_poly(self) -> LaurentPoly {
        let c = if self.negative { -1 } else { 1 };
        LaurentPoly::monomial(c, self.exponent)
    }

    pub fn inverse(self) -> Unit {
        Unit { negative: self.negative, exponent: -self.exponent }
    }
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, exponent: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponent, c);
        }
        Self { terms }
    }

    /// `coeffs[i]` is the coefficient of `t^(lowest + i)`.
    pub fn from_coeffs(lowest: i64, coeffs: &[i64]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(i, &c)| (lowest + i as i64, BigInt::from(c))))
    }

    /// Collects `(exponent, coefficient)` pairs, summing repeated exponents.
    pub fn from_terms<I, C>(iter: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, &c.into());
        }
        p
    }

    fn add_term(&mut self, e: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(One::is_one)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exponent: i64) -> BigInt {
        self.terms.get(&exponent).cloned().unwrap_or_default()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Width of the exponent range (`max - min`), or `None` for zero.
    pub fn span(&self) -> Option<i64> {
        Some(self.max_exponent()? - self.min_exponent()?)
    }

    /// The constant polynomial's value, if this is a constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    /// `Some(u)` when this polynomial is the unit `u = ±t^k`.
    pub fn as_unit(&self) -> Option<Unit> {
        if self.terms.len() != 1 {
            return None;
        }
        let (&e, c) = self.terms.iter().next()?;
        if c.is_one() {
            Some(Unit { negative: false, exponent: e })
        } else if (-c).is_one() {
            Some(Unit { negative: true, exponent: e })
        } else {
            None
        }
    }

    /// The bar involution induced by `t -> t^-1`.
    pub fn involute(&self) -> Self {
        Self { terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect() }
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self { terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(&e, x)| (e, x * c)).collect() }
    }

    pub fn mul_unit(&self, u: Unit) -> Self {
        let p = self.shift(u.exponent);
        if u.negative {
            -p
        } else {
            p
        }
    }

    /// Evaluates at a nonzero rational point.
    pub fn evaluate(&self, x: &BigRational) -> BigRational {
        assert!(!x.is_zero() || self.min_exponent().unwrap_or(0) >= 0, "negative power of zero");
        self.terms.iter().fold(BigRational::zero(), |acc, (&e, c)| {
            acc + BigRational::from_integer(c.clone()) * pow_rational(x, e)
        })
    }

    /// Evaluates at an integer point where every power stays integral
    /// (`t = ±1`, or any `t` when there are no negative exponents).
    pub fn evaluate_integer(&self, x: i64) -> BigInt {
        let value = self.evaluate(&BigRational::from_integer(BigInt::from(x)));
        assert!(value.is_integer(), "evaluation left Z");
        value.to_integer()
    }

    /// Multiplies by the unit `±t^-k` that puts the lowest exponent at 0 and
    /// makes the lowest coefficient positive. Returns the normalized
    /// polynomial and the unit that was multiplied in.
    pub fn normalize_unit(&self) -> Result<(LaurentPoly, Unit), AlgebraError> {
        let (&low, c) = self.terms.iter().next().ok_or(AlgebraError::ZeroPolynomial)?;
        let unit = Unit { negative: c.is_negative(), exponent: -low };
        Ok((self.mul_unit(unit), unit))
    }

    /// `Some(q)` with `self = q * divisor` and `q` in Z[t, t^-1], or `None`
    /// when no such integral quotient exists.
    pub fn divide_exact(&self, divisor: &LaurentPoly) -> Result<Option<LaurentPoly>, AlgebraError> {
        if divisor.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Some(Self::zero()));
        }
        let (fs, f) = self.to_dense();
        let (gs, g) = divisor.to_dense();
        Ok(dense::div_exact(&f, &g).map(|q| Self::from_dense(fs - gs, &q)))
    }

    /// Splits off the lowest power of `t`: `self = t^shift * dense(t)` with
    /// `dense(0) != 0`.
    pub(crate) fn to_dense(&self) -> (i64, dense::Dense) {
        let Some(low) = self.min_exponent() else {
            return (0, Vec::new());
        };
        let high = self.max_exponent().unwrap();
        let mut out = vec![BigInt::zero(); (high - low) as usize + 1];
        for (&e, c) in &self.terms {
            out[(e - low) as usize] = c.clone();
        }
        (low, out)
    }

    pub(crate) fn from_dense(shift: i64, coeffs: &[BigInt]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(i, c)| (shift + i as i64, c.clone())))
    }
}

fn pow_rational(x: &BigRational, e: i64) -> BigRational {
    let base = if e < 0 { x.recip() } else { x.clone() };
    num_traits::pow(base, e.unsigned_abs() as usize)
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        Self::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        Self::constant(1)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, &-c);
        }
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&ea, ca) in &self.terms {
            for (&eb, cb) in &rhs.terms {
                out.add_term(ea + eb, &(ca * cb));
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect() }
    }
}

macro_rules! forward_owned_binop {
    ($($imp:ident $method:ident),*) => {$(
        impl $imp<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $imp<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
        impl $imp<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_owned_binop!(Add add, Sub sub, Mul mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

/// Renders with ascending exponents, `" + "`/`" − "` separators (U+2212),
/// `t^0` elided and `t^1` written as `t`: `1 − t + t^2`, `t^-1 + t`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (&e, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("−")?,
                (0, false) => {}
                (_, true) => f.write_str(" − ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            if e == 1 {
                f.write_str("t")?;
            } else {
                write!(f, "t^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

/// Serialized as `[[exponent, coefficient], ...]` in ascending exponent order.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let pairs: Vec<(i64, Int)> = self.terms.iter().map(|(&e, c)| (e, Int(c.clone()))).collect();
        pairs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let pairs = Vec::<(i64, Int)>::deserialize(deserializer)?;
        Ok(Self::from_terms(pairs.into_iter().map(|(e, c)| (e, c.0))))
    }
}
