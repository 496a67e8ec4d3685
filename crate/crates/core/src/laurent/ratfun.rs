use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::dense;
use super::LaurentPoly;
use crate::error::AlgebraError;

/// An element of Q(t), kept as a reduced fraction of integer Laurent
/// polynomials.
///
/// Canonical form: the denominator has lowest exponent 0 and a positive
/// constant term, numerator and denominator share no nonconstant factor, and
/// their combined integer content is 1. Equal functions therefore have equal
/// representations.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RatFun {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFun {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    pub fn zero() -> Self {
        Self { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self { num: p, den: LaurentPoly::one() }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The Laurent polynomial this function equals, if it lies in Z[t, t^-1].
    pub fn as_laurent(&self) -> Option<LaurentPoly> {
        self.num.divide_exact(&self.den).ok().flatten()
    }

    /// Applies `t -> t^-1` to numerator and denominator and renormalizes.
    pub fn involute(&self) -> Self {
        Self::reduce(self.num.involute(), self.den.involute())
    }

    pub fn recip(&self) -> Result<Self, AlgebraError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &RatFun) -> Result<Self, AlgebraError> {
        Ok(self * &rhs.recip()?)
    }

    pub fn scale_poly(&self, p: &LaurentPoly) -> Self {
        Self::reduce(&self.num * p, self.den.clone())
    }

    fn reduce(num: LaurentPoly, den: LaurentPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        let (ns, n) = num.to_dense();
        let (ds, d) = den.to_dense();
        let g = dense::primitive_gcd(&n, &d);
        let mut n = dense::div_exact(&n, &g).expect("gcd divides numerator");
        let mut d = dense::div_exact(&d, &g).expect("gcd divides denominator");
        let c = dense::content(&n).gcd(&dense::content(&d));
        let c = if d[0].is_negative() { -c } else { c };
        if !c.is_one() {
            for x in n.iter_mut().chain(d.iter_mut()) {
                *x /= &c;
            }
        }
        Self {
            num: LaurentPoly::from_dense(ns - ds, &n),
            den: LaurentPoly::from_dense(0, &d),
        }
    }
}

impl From<LaurentPoly> for RatFun {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl Default for RatFun {
    fn default() -> Self {
        Self::zero()
    }
}

impl Zero for RatFun {
    fn zero() -> Self {
        RatFun::zero()
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFun {
    fn one() -> Self {
        RatFun::one()
    }
}

impl Add<&RatFun> for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        if self.den == rhs.den {
            return RatFun::reduce(&self.num + &rhs.num, self.den.clone());
        }
        RatFun::reduce(&self.num * &rhs.den + &rhs.num * &self.den, &self.den * &rhs.den)
    }
}

impl Sub<&RatFun> for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl Mul<&RatFun> for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() || rhs.is_zero() {
            return RatFun::zero();
        }
        RatFun::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun { num: -self.num, den: self.den }
    }
}

macro_rules! forward_owned_binop {
    ($($imp:ident $method:ident),*) => {$(
        impl $imp<RatFun> for RatFun {
            type Output = RatFun;
            fn $method(self, rhs: RatFun) -> RatFun {
                (&self).$method(&rhs)
            }
        }
        impl $imp<&RatFun> for RatFun {
            type Output = RatFun;
            fn $method(self, rhs: &RatFun) -> RatFun {
                (&self).$method(rhs)
            }
        }
    )*};
}

forward_owned_binop!(Add add, Sub sub, Mul mul);

impl<'de> Deserialize<'de> for RatFun {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            num: LaurentPoly,
            den: LaurentPoly,
        }
        let raw = Raw::deserialize(deserializer)?;
        RatFun::new(raw.num, raw.den).map_err(serde::de::Error::custom)
    }
}

/// `−(1 − 2t + t^2)/(1 − t + t^2)`: a negative lowest numerator coefficient
/// is pulled out in front, multi-term parts are parenthesized, and a unit
/// denominator is omitted.
impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let negative = self.num.terms().next().is_some_and(|(_, c)| c.is_negative());
        let num = if negative { -&self.num } else { self.num.clone() };
        if negative {
            f.write_str("−")?;
        }
        if num.term_count() > 1 || negative {
            write!(f, "({num})")?;
        } else {
            write!(f, "{num}")?;
        }
        if self.den.term_count() > 1 {
            write!(f, "/({})", self.den)
        } else {
            write!(f, "/{}", self.den)
        }
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFun({self})")
    }
}

/// An element of Q(t) / Z[t, t^-1], carried as one representative.
///
/// There is no canonical coset form; equality is decided by [`class_eq`],
/// which asks whether the difference of representatives is a Laurent
/// polynomial with integer coefficients.
///
/// [`class_eq`]: TorsionClass::class_eq
#[derive(Clone, Serialize, Deserialize)]
pub struct TorsionClass {
    rep: RatFun,
}

impl TorsionClass {
    pub fn new(rep: RatFun) -> Self {
        Self { rep }
    }

    pub fn zero() -> Self {
        Self::new(RatFun::zero())
    }

    pub fn rep(&self) -> &RatFun {
        &self.rep
    }

    pub fn into_rep(self) -> RatFun {
        self.rep
    }

    pub fn class_eq(&self, other: &TorsionClass) -> bool {
        let diff = &self.rep - &other.rep;
        diff.numerator()
            .divide_exact(diff.denominator())
            .expect("reduced denominators are nonzero")
            .is_some()
    }

    pub fn is_zero_class(&self) -> bool {
        self.class_eq(&Self::zero())
    }

    pub fn involute(&self) -> Self {
        Self::new(self.rep.involute())
    }
}

impl From<RatFun> for TorsionClass {
    fn from(rep: RatFun) -> Self {
        Self::new(rep)
    }
}

/// Class equality, not representative equality.
impl PartialEq for TorsionClass {
    fn eq(&self, other: &Self) -> bool {
        self.class_eq(other)
    }
}

impl Eq for TorsionClass {}

impl fmt::Display for TorsionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod Λ", self.rep)
    }
}

impl fmt::Debug for TorsionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TorsionClass({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(lowest: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(lowest, c)
    }

    fn rf(n: LaurentPoly, d: LaurentPoly) -> RatFun {
        RatFun::new(n, d).unwrap()
    }

    #[test]
    fn reduction_is_canonical() {
        // (1 − t^2) / (2 + 2t) = (1 − t)/2
        let r = rf(p(0, &[1, 0, -1]), p(0, &[2, 2]));
        assert_eq!(r.numerator(), &p(0, &[1, -1]));
        assert_eq!(r.denominator(), &LaurentPoly::constant(2));
        // t^3 / (−t − t^2) = −t^2 / (1 + t)
        let r = rf(p(3, &[1]), p(1, &[-1, -1]));
        assert_eq!(r.numerator(), &p(2, &[-1]));
        assert_eq!(r.denominator(), &p(0, &[1, 1]));
        assert_eq!(RatFun::new(p(0, &[1]), LaurentPoly::zero()), Err(AlgebraError::DivisionByZero));
    }

    #[test]
    fn involution_of_trefoil_fraction() {
        // (t − 1)/(t^2 − t + 1) -> (t^-1 − 1)/(t^-2 − t^-1 + 1); multiplying
        // top and bottom by t^2 gives (t − t^2)/(1 − t + t^2).
        let r = rf(p(0, &[-1, 1]), p(0, &[1, -1, 1]));
        let inv = r.involute();
        assert_eq!(inv.numerator(), &p(1, &[1, -1]));
        assert_eq!(inv.denominator(), &p(0, &[1, -1, 1]));
        assert_eq!(inv.involute(), r);
        assert_eq!(RatFun::one().involute(), RatFun::one());
    }

    #[test]
    fn class_equality() {
        let r = rf(LaurentPoly::one(), p(0, &[1, 0, 1]));
        let shifted = &r + &RatFun::from_poly(p(0, &[1, 0, 0, -5]));
        assert!(TorsionClass::new(r.clone()).class_eq(&TorsionClass::new(shifted)));

        let half = rf(LaurentPoly::one(), LaurentPoly::constant(2));
        assert!(!TorsionClass::new(half).is_zero_class());

        let a = rf(p(1, &[1]), p(0, &[1, -1, 1]));
        let b = &a + &RatFun::from_poly(p(-1, &[1]));
        assert!(TorsionClass::new(a).class_eq(&TorsionClass::new(b)));
    }

    #[test]
    fn rendering() {
        let r = rf(p(0, &[-1, 2, -1]), p(0, &[1, -1, 1]));
        assert_eq!(r.to_string(), "−(1 − 2t + t^2)/(1 − t + t^2)");
        assert_eq!(TorsionClass::new(r).to_string(), "−(1 − 2t + t^2)/(1 − t + t^2) mod Λ");
        assert_eq!(rf(p(1, &[1]), LaurentPoly::constant(2)).to_string(), "t/2");
        assert_eq!(RatFun::from_poly(p(-1, &[1, 0, 1])).to_string(), "t^-1 + t");
    }

    #[test]
    fn field_operations() {
        let a = rf(p(0, &[1, 1]), p(0, &[1, -1, 1]));
        let b = rf(p(0, &[2, -1]), p(0, &[3]));
        assert_eq!(&(&a * &b).checked_div(&b).unwrap(), &a);
        assert_eq!(&(&a + &b) - &b, a);
        assert!((&a - &a).is_zero());
        assert_eq!(RatFun::zero().recip(), Err(AlgebraError::DivisionByZero));
    }
}
