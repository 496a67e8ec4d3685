#![allow(clippy::needless_range_loop, dead_code)]
//! Independent reference implementations for the integration tests. Nothing
//! here calls the library's polynomial division, gcd or matrix inversion.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use seifert_core::{LaurentPoly, Matrix, RatFun};

/// A Laurent polynomial over Q, kept as exponent → nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QPoly(pub BTreeMap<i64, BigRational>);

impl QPoly {
    pub fn from_laurent(p: &LaurentPoly) -> Self {
        QPoly(p.terms().map(|(e, c)| (e, BigRational::from_integer(c.clone()))).collect())
    }

    pub fn one() -> Self {
        QPoly(BTreeMap::from([(0, BigRational::one())]))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, other: &QPoly) -> QPoly {
        let mut out = self.0.clone();
        for (e, c) in &other.0 {
            let v = out.remove(e).unwrap_or_else(BigRational::zero) + c;
            if !v.is_zero() {
                out.insert(*e, v);
            }
        }
        QPoly(out)
    }

    pub fn neg(&self) -> QPoly {
        QPoly(self.0.iter().map(|(e, c)| (*e, -c)).collect())
    }

    pub fn sub(&self, other: &QPoly) -> QPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &QPoly) -> QPoly {
        let mut out = QPoly::default();
        for (e1, c1) in &self.0 {
            let term = QPoly(other.0.iter().map(|(e2, c2)| (e1 + e2, c1 * c2)).collect());
            out = out.add(&term);
        }
        out
    }

    /// Coefficients from the lowest exponent upward, and that exponent.
    fn dense(&self) -> (i64, Vec<BigRational>) {
        let lo = *self.0.keys().next().expect("nonzero");
        let hi = *self.0.keys().next_back().expect("nonzero");
        let v = (lo..=hi).map(|e| self.0.get(&e).cloned().unwrap_or_else(BigRational::zero)).collect();
        (lo, v)
    }
}

/// Schoolbook long division of ordinary polynomials over Q (ascending
/// coefficient vectors): quotient and remainder.
pub fn long_division(num: &[BigRational], den: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = num.to_vec();
    let dl = den.len();
    if rem.len() < dl {
        return (Vec::new(), rem);
    }
    let lead = den[dl - 1].clone();
    let mut quot = vec![BigRational::zero(); rem.len() - dl + 1];
    for shift in (0..quot.len()).rev() {
        let c = &rem[shift + dl - 1] / &lead;
        if c.is_zero() {
            continue;
        }
        for (i, d) in den.iter().enumerate() {
            rem[shift + i] -= &c * d;
        }
        quot[shift] = c;
    }
    rem.truncate(dl - 1);
    (quot, rem)
}

/// `p / q ∈ Z[t, t⁻¹]`, decided by clearing the powers of `t`, dividing
/// ordinary polynomials over Q and checking that the remainder vanishes and
/// the quotient is integral.
pub fn in_lambda(p: &QPoly, q: &QPoly) -> bool {
    assert!(!q.is_zero());
    if p.is_zero() {
        return true;
    }
    let (_, pd) = p.dense();
    let (_, qd) = q.dense();
    let (quot, rem) = long_division(&pd, &qd);
    rem.iter().all(Zero::is_zero) && quot.iter().all(|c| c.is_integer())
}

/// Class equality in Q(t)/Λ by the brute-force route.
pub fn class_eq_oracle(x: &RatFun, y: &RatFun) -> bool {
    let (a, b) = (QPoly::from_laurent(x.numerator()), QPoly::from_laurent(x.denominator()));
    let (c, d) = (QPoly::from_laurent(y.numerator()), QPoly::from_laurent(y.denominator()));
    in_lambda(&a.mul(&d).sub(&c.mul(&b)), &b.mul(&d))
}

/// An unreduced fraction of Q-Laurent polynomials.
#[derive(Clone, Debug)]
pub struct Frac {
    pub num: QPoly,
    pub den: QPoly,
}

impl Frac {
    pub fn from_laurent(p: &LaurentPoly) -> Self {
        Frac { num: QPoly::from_laurent(p), den: QPoly::one() }
    }

    pub fn zero() -> Self {
        Frac { num: QPoly::default(), den: QPoly::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn sub(&self, o: &Frac) -> Frac {
        Frac { num: self.num.mul(&o.den).sub(&o.num.mul(&self.den)), den: self.den.mul(&o.den) }
    }

    pub fn mul(&self, o: &Frac) -> Frac {
        Frac { num: self.num.mul(&o.num), den: self.den.mul(&o.den) }
    }

    pub fn div(&self, o: &Frac) -> Frac {
        assert!(!o.is_zero());
        Frac { num: self.num.mul(&o.den), den: self.den.mul(&o.num) }
    }

    /// Equality with a library value by cross-multiplication.
    pub fn equals(&self, r: &RatFun) -> bool {
        let n = QPoly::from_laurent(r.numerator());
        let d = QPoly::from_laurent(r.denominator());
        self.num.mul(&d) == n.mul(&self.den)
    }
}

/// Inverse by Gauss–Jordan elimination on `[M | I]` over Q(t), or `None`
/// when singular.
pub fn gauss_inverse(m: &Matrix<LaurentPoly>) -> Option<Vec<Vec<Frac>>> {
    let n = m.rows();
    let mut a: Vec<Vec<Frac>> = (0..n)
        .map(|i| {
            (0..2 * n)
                .map(|j| {
                    if j < n {
                        Frac::from_laurent(&m[(i, j)])
                    } else if j - n == i {
                        Frac::from_laurent(&LaurentPoly::one())
                    } else {
                        Frac::zero()
                    }
                })
                .collect()
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero())?;
        a.swap(c, p);
        let pivot = a[c][c].clone();
        for j in 0..2 * n {
            a[c][j] = a[c][j].div(&pivot);
        }
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                for j in 0..2 * n {
                    a[r][j] = a[r][j].sub(&f.mul(&a[c][j]));
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// A random Laurent polynomial with up to `terms` terms, exponents in
/// `[-2, 2]` and coefficients in `[-3, 3]`.
pub fn random_laurent(rng: &mut impl Rng, terms: usize) -> LaurentPoly {
    LaurentPoly::from_terms((0..rng.random_range(0..=terms)).map(|_| {
        (rng.random_range(-2..=2i64), BigInt::from(rng.random_range(-3..=3i64)))
    }))
}

pub fn random_nonzero_laurent(rng: &mut impl Rng, terms: usize) -> LaurentPoly {
    loop {
        let p = random_laurent(rng, terms);
        if !p.is_zero() {
            return p;
        }
    }
}

/// Determinant by the Leibniz formula, the slowest and most obviously
/// correct route.
pub fn leibniz_det(m: &Matrix<LaurentPoly>) -> LaurentPoly {
    let n = m.rows();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = LaurentPoly::zero();
    permutations(&mut perm, 0, &mut |p| {
        let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
        let mut term = LaurentPoly::one();
        for (i, &j) in p.iter().enumerate() {
            term = &term * &m[(i, j)];
        }
        if inversions % 2 == 1 {
            term = -term;
        }
        total += &term;
    });
    total
}

fn permutations(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permutations(p, k + 1, f);
        p.swap(k, i);
    }
}

