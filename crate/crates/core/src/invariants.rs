//! S-equivalence invariants read off the presentation `At − Aᵗ`.
//!
//! These are filters: different values prove two matrices are not
//! S-equivalent, equal values prove nothing.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::laurent::LaurentPoly;
use crate::matrix::Matrix;
use crate::seifert::SeifertMatrix;
use crate::serde_int::Int;

/// The presentation determinant `det(At − Aᵗ)` before unit normalization.
pub fn presentation_determinant(a: &SeifertMatrix) -> LaurentPoly {
    a.presentation().det().expect("square")
}

/// `det(At − Aᵗ)` multiplied by the unit `±t^k` that gives lowest exponent
/// 0 and a positive constant term. The 0×0 matrix gives 1.
pub fn alexander_poly(a: &SeifertMatrix) -> LaurentPoly {
    presentation_determinant(a)
        .normalize_unit()
        .expect("det(At − Aᵗ) is 1 at t = 1, hence nonzero")
        .0
}

/// `|Δ(−1)|`.
pub fn det_at_minus_one(a: &SeifertMatrix) -> BigInt {
    alexander_poly(a).evaluate_integer(-1).abs()
}

/// Signature of the symmetric matrix `A + Aᵗ` by exact congruence
/// diagonalization over Q.
pub fn signature(a: &SeifertMatrix) -> i64 {
    let sym = a.matrix() + &a.matrix().transpose();
    symmetric_signature(&sym.map(|x| BigRational::from_integer(x.clone())))
}

/// Positive minus negative diagonal entries after symmetric Gaussian
/// elimination. A zero pivot is repaired by swapping in a later nonzero
/// diagonal entry, or failing that by adding a later row and column with a
/// nonzero off-diagonal entry (making the pivot `2·s[k][j]`). A row that is
/// zero beyond the diagonal contributes nothing.
pub fn symmetric_signature(sym: &Matrix<BigRational>) -> i64 {
    assert!(sym.is_square(), "signature of a non-square matrix");
    let n = sym.rows();
    let mut s = sym.clone();
    let mut sig = 0i64;
    for k in 0..n {
        if s[(k, k)].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !s[(j, j)].is_zero()) {
                swap_symmetric(&mut s, k, j);
            } else if let Some(j) = (k + 1..n).find(|&j| !s[(k, j)].is_zero()) {
                add_symmetric(&mut s, k, j);
            } else {
                continue;
            }
        }
        let d = s[(k, k)].clone();
        sig += if d.is_positive() { 1 } else { -1 };
        for i in k + 1..n {
            if s[(i, k)].is_zero() {
                continue;
            }
            let f = &s[(i, k)] / &d;
            for j in k + 1..n {
                let delta = &f * &s[(k, j)];
                s[(i, j)] -= delta;
            }
        }
        for i in k + 1..n {
            s[(i, k)] = BigRational::zero();
            s[(k, i)] = BigRational::zero();
        }
    }
    sig
}

fn swap_symmetric(s: &mut Matrix<BigRational>, a: usize, b: usize) {
    let n = s.rows();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.swap(a, b);
    *s = s.permute_symmetric(&perm);
}

/// Row and column `k` += row and column `j`.
fn add_symmetric(s: &mut Matrix<BigRational>, k: usize, j: usize) {
    let n = s.rows();
    for c in 0..n {
        let v = s[(j, c)].clone();
        s[(k, c)] += v;
    }
    for r in 0..n {
        let v = s[(r, j)].clone();
        s[(r, k)] += v;
    }
}

/// The invariants compared before any pairing search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub alexander: LaurentPoly,
    pub det_at_minus_one: Int,
    pub signature: i64,
    /// `det(At − Aᵗ)` at `t = 1` before normalization, i.e. `det(A − Aᵗ)`,
    /// which is 1 for every Seifert-type matrix.
    pub alexander_at_one: Int,
}

impl InvariantReport {
    pub fn of(a: &SeifertMatrix) -> Self {
        let raw = presentation_determinant(a);
        let alexander = raw.normalize_unit().expect("nonzero").0;
        let det_at_minus_one = Int(alexander.evaluate_integer(-1).abs());
        Self {
            alexander_at_one: Int(raw.evaluate_integer(1)),
            alexander,
            det_at_minus_one,
            signature: signature(a),
        }
    }

    /// Invariants whose values differ, in the fixed order alexander,
    /// det_at_minus_one, signature.
    pub fn differences(&self, other: &InvariantReport) -> Vec<InvariantDiff> {
        let mut out = Vec::new();
        if self.alexander != other.alexander {
            out.push(InvariantDiff::new("alexander", &self.alexander, &other.alexander));
        }
        if self.det_at_minus_one != other.det_at_minus_one {
            out.push(InvariantDiff::new("det_at_minus_one", &self.det_at_minus_one.0, &other.det_at_minus_one.0));
        }
        if self.signature != other.signature {
            out.push(InvariantDiff::new("signature", &self.signature, &other.signature));
        }
        out
    }
}

impl fmt::Display for InvariantReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "alexander: {}", self.alexander)?;
        writeln!(f, "det_at_minus_one: {}", self.det_at_minus_one.0)?;
        writeln!(f, "signature: {}", self.signature)?;
        write!(f, "alexander_at_one: {}", self.alexander_at_one.0)
    }
}

/// One invariant on which two matrices disagree, with both rendered values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantDiff {
    pub name: String,
    pub left: String,
    pub right: String,
}

impl InvariantDiff {
    fn new(name: &str, left: &impl fmt::Display, right: &impl fmt::Display) -> Self {
        Self { name: name.to_owned(), left: left.to_string(), right: right.to_string() }
    }
}

impl fmt::Display for InvariantDiff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} vs {}", self.name, self.left, self.right)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::IntMatrix;

    fn lp(c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(0, c)
    }

    #[test]
    fn unknot() {
        let r = InvariantReport::of(&SeifertMatrix::unknot());
        assert!(r.alexander.is_one());
        assert_eq!(r.det_at_minus_one.0, BigInt::from(1));
        assert_eq!(r.signature, 0);
        assert_eq!(r.alexander_at_one.0, BigInt::from(1));
    }

    #[test]
    fn trefoil() {
        // det [[1 − t, t], [−1, 1 − t]] = (1 − t)^2 + t = 1 − t + t^2
        let a = SeifertMatrix::trefoil();
        assert_eq!(alexander_poly(&a), lp(&[1, -1, 1]));
        assert_eq!(det_at_minus_one(&a), BigInt::from(3));
        // A + Aᵗ = [[−2, 1], [1, −2]], leading minors −2 and 3
        assert_eq!(signature(&a), -2);
    }

    #[test]
    fn figure_eight() {
        // det [[t − 1, t], [−1, 1 − t]] = −(t − 1)^2 + t = −1 + 3t − t^2
        let a = SeifertMatrix::figure_eight();
        assert_eq!(presentation_determinant(&a), lp(&[-1, 3, -1]));
        assert_eq!(alexander_poly(&a), lp(&[1, -3, 1]));
        assert_eq!(det_at_minus_one(&a), BigInt::from(5));
        // A + Aᵗ = [[2, 1], [1, −2]], leading minors 2 and −5
        assert_eq!(signature(&a), 0);
        assert_eq!(InvariantReport::of(&a).alexander_at_one.0, BigInt::from(1));
    }

    #[test]
    fn signature_needs_pivot_repair() {
        // [[0, 1], [1, 0]] is a hyperbolic plane: signature 0
        let h = IntMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]).map(|x| BigRational::from_integer(x.clone()));
        assert_eq!(symmetric_signature(&h), 0);
        // diag(0, 0, 3) with off-diagonal 2 at (0, 1): eigenvalues ±2 and 3
        let m = IntMatrix::from_i64_rows(&[&[0, 2, 0], &[2, 0, 0], &[0, 0, 3]]).map(|x| BigRational::from_integer(x.clone()));
        assert_eq!(symmetric_signature(&m), 1);
        let z = IntMatrix::from_i64_rows(&[&[0, 0], &[0, -4]]).map(|x| BigRational::from_integer(x.clone()));
        assert_eq!(symmetric_signature(&z), -1);
    }

    #[test]
    fn differences_name_the_invariant() {
        let a = InvariantReport::of(&SeifertMatrix::trefoil());
        let b = InvariantReport::of(&SeifertMatrix::figure_eight());
        let d = a.differences(&b);
        assert_eq!(d[0].name, "alexander");
        assert_eq!(d[0].left, "1 − t + t^2");
        assert_eq!(d[0].right, "1 − 3t + t^2");
        assert_eq!(d.iter().map(|x| x.name.as_str()).collect::<Vec<_>>(), ["alexander", "det_at_minus_one", "signature"]);
        assert!(a.differences(&a).is_empty());
    }
}
