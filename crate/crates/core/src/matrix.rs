//! Dense matrices over exact commutative rings.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::AlgebraError;
use crate::laurent::{LaurentPoly, RatFun};

/// Size above which [`Matrix::adjugate`] switches from cofactors to
/// fraction-free Gauss-Jordan elimination.
pub const COFACTOR_ADJUGATE_MAX: usize = 6;

pub trait Scalar:
    Clone + PartialEq + fmt::Debug + Zero + One + Neg<Output = Self> + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone + PartialEq + fmt::Debug + Zero + One + Neg<Output = T> + Add<Output = T> + Sub<Output = T> + Mul<Output = T>
{
}

/// Integral domains with a divisibility test.
pub trait ExactDiv: Scalar {
    /// `Some(q)` with `self = q * divisor`, or `None` when no quotient exists
    /// in the ring (or `divisor` is zero).
    fn div_exact(&self, divisor: &Self) -> Option<Self>;
}

impl ExactDiv for BigInt {
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }
}

impl ExactDiv for BigRational {
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        (!divisor.is_zero()).then(|| self / divisor)
    }
}

impl ExactDiv for LaurentPoly {
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        self.divide_exact(divisor).ok().flatten()
    }
}

impl ExactDiv for RatFun {
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        self.checked_div(divisor).ok()
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type IntMatrix = Matrix<BigInt>;

/// Serialized as a list of rows. A matrix with no rows reads back as 0×0.
impl<T: Serialize + Clone> Serialize for Matrix<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_rows().serialize(serializer)
    }
}

impl<'de, T: Deserialize<'de>> Deserialize<'de> for Matrix<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<T>>::deserialize(deserializer)?;
        Matrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

impl<T> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, AlgebraError> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != m) {
            return Err(AlgebraError::DimensionMismatch { expected: m, found: bad.len() });
        }
        Ok(Self { rows: n, cols: m, data: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn map<U>(&self, mut f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(&mut f).collect() }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl<T: Clone> Matrix<T> {
    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    /// The submatrix keeping the listed rows and columns, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
    }

    /// Deletes row `r` and column `c`.
    pub fn minor(&self, r: usize, c: usize) -> Self {
        let rows: Vec<usize> = (0..self.rows).filter(|&i| i != r).collect();
        let cols: Vec<usize> = (0..self.cols).filter(|&j| j != c).collect();
        self.select(&rows, &cols)
    }

    /// `Π M Πᵗ` where row/column `i` of the result is row/column `perm[i]`
    /// of `self`.
    pub fn permute_symmetric(&self, perm: &[usize]) -> Self {
        self.select(perm, perm)
    }
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| c.clone() * x.clone())
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    /// Determinant by Laplace expansion along the first row. Exponential;
    /// used as an independent check on small matrices.
    pub fn det_cofactor(&self) -> Result<T, AlgebraError> {
        self.require_square()?;
        Ok(laplace(self))
    }

    fn require_square(&self) -> Result<(), AlgebraError> {
        if self.is_square() {
            Ok(())
        } else {
            Err(AlgebraError::NotSquare { rows: self.rows, cols: self.cols })
        }
    }
}

fn laplace<T: Scalar>(m: &Matrix<T>) -> T {
    match m.rows {
        0 => T::one(),
        1 => m.data[0].clone(),
        2 => m.data[0].clone() * m.data[3].clone() - m.data[1].clone() * m.data[2].clone(),
        n => {
            let mut acc = T::zero();
            for j in 0..n {
                if m[(0, j)].is_zero() {
                    continue;
                }
                let term = m[(0, j)].clone() * laplace(&m.minor(0, j));
                acc = if j % 2 == 0 { acc + term } else { acc - term };
            }
            acc
        }
    }
}

impl<T: ExactDiv> Matrix<T> {
    /// Fraction-free (Bareiss) determinant. All divisions are exact.
    pub fn det(&self) -> Result<T, AlgebraError> {
        self.require_square()?;
        let n = self.rows;
        if n == 0 {
            return Ok(T::one());
        }
        let mut a = self.clone();
        let mut prev = T::one();
        let mut negate = false;
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[(i, k)].is_zero()) else {
                return Ok(T::zero());
            };
            if p != k {
                a.swap_rows(p, k);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a[(k, k)].clone() * a[(i, j)].clone() - a[(i, k)].clone() * a[(k, j)].clone();
                    a[(i, j)] = num.div_exact(&prev).expect("Bareiss division is exact");
                }
            }
            prev = a[(k, k)].clone();
        }
        let d = a[(n - 1, n - 1)].clone();
        Ok(if negate { -d } else { d })
    }

    /// Determinant and adjugate, choosing the cofactor route up to
    /// [`COFACTOR_ADJUGATE_MAX`] and fraction-free elimination above.
    pub fn adjugate(&self) -> Result<(T, Matrix<T>), AlgebraError> {
        if self.rows <= COFACTOR_ADJUGATE_MAX {
            self.adjugate_cofactor()
        } else {
            self.adjugate_fraction_free()
        }
    }

    /// `adj[j][i] = (−1)^(i+j) det(minor(i, j))`, each minor by Bareiss.
    pub fn adjugate_cofactor(&self) -> Result<(T, Matrix<T>), AlgebraError> {
        self.require_square()?;
        let n = self.rows;
        let det = self.det()?;
        if n == 0 {
            return Ok((det, Matrix::zeros(0, 0)));
        }
        let mut adj = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let m = self.minor(i, j).det()?;
                adj[(j, i)] = if (i + j) % 2 == 0 { m } else { -m };
            }
        }
        Ok((det, adj))
    }

    /// Fraction-free Gauss-Jordan on `[M | I]`: every row is eliminated
    /// against each pivot with the Bareiss update, which ends at
    /// `[d·I | d·M⁻¹]` with `d = ±det M`. Singular input falls back to
    /// cofactors.
    pub fn adjugate_fraction_free(&self) -> Result<(T, Matrix<T>), AlgebraError> {
        self.require_square()?;
        let n = self.rows;
        if n == 0 {
            return Ok((T::one(), Matrix::zeros(0, 0)));
        }
        let w = 2 * n;
        let mut a = Matrix::from_fn(n, w, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                T::one()
            } else {
                T::zero()
            }
        });
        let mut prev = T::one();
        let mut negate = false;
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[(i, k)].is_zero()) else {
                return self.adjugate_cofactor();
            };
            if p != k {
                a.swap_rows(p, k);
                negate = !negate;
            }
            let pivot = a[(k, k)].clone();
            for i in (0..n).filter(|&i| i != k) {
                let factor = a[(i, k)].clone();
                for j in 0..w {
                    let num = pivot.clone() * a[(i, j)].clone() - factor.clone() * a[(k, j)].clone();
                    a[(i, j)] = num.div_exact(&prev).expect("fraction-free elimination divides exactly");
                }
            }
            prev = pivot;
        }
        let d = prev;
        let det = if negate { -d } else { d };
        let adj = Matrix::from_fn(n, n, |i, j| {
            let e = a[(i, n + j)].clone();
            if negate {
                -e
            } else {
                e
            }
        });
        Ok((det, adj))
    }
}

impl Matrix<LaurentPoly> {
    /// Exact inverse over Q(t) as adjugate / determinant.
    pub fn inverse(&self) -> Result<Matrix<RatFun>, AlgebraError> {
        let (det, adj) = self.adjugate()?;
        if det.is_zero() {
            return Err(AlgebraError::SingularMatrix);
        }
        Ok(adj.map(|e| RatFun::new(e.clone(), det.clone()).expect("nonzero determinant")))
    }

    pub fn involute(&self) -> Self {
        self.map(LaurentPoly::involute)
    }
}

impl IntMatrix {
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let n = rows.len();
        let m = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == m), "ragged rows");
        Self::from_fn(n, m, |i, j| BigInt::from(rows[i][j]))
    }

    pub fn to_laurent(&self) -> Matrix<LaurentPoly> {
        self.map(|c| LaurentPoly::constant(c.clone()))
    }

    /// Inverse of a matrix with determinant ±1, which is again integral.
    pub fn unimodular_inverse(&self) -> Result<IntMatrix, AlgebraError> {
        let (det, adj) = self.adjugate()?;
        if det.is_one() {
            Ok(adj)
        } else if (-&det).is_one() {
            Ok(adj.map(|x| -x))
        } else {
            Err(AlgebraError::SingularMatrix)
        }
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Scalar> Mul<&Matrix<T>> for &Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows, "matrix product dimensions");
        Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                let a = &self[(i, k)];
                let b = &rhs[(k, j)];
                if !a.is_zero() && !b.is_zero() {
                    acc = acc + a.clone() * b.clone();
                }
            }
            acc
        })
    }
}

impl<T: Scalar> Add<&Matrix<T>> for &Matrix<T> {
    type Output = Matrix<T>;
    fn add(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sum dimensions");
        Matrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)].clone() + rhs[(i, j)].clone())
    }
}

impl<T: Scalar> Sub<&Matrix<T>> for &Matrix<T> {
    type Output = Matrix<T>;
    fn sub(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix difference dimensions");
        Matrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)].clone() - rhs[(i, j)].clone())
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.debug_list().entries(&self.data[i * self.cols..(i + 1) * self.cols]).finish()?;
        }
        f.write_str("]")
    }
}
