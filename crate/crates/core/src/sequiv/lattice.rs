//! Small exact integer lattice routines used by the reduction search.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::matrix::IntMatrix;

/// A primitive integer vector `g` with `m·g = 0`, or `None` if `m` is
/// nonsingular.
pub(crate) fn right_kernel_vector(m: &IntMatrix) -> Option<Vec<BigInt>> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.map(|x| BigRational::from_integer(x.clone()));
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else { continue };
        for j in 0..cols {
            let tmp = a[(r, j)].clone();
            a[(r, j)] = a[(p, j)].clone();
            a[(p, j)] = tmp;
        }
        let inv = a[(r, c)].recip();
        for j in 0..cols {
            a[(r, j)] = &a[(r, j)] * &inv;
        }
        for i in 0..rows {
            if i != r && !a[(i, c)].is_zero() {
                let f = a[(i, c)].clone();
                for j in 0..cols {
                    let delta = &f * &a[(r, j)];
                    a[(i, j)] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    let free = (0..cols).find(|c| !pivots.contains(c))?;
    let mut v = vec![BigRational::zero(); cols];
    v[free] = BigRational::one();
    for (row, &c) in pivots.iter().enumerate() {
        v[c] = -a[(row, free)].clone();
    }
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    Some(primitive(ints))
}

/// Divides by the gcd of the entries.
pub(crate) fn primitive(v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        return v;
    }
    v.into_iter().map(|x| x / &g).collect()
}

/// An integer vector `f` with `r·f = 1`, if the entries of `r` are coprime.
pub(crate) fn unit_preimage(r: &[BigInt]) -> Option<Vec<BigInt>> {
    let n = r.len();
    let mut g = BigInt::zero();
    let mut f = vec![BigInt::zero(); n];
    for (i, ri) in r.iter().enumerate() {
        let e = g.extended_gcd(ri);
        for x in f.iter_mut() {
            *x *= &e.x;
        }
        f[i] += &e.y;
        g = e.gcd;
    }
    if g.is_one() {
        Some(f)
    } else if (-&g).is_one() {
        Some(f.into_iter().map(|x| -x).collect())
    } else {
        None
    }
}

/// A basis of the lattice spanned by `vectors`, by integer row echelon
/// reduction.
pub(crate) fn lattice_basis(mut vectors: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let cols = vectors.first().map_or(0, Vec::len);
    let mut top = 0;
    for c in 0..cols {
        while let Some(p) = (top..vectors.len())
            .filter(|&i| !vectors[i][c].is_zero())
            .min_by(|&i, &j| vectors[i][c].abs().cmp(&vectors[j][c].abs()))
        {
            vectors.swap(top, p);
            let mut done = true;
            for i in top + 1..vectors.len() {
                if vectors[i][c].is_zero() {
                    continue;
                }
                let q = vectors[i][c].div_floor(&vectors[top][c]);
                for j in 0..cols {
                    let delta = &q * &vectors[top][j];
                    vectors[i][j] -= delta;
                }
                if !vectors[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                top += 1;
                break;
            }
        }
        if top == vectors.len() {
            break;
        }
    }
    vectors.truncate(top);
    vectors
}
