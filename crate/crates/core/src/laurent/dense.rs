//! Dense ordinary polynomials in Z[t], ascending coefficient order.
//!
//! Only the pieces needed to keep `RatFun` reduced live here: content,
//! primitive part, pseudo-remainder, primitive gcd and exact division.
//! A polynomial is trimmed when its last coefficient is nonzero; the zero
//! polynomial is the empty vector.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) type Dense = Vec<BigInt>;

pub(crate) fn trim(p: &mut Dense) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub(crate) fn degree(p: &Dense) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

/// Nonnegative gcd of all coefficients; zero for the zero polynomial.
pub(crate) fn content(p: &Dense) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Primitive part with positive leading coefficient.
pub(crate) fn primitive_part(p: &Dense) -> Dense {
    if p.is_empty() {
        return Vec::new();
    }
    let mut c = content(p);
    if p.last().unwrap().is_negative() {
        c = -c;
    }
    p.iter().map(|x| x / &c).collect()
}

/// Pseudo-remainder of `a` by `b`: lc(b)^(deg a - deg b + 1) * a mod b.
pub(crate) fn pseudo_rem(a: &Dense, b: &Dense) -> Dense {
    let db = degree(b).expect("pseudo_rem by zero polynomial");
    let lc = b[db].clone();
    let mut r = a.clone();
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let lead = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c *= &lc;
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] -= &lead * bc;
        }
        trim(&mut r);
    }
    r
}

/// Primitive gcd over Z[t] (equivalently, the gcd over Q[t] scaled to a
/// primitive integer polynomial with positive leading coefficient).
pub(crate) fn primitive_gcd(a: &Dense, b: &Dense) -> Dense {
    let mut x = primitive_part(a);
    let mut y = primitive_part(b);
    if degree(&x) < degree(&y) {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = pseudo_rem(&x, &y);
        x = y;
        y = primitive_part(&r);
    }
    x
}

/// Exact division in Z[t]. Long division from the top; fails as soon as a
/// quotient coefficient would leave Z or a nonzero remainder is left.
pub(crate) fn div_exact(a: &Dense, b: &Dense) -> Option<Dense> {
    let db = degree(b)?;
    let Some(da) = degree(a) else {
        return Some(Vec::new());
    };
    if da < db {
        return None;
    }
    let lc = &b[db];
    let mut r = a.clone();
    let mut q = vec![BigInt::zero(); da - db + 1];
    for shift in (0..=da - db).rev() {
        let lead = &r[shift + db];
        if lead.is_zero() {
            continue;
        }
        let (qc, rem) = lead.div_rem(lc);
        if !rem.is_zero() {
            return None;
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] -= &qc * bc;
        }
        q[shift] = qc;
    }
    if r.iter().all(Zero::is_zero) {
        trim(&mut q);
        Some(q)
    } else {
        None
    }
}
