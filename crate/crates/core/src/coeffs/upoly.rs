//! Dense univariate polynomials over the rationals.
//!
//! Coefficients are stored lowest degree first with trailing zeros trimmed,
//! so the zero polynomial is the empty vector. These helpers back the gcd
//! in [`RationalFunction`](super::RationalFunction) and inversion in
//! cyclotomic fields.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Rational;

pub(crate) type Poly = Vec<Rational>;

pub(crate) fn trim(p: &mut Poly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub(crate) fn from_ints(p: &[BigInt]) -> Poly {
    let mut out: Poly = p.iter().map(|c| Rational::from_integer(c.clone())).collect();
    trim(&mut out);
    out
}

pub(crate) fn degree(p: &Poly) -> Option<usize> {
    p.len().checked_sub(1)
}

pub(crate) fn add(a: &Poly, b: &Poly) -> Poly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x + y,
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => unreachable!(),
        };
        out.push(x);
    }
    trim(&mut out);
    out
}

pub(crate) fn sub(a: &Poly, b: &Poly) -> Poly {
    let neg: Poly = b.iter().map(|c| -c).collect();
    add(a, &neg)
}

pub(crate) fn mul(a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn scale(a: &Poly, c: &Rational) -> Poly {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|x| x * c).collect()
}

/// Euclidean division; panics on a zero divisor.
pub(crate) fn divrem(a: &Poly, b: &Poly) -> (Poly, Poly) {
    let db = degree(b).expect("division by the zero polynomial");
    let lead_inv = b[db].recip();
    let mut rem = a.clone();
    let mut quot = vec![Rational::zero(); a.len().saturating_sub(db).max(1)];
    while let Some(dr) = degree(&rem) {
        if dr < db {
            break;
        }
        let c = &rem[dr] * &lead_inv;
        let shift = dr - db;
        for (i, bc) in b.iter().enumerate() {
            rem[shift + i] -= &c * bc;
        }
        quot[shift] = c;
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

pub(crate) fn make_monic(p: &Poly) -> Poly {
    match p.last() {
        None => Vec::new(),
        Some(lc) => {
            let inv = lc.recip();
            p.iter().map(|c| c * &inv).collect()
        }
    }
}

/// Monic gcd; `gcd(0, 0) = 0`.
pub(crate) fn gcd(a: &Poly, b: &Poly) -> Poly {
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_empty() {
        let (_, r) = divrem(&x, &y);
        x = y;
        y = r;
    }
    make_monic(&x)
}

/// Inverse of `a` modulo `m` by the extended Euclidean algorithm, or `None`
/// when `gcd(a, m) != 1`.
pub(crate) fn inverse_mod(a: &Poly, m: &Poly) -> Option<Poly> {
    // Track only the cofactor of `a`.
    let (_, reduced) = divrem(a, m);
    let (mut r0, mut r1) = (m.clone(), reduced);
    let (mut u0, mut u1): (Poly, Poly) = (Vec::new(), vec![Rational::one()]);
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1);
        let u = sub(&u0, &mul(&q, &u1));
        r0 = r1;
        r1 = r;
        u0 = u1;
        u1 = u;
    }
    // r0 is the gcd up to a constant.
    if degree(&r0) != Some(0) {
        return None;
    }
    let inv = r0[0].recip();
    let (_, u) = divrem(&scale(&u0, &inv), m);
    Some(u)
}

pub(crate) fn is_one(p: &Poly) -> bool {
    p.len() == 1 && p[0].is_one()
}
