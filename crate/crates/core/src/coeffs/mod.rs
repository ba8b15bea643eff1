//! Exact scalar arithmetic.
//!
//! Everything here is exact: big rationals, Laurent polynomials in the
//! formal square root `s` of `q` (plus an optional contraction parameter
//! `ε`), rational functions of those, and cyclotomic fields for evaluating
//! at a root of unity.

mod cyclotomic;
mod json;
mod laurent;
mod ratfunc;
mod scalar;
pub(crate) mod upoly;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

pub use cyclotomic::{cyclotomic_polynomial, euler_phi, CycloElement, CyclotomicField};
pub use json::{scalar_from_json, scalar_to_json};
pub use laurent::LaurentScalar;
pub use ratfunc::RationalFunction;
pub use scalar::{specialize, specialize_at_conductor, CoeffDomain, DomainKind, RootScalar, Scalar};

pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoeffError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes under specialization")]
    DenominatorVanishes,
    #[error("negative power of eps")]
    NegativeEpsilonPower,
    #[error("only denominators of the form eps^k * D(s) are supported")]
    UnsupportedDenominator,
    #[error("not invertible in the Laurent ring")]
    NotALaurentUnit,
    #[error("value still depends on eps")]
    EpsilonPresent,
    #[error("domain has no eps parameter")]
    NoEpsilon,
    #[error("root of unity order {0} not supported (need n >= 3)")]
    InvalidRootOfUnity(u32),
    #[error("malformed scalar JSON: {0}")]
    Json(String),
}

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `C(n, k)`, zero when `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_edges() {
        assert_eq!(binomial(5, 2), 10.into());
        assert_eq!(binomial(0, 0), 1.into());
        assert_eq!(binomial(3, 4), 0.into());
        assert_eq!(binomial(3, -1), 0.into());
        assert_eq!(factorial(0), 1.into());
        assert_eq!(factorial(6), 720.into());
    }
}
