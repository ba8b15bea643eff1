use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::VerifyError;
use crate::coeffs::{binomial, factorial, Rational};

struct Eval {
    identity: char,
    params: (u32, u32, u32),
}

impl Eval {
    fn fact(&self, n: i64) -> Result<BigInt, VerifyError> {
        if n < 0 {
            return Err(VerifyError::NegativeFactorial { identity: self.identity, params: self.params, arg: n });
        }
        Ok(factorial(n as u64))
    }

    fn ratio(&self, num: &[i64], den: &[i64]) -> Result<Rational, VerifyError> {
        let mut a = BigInt::one();
        for &n in num {
            a *= self.fact(n)?;
        }
        let mut b = BigInt::one();
        for &n in den {
            b *= self.fact(n)?;
        }
        Ok(Rational::new(a, b))
    }
}

fn int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// Both sides of the first identity at `(N, C, M)`.
pub fn identity_a_sides(n: u32, c: u32, m: u32) -> Result<(Rational, Rational), VerifyError> {
    let h = n.saturating_sub(1) / 2;
    if n == 0 || c > h || m > h {
        return Err(VerifyError::Range { identity: 'A', params: (n, c, m) });
    }
    let ev = Eval { identity: 'A', params: (n, c, m) };
    let (n, c, m, h) = (n as i64, c as i64, m as i64, h as i64);
    let parity = n % 2;
    let big_h = n / 2;

    let mut lhs = Rational::zero();
    for t in 0..=h {
        lhs += int(binomial(n, 2 * t + 1) * binomial(h - t, h - c) * binomial(t, m));
    }

    let power = int(4).pow((c - m) as i32);
    let linear = int(n - 2 * c * (1 - parity));
    let facts = ev.ratio(&[2 * big_h, big_h + c - m, big_h - m], &[big_h, 2 * c + 1, 2 * big_h - 2 * m, big_h - c])?;
    let rhs = power * int(binomial(c, m)) * linear * facts;
    Ok((lhs, rhs))
}

/// Both sides of the second identity at `(n, c, d)`.
pub fn identity_b_sides(n: u32, c: u32, d: u32) -> Result<(Rational, Rational), VerifyError> {
    let h = n.saturating_sub(1) / 2;
    if n == 0 || c > h || d > h {
        return Err(VerifyError::Range { identity: 'B', params: (n, c, d) });
    }
    let ev = Eval { identity: 'B', params: (n, c, d) };
    let (n, c, d, h) = (n as i64, c as i64, d as i64, h as i64);
    let parity = n % 2;
    let big_h = n / 2;

    let mut lhs = Rational::zero();
    for j in 0..=d {
        let odd_term = if parity == 1 { n - 2 * d - 1 } else { 1 };
        let weight = Rational::new((2 * d - 2 * j + 1 + odd_term).into(), (n - j).into());
        let facts = ev.ratio(
            &[2 * big_h - 2 * j, n - 1 - c - d, big_h - c],
            &[big_h - j, d - j + 1 - parity, 2 * big_h - 2 * c, n - 2 * d + parity - 1],
        )?;
        lhs += int(binomial(n - j, j)) * weight * int(binomial(h - d, c - j)) * facts;
    }

    let numer = int(binomial(n - 1 - d, d) * binomial(n - 1 - c, c));
    let denom = if parity == 1 { int(n - 2 * d) } else { Rational::new(n.into(), 2.into()) };
    Ok((lhs, numer / denom))
}

pub fn check_identity_a(n: u32, c: u32, m: u32) -> Result<bool, VerifyError> {
    identity_a_sides(n, c, m).map(|(l, r)| l == r)
}

pub fn check_identity_b(n: u32, c: u32, d: u32) -> Result<bool, VerifyError> {
    identity_b_sides(n, c, d).map(|(l, r)| l == r)
}

/// A tuple where the two sides differ or a term cannot be evaluated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdentityFailure {
    Unequal { params: (u32, u32, u32), lhs: Rational, rhs: Rational },
    Error(VerifyError),
}

fn sweep(
    max: u32,
    sides: fn(u32, u32, u32) -> Result<(Rational, Rational), VerifyError>,
) -> (usize, Vec<IdentityFailure>) {
    let mut checked = 0;
    let mut failures = Vec::new();
    for n in 1..=max {
        let h = (n - 1) / 2;
        for a in 0..=h {
            for b in 0..=h {
                checked += 1;
                match sides(n, a, b) {
                    Ok((lhs, rhs)) if lhs != rhs => {
                        failures.push(IdentityFailure::Unequal { params: (n, a, b), lhs, rhs })
                    }
                    Ok(_) => {}
                    Err(e) => failures.push(IdentityFailure::Error(e)),
                }
            }
        }
    }
    (checked, failures)
}

/// Every valid `(N, C, M)` with `N <= max`, in increasing order; failures come first-minimal.
pub fn sweep_identity_a(max: u32) -> (usize, Vec<IdentityFailure>) {
    sweep(max, identity_a_sides)
}

pub fn sweep_identity_b(max: u32) -> (usize, Vec<IdentityFailure>) {
    sweep(max, identity_b_sides)
}
