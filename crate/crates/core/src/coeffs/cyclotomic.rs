//! Arithmetic in the cyclotomic field `Q(ζ_M) = Q[x]/Φ_M(x)`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::upoly::{self, Poly};
use super::{CoeffError, Rational};

/// Integer coefficients of the `M`-th cyclotomic polynomial, lowest degree first.
///
/// Computed by dividing `x^M - 1` by `Φ_d` for every proper divisor `d` of `M`.
pub fn cyclotomic_polynomial(m: u32) -> Vec<BigInt> {
    assert!(m >= 1, "cyclotomic polynomial needs a positive conductor");
    let mut num: Poly = vec![Rational::zero(); m as usize + 1];
    num[0] = -Rational::one();
    num[m as usize] = Rational::one();
    for d in 1..m {
        if m % d == 0 {
            let phi_d = upoly::from_ints(&cyclotomic_polynomial(d));
            let (q, r) = upoly::divrem(&num, &phi_d);
            debug_assert!(r.is_empty());
            num = q;
        }
    }
    num.into_iter()
        .map(|c| {
            debug_assert!(c.is_integer());
            c.to_integer()
        })
        .collect()
}

pub fn euler_phi(m: u32) -> u32 {
    (1..=m).filter(|k| k.gcd(&m) == 1).count() as u32
}

/// The field `Q(ζ_M)` with the power basis `1, x, ..., x^{φ(M)-1}`.
#[derive(Debug)]
pub struct CyclotomicField {
    conductor: u32,
    modulus: Poly,
    /// `x^k mod Φ_M` for `k = 0..M`.
    powers: Vec<Poly>,
}

impl CyclotomicField {
    pub fn new(conductor: u32) -> Arc<Self> {
        let modulus = upoly::from_ints(&cyclotomic_polynomial(conductor));
        let mut powers = Vec::with_capacity(conductor as usize);
        let mut cur: Poly = vec![Rational::one()];
        for _ in 0..conductor {
            powers.push(cur.clone());
            let shifted: Poly = std::iter::once(Rational::zero()).chain(cur).collect();
            cur = upoly::divrem(&shifted, &modulus).1;
        }
        Arc::new(Self { conductor, modulus, powers })
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub(crate) fn reduce(&self, p: &Poly) -> Poly {
        if p.len() < self.modulus.len() {
            let mut out = p.clone();
            upoly::trim(&mut out);
            return out;
        }
        upoly::divrem(p, &self.modulus).1
    }

    /// `x^k` for any integer `k`, using `x^M = 1`.
    pub(crate) fn power(&self, k: i64) -> &Poly {
        &self.powers[k.rem_euclid(self.conductor as i64) as usize]
    }
}

/// An element of `Q(ζ_M)`; `x` stands for the primitive root `ζ_M`.
///
/// Coefficients are kept reduced modulo `Φ_M` and trimmed, so equal field
/// elements have identical representations.
#[derive(Clone)]
pub struct CycloElement {
    field: Arc<CyclotomicField>,
    coeffs: Poly,
}

impl CycloElement {
    pub fn zero(field: &Arc<CyclotomicField>) -> Self {
        Self { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &Arc<CyclotomicField>) -> Self {
        Self::from_rational(field, Rational::one())
    }

    pub fn from_rational(field: &Arc<CyclotomicField>, r: Rational) -> Self {
        let mut coeffs = vec![r];
        upoly::trim(&mut coeffs);
        Self { field: field.clone(), coeffs }
    }

    /// The class of `x^k`.
    pub fn x_pow(field: &Arc<CyclotomicField>, k: i64) -> Self {
        Self { field: field.clone(), coeffs: field.power(k).clone() }
    }

    /// Builds an element from an arbitrary polynomial in `x`, reducing mod `Φ_M`.
    pub fn from_coeffs(field: &Arc<CyclotomicField>, coeffs: Vec<Rational>) -> Self {
        Self { field: field.clone(), coeffs: field.reduce(&coeffs) }
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn conductor(&self) -> u32 {
        self.field.conductor
    }

    /// Coefficient vector of length `φ(M)`, zero padded.
    pub fn coeffs(&self) -> Vec<Rational> {
        let mut out = self.coeffs.clone();
        out.resize(self.field.degree(), Rational::zero());
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        upoly::is_one(&self.coeffs)
    }

    /// The element as a rational, if it lies in `Q`.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.field.conductor, other.field.conductor, "mixing cyclotomic fields of different conductors");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        Self { field: self.field.clone(), coeffs: upoly::add(&self.coeffs, &other.coeffs) }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check(other);
        Self { field: self.field.clone(), coeffs: upoly::sub(&self.coeffs, &other.coeffs) }
    }

    pub fn neg(&self) -> Self {
        Self { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let prod = upoly::mul(&self.coeffs, &other.coeffs);
        Self { field: self.field.clone(), coeffs: self.field.reduce(&prod) }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self { field: self.field.clone(), coeffs: upoly::scale(&self.coeffs, r) }
    }

    /// Field inverse via the extended Euclidean algorithm modulo `Φ_M`.
    pub fn inv(&self) -> Result<Self, CoeffError> {
        if self.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        let u = upoly::inverse_mod(&self.coeffs, &self.field.modulus)
            .expect("Φ_M is irreducible, so every nonzero class is invertible");
        Ok(Self { field: self.field.clone(), coeffs: u })
    }
}

impl PartialEq for CycloElement {
    fn eq(&self, other: &Self) -> bool {
        self.field.conductor == other.field.conductor && self.coeffs == other.coeffs
    }
}

impl Eq for CycloElement {}

impl fmt::Debug for CycloElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclo[{}](", self.field.conductor)?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}
