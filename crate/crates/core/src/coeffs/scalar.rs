use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::Zero;

use super::cyclotomic::{CycloElement, CyclotomicField};
use super::laurent::LaurentScalar;
use super::ratfunc::RationalFunction;
use super::{CoeffError, Rational};

/// A polynomial in `ε` over a cyclotomic field; `coeffs[k]` multiplies `ε^k`.
///
/// This is the scalar type of root-of-unity domains. Without `ε` only the
/// constant slot is used.
#[derive(Clone)]
pub struct RootScalar {
    field: Arc<CyclotomicField>,
    coeffs: Vec<CycloElement>,
}

impl PartialEq for RootScalar {
    fn eq(&self, other: &Self) -> bool {
        self.field.conductor() == other.field.conductor() && self.coeffs == other.coeffs
    }
}

impl Eq for RootScalar {}

impl RootScalar {
    pub fn zero(field: &Arc<CyclotomicField>) -> Self {
        Self { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn constant(c: CycloElement) -> Self {
        let field = c.field().clone();
        Self::from_coeffs(&field, vec![c])
    }

    pub fn from_coeffs(field: &Arc<CyclotomicField>, mut coeffs: Vec<CycloElement>) -> Self {
        while coeffs.last().is_some_and(CycloElement::is_zero) {
            coeffs.pop();
        }
        Self { field: field.clone(), coeffs }
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    /// `(ε power, coefficient)` pairs with nonzero coefficients.
    pub fn eps_terms(&self) -> impl Iterator<Item = (u32, &CycloElement)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k as u32, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn as_cyclo(&self) -> Option<CycloElement> {
        match self.coeffs.len() {
            0 => Some(CycloElement::zero(&self.field)),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&CycloElement, &CycloElement) -> CycloElement) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = CycloElement::zero(&self.field);
        let coeffs =
            (0..n).map(|i| f(self.coeffs.get(i).unwrap_or(&zero), other.coeffs.get(i).unwrap_or(&zero))).collect();
        Self::from_coeffs(&self.field, coeffs)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, CycloElement::add)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, CycloElement::sub)
    }

    pub fn neg(&self) -> Self {
        Self { field: self.field.clone(), coeffs: self.coeffs.iter().map(CycloElement::neg).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.field);
        }
        if self.coeffs.len() == 1 && other.coeffs.len() == 1 {
            return Self::from_coeffs(&self.field, vec![self.coeffs[0].mul(&other.coeffs[0])]);
        }
        let mut out = vec![CycloElement::zero(&self.field); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::from_coeffs(&self.field, out)
    }

    pub fn inv(&self) -> Result<Self, CoeffError> {
        match self.coeffs.len() {
            0 => Err(CoeffError::DivisionByZero),
            1 => Ok(Self::constant(self.coeffs[0].inv()?)),
            _ => Err(CoeffError::UnsupportedDenominator),
        }
    }

    pub fn eval_epsilon(&self, value: &Rational) -> Self {
        let mut acc = CycloElement::zero(&self.field);
        let mut power = Rational::from_integer(1.into());
        for c in &self.coeffs {
            acc = acc.add(&c.scale(&power));
            power *= value;
        }
        Self::constant(acc)
    }
}

impl fmt::Debug for RootScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}

/// A coefficient of an algebra element.
///
/// `Generic` scalars are rational functions in `s = q^{1/2}` (and `ε`);
/// `Root` scalars live in `Q(ζ_{2n})[ε]` after `s` has been specialized.
/// Arithmetic between the two variants is a programming error and panics;
/// presentations guarantee that all scalars of an element share a domain.
#[derive(Clone, PartialEq, Eq)]
pub enum Scalar {
    Generic(RationalFunction),
    Root(RootScalar),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Generic(v) => v.is_zero(),
            Scalar::Root(v) => v.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Generic(v) => v.is_one(),
            Scalar::Root(v) => v.is_one(),
        }
    }

    pub fn inv(&self) -> Result<Scalar, CoeffError> {
        match self {
            Scalar::Generic(v) => v.inv().map(Scalar::Generic),
            Scalar::Root(v) => v.inv().map(Scalar::Root),
        }
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar, CoeffError> {
        Ok(self * &other.inv()?)
    }

    pub fn scale(&self, r: &Rational) -> Scalar {
        match self {
            Scalar::Generic(v) => Scalar::Generic(v.scale(r)),
            Scalar::Root(v) => {
                let c = RootScalar::constant(CycloElement::from_rational(v.field(), r.clone()));
                Scalar::Root(v.mul(&c))
            }
        }
    }

    /// Substitutes `ε ↦ value`; `value = 0` is the contraction limit.
    pub fn eval_epsilon(&self, value: &Rational) -> Result<Scalar, CoeffError> {
        match self {
            Scalar::Generic(v) => v.eval_epsilon(value).map(Scalar::Generic),
            Scalar::Root(v) => Ok(Scalar::Root(v.eval_epsilon(value))),
        }
    }

    pub fn is_eps_free(&self) -> bool {
        match self {
            Scalar::Generic(v) => v.is_eps_free(),
            Scalar::Root(v) => v.coeffs.len() <= 1,
        }
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match self {
            Scalar::Generic(v) => v.as_rational(),
            Scalar::Root(v) => v.as_cyclo().and_then(|c| c.as_rational()),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Generic(v) => write!(f, "{v:?}"),
            Scalar::Root(v) => write!(f, "{v:?}"),
        }
    }
}

macro_rules! scalar_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Generic(a), Scalar::Generic(b)) => Scalar::Generic(a.$method(b)),
                    (Scalar::Root(a), Scalar::Root(b)) => Scalar::Root(a.$method(b)),
                    _ => panic!("scalar domain mismatch"),
                }
            }
        }
    };
}

scalar_binop!(Add, add);
scalar_binop!(Sub, sub);
scalar_binop!(Mul, mul);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Generic(v) => Scalar::Generic(v.neg()),
            Scalar::Root(v) => Scalar::Root(v.neg()),
        }
    }
}

/// Which value `q` takes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DomainKind {
    GenericQ,
    /// `q` a primitive `n`-th root of unity, `n >= 3`.
    RootOfUnity(u32),
}

/// The coefficient domain of a presentation.
#[derive(Clone)]
pub struct CoeffDomain {
    kind: DomainKind,
    with_epsilon: bool,
    field: Option<Arc<CyclotomicField>>,
}

impl PartialEq for CoeffDomain {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind && self.with_epsilon == other.with_epsilon
    }
}

impl Eq for CoeffDomain {}

impl fmt::Debug for CoeffDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.kind)?;
        if self.with_epsilon {
            write!(f, "+eps")?;
        }
        Ok(())
    }
}

impl CoeffDomain {
    pub fn generic() -> Self {
        Self { kind: DomainKind::GenericQ, with_epsilon: false, field: None }
    }

    /// `q` a primitive `n`-th root of unity; `s` is sent to `x` modulo `Φ_{2n}`.
    pub fn root_of_unity(n: u32) -> Result<Self, CoeffError> {
        if n < 3 {
            return Err(CoeffError::InvalidRootOfUnity(n));
        }
        Ok(Self { kind: DomainKind::RootOfUnity(n), with_epsilon: false, field: Some(CyclotomicField::new(2 * n)) })
    }

    pub fn with_epsilon(mut self, on: bool) -> Self {
        self.with_epsilon = on;
        self
    }

    pub fn kind(&self) -> DomainKind {
        self.kind
    }

    pub fn has_epsilon(&self) -> bool {
        self.with_epsilon
    }

    pub fn field(&self) -> Option<&Arc<CyclotomicField>> {
        self.field.as_ref()
    }

    pub fn zero(&self) -> Scalar {
        match &self.field {
            None => Scalar::Generic(RationalFunction::zero()),
            Some(f) => Scalar::Root(RootScalar::zero(f)),
        }
    }

    pub fn one(&self) -> Scalar {
        self.rational(Rational::from_integer(1.into()))
    }

    pub fn int(&self, n: i64) -> Scalar {
        self.rational(Rational::from_integer(n.into()))
    }

    pub fn rational(&self, r: Rational) -> Scalar {
        match &self.field {
            None => Scalar::Generic(RationalFunction::from_rational(r)),
            Some(f) => Scalar::Root(RootScalar::constant(CycloElement::from_rational(f, r))),
        }
    }

    /// `s^k = q^{k/2}`.
    pub fn s_pow(&self, k: i32) -> Scalar {
        match &self.field {
            None => Scalar::Generic(RationalFunction::s_pow(k)),
            Some(f) => Scalar::Root(RootScalar::constant(CycloElement::x_pow(f, k as i64))),
        }
    }

    /// `ε^k`; only meaningful when the domain carries `ε`.
    pub fn eps_pow(&self, k: u32) -> Result<Scalar, CoeffError> {
        if !self.with_epsilon && k > 0 {
            return Err(CoeffError::NoEpsilon);
        }
        Ok(match &self.field {
            None => Scalar::Generic(RationalFunction::eps_pow(k)),
            Some(f) => {
                let mut coeffs = vec![CycloElement::zero(f); k as usize];
                coeffs.push(CycloElement::one(f));
                Scalar::Root(RootScalar::from_coeffs(f, coeffs))
            }
        })
    }

    /// `q - q^{-1}`.
    pub fn q_minus_q_inv(&self) -> Scalar {
        &self.s_pow(2) - &self.s_pow(-2)
    }

    /// Maps a generic-`q` value into this domain (the identity for `GenericQ`).
    pub fn lift(&self, v: &RationalFunction) -> Result<Scalar, CoeffError> {
        match &self.field {
            None => Ok(Scalar::Generic(v.clone())),
            Some(f) => specialize_in(f, v).map(Scalar::Root),
        }
    }

    /// Whether a scalar belongs to this domain's variant.
    pub fn owns(&self, v: &Scalar) -> bool {
        match (v, &self.field) {
            (Scalar::Generic(_), None) => true,
            (Scalar::Root(r), Some(f)) => r.field().conductor() == f.conductor(),
            _ => false,
        }
    }
}

fn eval_laurent(field: &Arc<CyclotomicField>, v: &LaurentScalar) -> Vec<CycloElement> {
    let mut slots: Vec<Vec<Rational>> = Vec::new();
    let deg = field.degree();
    for (s, e, c) in v.terms() {
        let e = e as usize;
        if slots.len() <= e {
            slots.resize(e + 1, vec![Rational::zero(); deg]);
        }
        for (i, p) in field.power(s as i64).iter().enumerate() {
            slots[e][i] += c * p;
        }
    }
    slots.into_iter().map(|c| CycloElement::from_coeffs(field, c)).collect()
}

pub(crate) fn specialize_in(field: &Arc<CyclotomicField>, v: &RationalFunction) -> Result<RootScalar, CoeffError> {
    let num = RootScalar::from_coeffs(field, eval_laurent(field, v.numerator()));
    if v.is_polynomial() {
        return Ok(num);
    }
    if !v.denominator().is_eps_free() {
        return Err(CoeffError::NegativeEpsilonPower);
    }
    let den = RootScalar::from_coeffs(field, eval_laurent(field, v.denominator()));
    match den.inv() {
        Ok(inv) => Ok(num.mul(&inv)),
        Err(CoeffError::DivisionByZero) => Err(CoeffError::DenominatorVanishes),
        Err(e) => Err(e),
    }
}

/// Substitutes `s ↦ ζ_{2n}` so that `q = s²` becomes a primitive `n`-th root of unity.
pub fn specialize(v: &RationalFunction, n: u32) -> Result<CycloElement, CoeffError> {
    if n < 3 {
        return Err(CoeffError::InvalidRootOfUnity(n));
    }
    specialize_at_conductor(v, 2 * n)
}

/// Substitutes `s ↦ ζ_M` for an arbitrary conductor. Unlike [`specialize`]
/// this accepts `M = 2` or `M = 4` (that is `q = 1` or `q = -1`), which the
/// algebra domains reject.
pub fn specialize_at_conductor(v: &RationalFunction, conductor: u32) -> Result<CycloElement, CoeffError> {
    let field = CyclotomicField::new(conductor);
    let r = specialize_in(&field, v)?;
    r.as_cyclo().ok_or(CoeffError::EpsilonPresent)
}
