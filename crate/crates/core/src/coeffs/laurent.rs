use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::upoly::Poly;
use super::{CoeffError, Rational};

/// A Laurent polynomial in `s` (with `s² = q`) and an ordinary polynomial in `ε`.
///
/// Keys are `(s power, ε power)`; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentScalar {
    terms: BTreeMap<(i32, u32), Rational>,
}

impl LaurentScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Rational::one(), 0, 0)
    }

    pub fn monomial(c: Rational, s_pow: i32, eps_pow: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((s_pow, eps_pow), c);
        }
        Self { terms }
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn s_pow(k: i32) -> Self {
        Self::monomial(Rational::one(), k, 0)
    }

    pub fn eps_pow(k: u32) -> Self {
        Self::monomial(Rational::one(), 0, k)
    }

    /// `q^a - q^{-a}` for integer `a`, i.e. `s^{2a} - s^{-2a}`.
    pub fn q_minus_q_inv() -> Self {
        Self::s_pow(2).sub(&Self::s_pow(-2))
    }

    pub fn q_plus_q_inv() -> Self {
        Self::s_pow(2).add(&Self::s_pow(-2))
    }

    pub fn from_terms(it: impl IntoIterator<Item = ((i32, u32), Rational)>) -> Self {
        let mut out = Self::zero();
        for ((s, e), c) in it {
            out.add_term(s, e, c);
        }
        out
    }

    fn add_term(&mut self, s: i32, e: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((s, e)) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, u32, &Rational)> {
        self.terms.iter().map(|(&(s, e), c)| (s, e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(One::is_one)
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(s, e), c) in &other.terms {
            out.add_term(s, e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(s, e), c) in &other.terms {
            out.add_term(s, e, -c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        let mut out = Self::zero();
        for (&(s1, e1), c1) in &self.terms {
            for (&(s2, e2), c2) in &other.terms {
                out.add_term(s1 + s2, e1 + e2, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(k, c)| (*k, c * r)).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Multiplies by `s^a ε^b`.
    pub fn shift(&self, a: i32, b: u32) -> Self {
        Self { terms: self.terms.iter().map(|(&(s, e), c)| ((s + a, e + b), c.clone())).collect() }
    }

    /// Divides by `ε^b`; the caller guarantees divisibility.
    pub(crate) fn unshift_eps(&self, b: u32) -> Self {
        Self { terms: self.terms.iter().map(|(&(s, e), c)| ((s, e - b), c.clone())).collect() }
    }

    /// The only non-Laurent inverse available here is for monomials.
    pub fn inv(&self) -> Result<Self, CoeffError> {
        if self.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        if self.terms.len() == 1 {
            let (&(s, e), c) = self.terms.iter().next().unwrap();
            if e == 0 {
                return Ok(Self::monomial(c.recip(), -s, 0));
            }
        }
        Err(CoeffError::NotALaurentUnit)
    }

    pub fn min_s(&self) -> Option<i32> {
        self.terms.keys().map(|k| k.0).min()
    }

    pub fn max_s(&self) -> Option<i32> {
        self.terms.keys().map(|k| k.0).max()
    }

    pub fn min_eps(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.1).min()
    }

    pub fn max_eps(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.1).max()
    }

    pub fn is_eps_free(&self) -> bool {
        self.terms.keys().all(|k| k.1 == 0)
    }

    /// Splits into `ε^e ↦` coefficient (a Laurent polynomial in `s`).
    pub(crate) fn eps_slices(&self) -> BTreeMap<u32, BTreeMap<i32, Rational>> {
        let mut out: BTreeMap<u32, BTreeMap<i32, Rational>> = BTreeMap::new();
        for (&(s, e), c) in &self.terms {
            out.entry(e).or_default().insert(s, c.clone());
        }
        out
    }

    /// Dense polynomial in `s` after multiplying by `s^{-offset}`; requires
    /// an ε-free slice with all powers ≥ `offset`.
    pub(crate) fn slice_to_poly(slice: &BTreeMap<i32, Rational>, offset: i32) -> Poly {
        let top = slice.keys().next_back().copied().unwrap_or(offset);
        let mut out = vec![Rational::zero(); (top - offset + 1) as usize];
        for (&s, c) in slice {
            out[(s - offset) as usize] = c.clone();
        }
        super::upoly::trim(&mut out);
        out
    }

    pub(crate) fn from_poly(p: &Poly, s_offset: i32, eps: u32) -> Self {
        Self::from_terms(p.iter().enumerate().map(|(i, c)| ((i as i32 + s_offset, eps), c.clone())))
    }

    /// Substitutes `ε ↦ value`.
    pub fn eval_epsilon(&self, value: &Rational) -> Self {
        let mut out = Self::zero();
        for (&(s, e), c) in &self.terms {
            let factor = num_traits::pow::pow(value.clone(), e as usize);
            out.add_term(s, 0, c * factor);
        }
        out
    }

    /// Substitutes `s ↦ value` (and leaves ε alone) returning a polynomial in ε.
    pub fn eval_s(&self, value: &Rational) -> Result<BTreeMap<u32, Rational>, CoeffError> {
        let mut out: BTreeMap<u32, Rational> = BTreeMap::new();
        for (&(s, e), c) in &self.terms {
            if s < 0 && value.is_zero() {
                return Err(CoeffError::DenominatorVanishes);
            }
            let p = if s >= 0 {
                num_traits::pow::pow(value.clone(), s as usize)
            } else {
                num_traits::pow::pow(value.recip(), (-s) as usize)
            };
            *out.entry(e).or_insert_with(Rational::zero) += c * p;
        }
        out.retain(|_, c| !c.is_zero());
        Ok(out)
    }
}

impl fmt::Debug for LaurentScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, ((s, e), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*s^{s}*eps^{e}")?;
        }
        Ok(())
    }
}
