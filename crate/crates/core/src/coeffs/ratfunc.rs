use std::fmt;

use num_traits::{One, Zero};

use super::laurent::LaurentScalar;
use super::upoly;
use super::{CoeffError, Rational};

/// A quotient of Laurent scalars in canonical form.
///
/// Denominators are restricted to `ε^k · D(s)` where `D` is an ordinary
/// polynomial with nonzero constant term. In canonical form `D` is monic,
/// shares no factor with the numerator, and `k > 0` only if the numerator
/// has a nonzero `ε^0` part. Equal functions therefore have identical
/// representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: LaurentScalar,
    den: LaurentScalar,
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<LaurentScalar> for RationalFunction {
    fn from(num: LaurentScalar) -> Self {
        Self { num, den: LaurentScalar::one() }
    }
}

impl RationalFunction {
    pub fn zero() -> Self {
        LaurentScalar::zero().into()
    }

    pub fn one() -> Self {
        LaurentScalar::one().into()
    }

    pub fn from_rational(r: Rational) -> Self {
        LaurentScalar::from_rational(r).into()
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    pub fn s_pow(k: i32) -> Self {
        LaurentScalar::s_pow(k).into()
    }

    pub fn eps_pow(k: u32) -> Self {
        LaurentScalar::eps_pow(k).into()
    }

    pub fn new(num: LaurentScalar, den: LaurentScalar) -> Result<Self, CoeffError> {
        if den.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        if den.is_one() {
            return Ok(Self { num, den });
        }
        let eps = den.min_eps().unwrap();
        if den.max_eps() != Some(eps) {
            return Err(CoeffError::UnsupportedDenominator);
        }
        // Move the Laurent unit s^a of the denominator into the numerator.
        let a = den.min_s().unwrap();
        let mut num = num.shift(-a, 0);
        let slices = den.eps_slices();
        let mut d = LaurentScalar::slice_to_poly(&slices[&eps], a);

        let cancel = eps.min(num.min_eps().unwrap());
        num = num.unshift_eps(cancel);
        let eps = eps - cancel;

        if d.len() > 1 {
            let mut g = d.clone();
            let num_slices = num.eps_slices();
            for slice in num_slices.values() {
                if upoly::is_one(&g) {
                    break;
                }
                let off = *slice.keys().next().unwrap();
                g = upoly::gcd(&g, &LaurentScalar::slice_to_poly(slice, off));
            }
            if !upoly::is_one(&g) {
                d = upoly::divrem(&d, &g).0;
                let mut rebuilt = LaurentScalar::zero();
                for (e, slice) in &num_slices {
                    let off = *slice.keys().next().unwrap();
                    let (q, r) = upoly::divrem(&LaurentScalar::slice_to_poly(slice, off), &g);
                    debug_assert!(r.is_empty());
                    rebuilt = rebuilt.add(&LaurentScalar::from_poly(&q, off, *e));
                }
                num = rebuilt;
            }
        }
        let lc = d.last().unwrap().clone();
        if !lc.is_one() {
            let inv = lc.recip();
            num = num.scale(&inv);
            d = upoly::scale(&d, &inv);
        }
        Ok(Self { num, den: LaurentScalar::from_poly(&d, 0, eps) })
    }

    pub fn numerator(&self) -> &LaurentScalar {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentScalar {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.den.is_one() {
            self.num.as_rational()
        } else {
            None
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            let num = self.num.add(&other.num);
            if self.den.is_one() {
                return num.into();
            }
            return Self::new(num, self.den.clone()).expect("canonical denominators are supported");
        }
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        Self::new(num, self.den.mul(&other.den)).expect("canonical denominators are supported")
    }

    pub fn neg(&self) -> Self {
        Self { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.den.is_one() && other.den.is_one() {
            return self.num.mul(&other.num).into();
        }
        Self::new(self.num.mul(&other.num), self.den.mul(&other.den)).expect("canonical denominators are supported")
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Self { num: self.num.scale(r), den: self.den.clone() }
    }

    pub fn inv(&self) -> Result<Self, CoeffError> {
        if self.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &Self) -> Result<Self, CoeffError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, k: i32) -> Result<Self, CoeffError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        Ok((0..k.unsigned_abs()).fold(Self::one(), |acc, _| acc.mul(&base)))
    }

    pub fn is_eps_free(&self) -> bool {
        self.num.is_eps_free() && self.den.is_eps_free()
    }

    /// Substitutes `ε ↦ value`; a surviving `ε` in the denominator is an error.
    pub fn eval_epsilon(&self, value: &Rational) -> Result<Self, CoeffError> {
        if !self.den.is_eps_free() {
            return Err(CoeffError::NegativeEpsilonPower);
        }
        Self::new(self.num.eval_epsilon(value), self.den.clone())
    }

    /// Substitutes `s ↦ value`, leaving a polynomial in `ε` over the rationals.
    pub fn eval_s(&self, value: &Rational) -> Result<Self, CoeffError> {
        let lift = |m: std::collections::BTreeMap<u32, Rational>| {
            LaurentScalar::from_terms(m.into_iter().map(|(e, c)| ((0, e), c)))
        };
        let num = lift(self.num.eval_s(value)?);
        let den = lift(self.den.eval_s(value)?);
        if den.is_zero() {
            return Err(CoeffError::DenominatorVanishes);
        }
        Self::new(num, den)
    }

    #[cfg(test)]
    pub(crate) fn den_poly(&self) -> (upoly::Poly, u32) {
        let slices = self.den.eps_slices();
        let (&eps, slice) = slices.iter().next().unwrap();
        (LaurentScalar::slice_to_poly(slice, 0), eps)
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{:?}", self.num)
        } else {
            write!(f, "({:?})/({:?})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dq() -> RationalFunction {
        LaurentScalar::q_minus_q_inv().into()
    }

    #[test]
    fn cancels_common_factors() {
        let a = dq().mul(&RationalFunction::s_pow(3));
        let b = dq();
        let quotient = a.div(&b).unwrap();
        assert_eq!(quotient, RationalFunction::s_pow(3));
        assert!(quotient.is_polynomial());
    }

    #[test]
    fn inverse_round_trips() {
        let x = dq().add(&RationalFunction::from_int(3));
        let y = x.inv().unwrap();
        assert_eq!(x.mul(&y), RationalFunction::one());
        assert_eq!(y.inv().unwrap(), x);
    }

    #[test]
    fn denominator_is_monic_with_unit_constant_removed() {
        // 1 / (2 s^3 - 2 s^{-1}) = s / (2 (s^4 - 1))
        let den = LaurentScalar::from_terms([
            ((3, 0), Rational::from_integer(2.into())),
            ((-1, 0), Rational::from_integer((-2).into())),
        ]);
        let v = RationalFunction::new(LaurentScalar::one(), den).unwrap();
        let (d, eps) = v.den_poly();
        assert_eq!(eps, 0);
        assert!(d.last().unwrap().is_one());
        assert!(!d[0].is_zero());
    }

    #[test]
    fn epsilon_in_denominator() {
        let v = RationalFunction::eps_pow(1).inv().unwrap();
        assert_eq!(v.eval_epsilon(&Rational::zero()), Err(CoeffError::NegativeEpsilonPower));
        let w = RationalFunction::eps_pow(3).mul(&v);
        assert_eq!(w, RationalFunction::eps_pow(2));
        let mixed = RationalFunction::one().add(&RationalFunction::eps_pow(1));
        assert_eq!(mixed.inv(), Err(CoeffError::UnsupportedDenominator));
    }
}
