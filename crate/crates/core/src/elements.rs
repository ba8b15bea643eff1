//! Named elements and maps: Casimirs, the root-of-unity elements `C^(n)`,
//! the polynomials `p_m`, `q_m`, the cyclic automorphism of `so_3`, the
//! ε-isomorphism and the contraction to `iso_2`.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::{AlgebraElement, AlgebraError, Family, GeneratorId, Presentation};
use crate::coeffs::{binomial, LaurentScalar, Rational, RationalFunction};

fn i(k: u32, l: u32) -> GeneratorId {
    GeneratorId::so(k, l)
}

fn require(pres: &Presentation, family: Family) -> Result<(), AlgebraError> {
    if pres.family() != family {
        return Err(AlgebraError::WrongFamily(pres.family()));
    }
    Ok(())
}

/// `C_q = q² I₁² + I₂² + q² I₃² + q^{1/2}(1 - q²) I₁ I₂ I₃` in `U'_q(so_3)`.
pub fn casimir_so3(pres: &Presentation) -> Result<AlgebraElement, AlgebraError> {
    require(pres, Family::SoPrime(3))?;
    let d = pres.domain();
    let (i1, i2, i3) = (i(2, 1), i(3, 2), i(3, 1));
    let cubic = &d.s_pow(1) * &(&d.one() - &d.s_pow(4));
    pres.normal_form(&[
        (d.s_pow(4), vec![i1, i1]),
        (d.one(), vec![i2, i2]),
        (d.s_pow(4), vec![i3, i3]),
        (cubic, vec![i1, i2, i3]),
    ])
}

/// `C_q = q⁻¹ T₁² + q T₂² + q^{-3/2}(1 - q²) T₁ T₂ I` in `U_q(iso_2)`.
pub fn casimir_iso2(pres: &Presentation) -> Result<AlgebraElement, AlgebraError> {
    require(pres, Family::Iso(2))?;
    let d = pres.domain();
    let (t1, t2) = (GeneratorId::Trans(1), GeneratorId::Trans(2));
    let cubic = &d.s_pow(-3) * &(&d.one() - &d.s_pow(4));
    pres.normal_form(&[(d.s_pow(-2), vec![t1, t1]), (d.s_pow(2), vec![t2, t2]), (cubic, vec![t1, t2, i(2, 1)])])
}

/// Coefficients `(power, c_j)` of `C^(n)(X) = Σ_j c_j X^{n-2j}`, with
/// `c_j = (-1)^j C(n-j, j)/(n-j) · (q - q⁻¹)^{-2j}`.
pub fn cn_coefficients(n: u32) -> Result<Vec<(u32, RationalFunction)>, AlgebraError> {
    if n < 3 {
        return Err(AlgebraError::UnsupportedN(n));
    }
    let dq: RationalFunction = LaurentScalar::q_minus_q_inv().into();
    let dq_inv2 = dq.mul(&dq).inv()?;
    let mut out = Vec::new();
    let mut factor = RationalFunction::one();
    for j in 0..=(n - 1) / 2 {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let c = Rational::new(binomial((n - j) as i64, j as i64) * sign, ((n - j) as i64).into());
        out.push((n - 2 * j, factor.scale(&c)));
        factor = factor.mul(&dq_inv2);
    }
    Ok(out)
}

/// The element `C^(n)(X)` for a single PBW letter `X`.
pub fn cn_element(x: GeneratorId, n: u32, pres: &Presentation) -> Result<AlgebraElement, AlgebraError> {
    let coeffs = cn_coefficients(n)?;
    let mut out = pres.zero();
    for (power, c) in coeffs {
        let c = pres.domain().lift(&c)?;
        out = &out + &pres.gen_pow(x, power)?.scale(&c);
    }
    Ok(out)
}

/// `C̃^(n)(J_i, ε)`: `n ε^n C^(n)(J_i/ε)` for `i = 1, 3` and `C^(n)(J_2)` for `i = 2`.
pub fn tilde_cn(idx: u32, n: u32, pres: &Presentation) -> Result<AlgebraElement, AlgebraError> {
    require(pres, Family::EpsSo3)?;
    let x = GeneratorId::Eps(idx);
    pres.letter(x)?;
    if idx == 2 {
        return cn_element(x, n, pres);
    }
    let d = pres.domain();
    let mut out = pres.zero();
    for (power, c) in cn_coefficients(n)? {
        let j = (n - power) / 2;
        let c = &d.lift(&c.scale(&Rational::from_integer(n.into())))? * &d.eps_pow(2 * j)?;
        out = &out + &pres.gen_pow(x, power)?.scale(&c);
    }
    Ok(out)
}

/// Laurent polynomial in a formal variable `x` over generic-`q` rational functions.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: BTreeMap<i32, RationalFunction>,
}

impl UniPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(c: RationalFunction, power: i32) -> Self {
        let mut out = Self::zero();
        out.add_term(power, c);
        out
    }

    fn add_term(&mut self, power: i32, c: RationalFunction) {
        if c.is_zero() {
            return;
        }
        let sum = match self.coeffs.remove(&power) {
            Some(prev) => prev.add(&c),
            None => c,
        };
        if !sum.is_zero() {
            self.coeffs.insert(power, sum);
        }
    }

    pub fn coeff(&self, power: i32) -> RationalFunction {
        self.coeffs.get(&power).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &RationalFunction)> {
        self.coeffs.iter().map(|(&k, c)| (k, c))
    }

    pub fn min_power(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&k, c) in &other.coeffs {
            out.add_term(k, c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&a, ca) in &self.coeffs {
            for (&b, cb) in &other.coeffs {
                out.add_term(a + b, ca.mul(cb));
            }
        }
        out
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        let mut out = Self::zero();
        for (&k, v) in &self.coeffs {
            out.add_term(k, v.mul(c));
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::monomial(RationalFunction::one(), 0), |acc, _| acc.mul(self))
    }

    pub fn is_polynomial(&self) -> bool {
        self.min_power().is_none_or(|k| k >= 0)
    }
}

/// Expands the closed forms of `p_m` and `q_m` in `I₃ I₁^m = p_m(I₁) I₂ + q_m(I₁) I₃`.
///
/// The sums are evaluated as Laurent polynomials in `x`; every negative
/// power must cancel.
pub fn pq_polys(m: u32) -> Result<(UniPoly, UniPoly), AlgebraError> {
    let half = Rational::new(1.into(), 2.into());
    let plus: RationalFunction = LaurentScalar::q_plus_q_inv().into();
    let minus: RationalFunction = LaurentScalar::q_minus_q_inv().into();
    // A = x (q + q⁻¹)/2
    let a = UniPoly::monomial(plus.scale(&half), 1);
    // B = ((q - q⁻¹)/(q + q⁻¹))² - (2/(x(q + q⁻¹)))²
    let ratio = minus.div(&plus)?;
    let two_over = RationalFunction::from_int(2).div(&plus)?;
    let b = UniPoly::monomial(ratio.mul(&ratio), 0).add(&UniPoly::monomial(two_over.mul(&two_over).neg(), -2));

    let odd_sum = (0..).take_while(|t| 2 * t < m).fold(UniPoly::zero(), |acc, t| {
        let c = RationalFunction::from_rational(binomial(m as i64, 2 * t as i64 + 1).into());
        acc.add(&b.pow(t).scale(&c))
    });
    let even_sum = (0..).take_while(|t| 2 * t <= m).fold(UniPoly::zero(), |acc, t| {
        let c = RationalFunction::from_rational(binomial(m as i64, 2 * t as i64).into());
        acc.add(&b.pow(t).scale(&c))
    });

    let p = if m == 0 { UniPoly::zero() } else { a.pow(m - 1).mul(&odd_sum).scale(&RationalFunction::s_pow(-1)) };
    // -q^{1/2} x (q - q⁻¹)/2 · p_m
    let shift = UniPoly::monomial(minus.scale(&-half).mul(&RationalFunction::s_pow(1)), 1);
    let q = shift.mul(&p).add(&a.pow(m).mul(&even_sum));
    if !p.is_polynomial() || !q.is_polynomial() {
        return Err(AlgebraError::NonPolynomialResult(m));
    }
    Ok((p, q))
}

/// `Σ_k c_k X^k · tail` in the given presentation.
pub fn poly_in_letter(
    pres: &Presentation,
    x: GeneratorId,
    poly: &UniPoly,
    tail: Option<GeneratorId>,
) -> Result<AlgebraElement, AlgebraError> {
    let tail = match tail {
        Some(g) => pres.gen(g)?,
        None => pres.one(),
    };
    let mut out = pres.zero();
    for (k, c) in poly.terms() {
        if k < 0 {
            return Err(AlgebraError::NonPolynomialResult(k.unsigned_abs()));
        }
        let term = pres.multiply(&pres.gen_pow(x, k as u32)?, &tail)?;
        out = &out + &term.scale(&pres.domain().lift(c)?);
    }
    Ok(out)
}

/// The automorphism `ρ: I₁ ↦ I₂ ↦ I₃ ↦ I₁` of `U'_q(so_3)`.
pub fn rho_apply(a: &AlgebraElement, pres: &Presentation) -> Result<AlgebraElement, AlgebraError> {
    require(pres, Family::SoPrime(3))?;
    let image = |g: GeneratorId| {
        let to = match g {
            GeneratorId::So { k: 2, l: 1 } => i(3, 2),
            GeneratorId::So { k: 3, l: 2 } => i(3, 1),
            _ => i(2, 1),
        };
        pres.gen(to)
    };
    pres.apply_hom(a, pres, &image, &|c| Ok(c.clone()))
}

/// The isomorphism `J₁ ↦ ε I₁, J₂ ↦ I₂, J₃ ↦ ε I₃` into `U'_q(so_3)` over a domain with `ε`.
pub fn eps_iso(
    a: &AlgebraElement,
    source: &Presentation,
    target: &Presentation,
) -> Result<AlgebraElement, AlgebraError> {
    require(source, Family::EpsSo3)?;
    require(target, Family::SoPrime(3))?;
    if source.domain() != target.domain() {
        return Err(AlgebraError::DomainMismatch);
    }
    let eps = target.domain().eps_pow(1)?;
    let image = |g: GeneratorId| match g {
        GeneratorId::Eps(1) => Ok(target.gen(i(2, 1))?.scale(&eps)),
        GeneratorId::Eps(2) => target.gen(i(3, 2)),
        _ => Ok(target.gen(i(3, 1))?.scale(&eps)),
    };
    target.apply_hom(a, source, &image, &|c| Ok(c.clone()))
}

/// The contraction `ε → 0` followed by `J₁ ↦ T₁, J₂ ↦ I, J₃ ↦ T₂` into `U_q(iso_2)`.
pub fn contract_to_iso2(
    a: &AlgebraElement,
    source: &Presentation,
    target: &Presentation,
) -> Result<AlgebraElement, AlgebraError> {
    require(source, Family::EpsSo3)?;
    require(target, Family::Iso(2))?;
    if source.domain().kind() != target.domain().kind() {
        return Err(AlgebraError::DomainMismatch);
    }
    let image = |g: GeneratorId| match g {
        GeneratorId::Eps(1) => target.gen(GeneratorId::Trans(1)),
        GeneratorId::Eps(2) => target.gen(i(2, 1)),
        _ => target.gen(GeneratorId::Trans(2)),
    };
    let zero = Rational::zero();
    target.apply_hom(a, source, &image, &|c| Ok(c.eval_epsilon(&zero)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Crossing;
    use crate::coeffs::{rational, CoeffDomain};

    fn so3(d: CoeffDomain) -> Presentation {
        Presentation::build(Family::SoPrime(3), d, Crossing::PlainBracket).unwrap()
    }

    fn rf(n: i64, d: i64) -> RationalFunction {
        RationalFunction::from_rational(rational(n, d))
    }

    #[test]
    fn cn_at_cube_root() {
        let p = so3(CoeffDomain::root_of_unity(3).unwrap());
        let c = cn_element(i(2, 1), 3, &p).unwrap();
        let third = p.domain().rational(rational(1, 3));
        let expect = &p.gen_pow(i(2, 1), 3).unwrap().scale(&third) + &p.gen(i(2, 1)).unwrap().scale(&third);
        assert_eq!(c, expect);
        assert!(matches!(cn_element(i(2, 1), 2, &p), Err(AlgebraError::UnsupportedN(2))));
    }

    #[test]
    fn cn_generic_n4_coefficients() {
        let cs = cn_coefficients(4).unwrap();
        let dq: RationalFunction = LaurentScalar::q_minus_q_inv().into();
        assert_eq!(cs[0], (4, rf(1, 4)));
        assert_eq!(cs[1], (2, dq.mul(&dq).inv().unwrap().neg()));
        assert_eq!(cs.len(), 2);
    }

    #[test]
    fn pq_small_closed_forms() {
        let (p0, q0) = pq_polys(0).unwrap();
        assert_eq!(p0, UniPoly::zero());
        assert_eq!(q0, UniPoly::monomial(RationalFunction::one(), 0));

        let (p1, q1) = pq_polys(1).unwrap();
        assert_eq!(p1, UniPoly::monomial(RationalFunction::s_pow(-1), 0));
        assert_eq!(q1, UniPoly::monomial(RationalFunction::s_pow(-2), 1));

        let (p2, q2) = pq_polys(2).unwrap();
        let plus: RationalFunction = LaurentScalar::q_plus_q_inv().into();
        assert_eq!(p2, UniPoly::monomial(RationalFunction::s_pow(-1).mul(&plus), 1));
        let expect = UniPoly::monomial(RationalFunction::s_pow(-4), 2).add(&UniPoly::monomial(rf(-1, 1), 0));
        assert_eq!(q2, expect);
    }

    #[test]
    fn casimir_classical_limit() {
        let p = so3(CoeffDomain::generic());
        let c = casimir_so3(&p).unwrap();
        assert_eq!(c.len(), 4);
        let one = Rational::from_integer(1.into());
        let mut limit = BTreeMap::new();
        for (m, v) in c.terms() {
            let crate::coeffs::Scalar::Generic(f) = v else { unreachable!() };
            let at_one = f.eval_s(&one).unwrap();
            if !at_one.is_zero() {
                limit.insert(m.degree(), at_one.as_rational().unwrap());
            }
        }
        // I₁² + I₂² + I₃²: three quadratic terms with coefficient 1, cubic term gone.
        assert_eq!(c.terms().filter(|(m, _)| m.degree() == 2).count(), 3);
        assert_eq!(limit.len(), 1);
        assert_eq!(limit[&2], one);
    }

    #[test]
    fn rho_cycles() {
        let p = so3(CoeffDomain::generic());
        assert_eq!(rho_apply(&p.gen(i(2, 1)).unwrap(), &p).unwrap(), p.gen(i(3, 2)).unwrap());
        let w = p.word(&[i(3, 1), i(2, 1), i(3, 2), i(3, 2)]).unwrap();
        let back = rho_apply(&rho_apply(&rho_apply(&w, &p).unwrap(), &p).unwrap(), &p).unwrap();
        assert_eq!(back, w);
    }

    #[test]
    fn rho_maps_cn_to_cn() {
        let p = so3(CoeffDomain::root_of_unity(3).unwrap());
        let c1 = cn_element(i(2, 1), 3, &p).unwrap();
        assert_eq!(rho_apply(&c1, &p).unwrap(), cn_element(i(3, 2), 3, &p).unwrap());
    }

    #[test]
    fn tilde_cn_n3_expansion() {
        let p = Presentation::build(Family::EpsSo3, CoeffDomain::generic(), Crossing::PlainBracket).unwrap();
        let t = tilde_cn(1, 3, &p).unwrap();
        let dq: RationalFunction = LaurentScalar::q_minus_q_inv().into();
        let c = dq.mul(&dq).inv().unwrap().scale(&rational(-3, 1)).mul(&RationalFunction::eps_pow(2));
        let j1 = GeneratorId::Eps(1);
        let expect = &p.gen_pow(j1, 3).unwrap() + &p.gen(j1).unwrap().scale(&p.domain().lift(&c).unwrap());
        assert_eq!(t, expect);
    }

    #[test]
    fn contraction_letter_map() {
        let eps = Presentation::build(Family::EpsSo3, CoeffDomain::generic(), Crossing::PlainBracket).unwrap();
        let iso = Presentation::build(Family::Iso(2), CoeffDomain::generic(), Crossing::PlainBracket).unwrap();
        let j2 = eps.gen(GeneratorId::Eps(2)).unwrap();
        assert_eq!(contract_to_iso2(&j2, &eps, &iso).unwrap(), iso.gen(i(2, 1)).unwrap());
        let t = tilde_cn(1, 3, &eps).unwrap();
        assert_eq!(contract_to_iso2(&t, &eps, &iso).unwrap(), iso.gen_pow(GeneratorId::Trans(1), 3).unwrap());
    }

    #[test]
    fn wrong_family_rejected() {
        let iso = Presentation::build(Family::Iso(2), CoeffDomain::generic(), Crossing::PlainBracket).unwrap();
        assert!(matches!(casimir_so3(&iso), Err(AlgebraError::WrongFamily(_))));
        let so = so3(CoeffDomain::generic());
        assert!(matches!(casimir_iso2(&so), Err(AlgebraError::WrongFamily(_))));
    }
}
