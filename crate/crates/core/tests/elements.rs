mod common;

use std::sync::LazyLock;

use common::{build, element, words};
use num_bigint::BigInt;
use proptest::prelude::*;
use qcenter_core::algebra::*;
use qcenter_core::coeffs::{CoeffDomain, LaurentScalar, Rational, RationalFunction};
use qcenter_core::elements::*;
use qcenter_core::verify::is_central;

fn i(k: u32, l: u32) -> GeneratorId {
    GeneratorId::so(k, l)
}

static EPS: LazyLock<Presentation> = LazyLock::new(|| build(Family::EpsSo3, CoeffDomain::generic()));
static SO3_EPS: LazyLock<Presentation> =
    LazyLock::new(|| build(Family::SoPrime(3), CoeffDomain::generic().with_epsilon(true)));
static SO3: LazyLock<Presentation> = LazyLock::new(|| build(Family::SoPrime(3), CoeffDomain::generic()));

/// Dickson polynomial `D_n(y)` with `D_n(t + 1/t) = t^n + t^{-n}`, coefficients by power of `y`.
fn dickson(n: usize) -> Vec<BigInt> {
    let mut prev = vec![BigInt::from(2)];
    let mut cur = vec![BigInt::from(0), BigInt::from(1)];
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let mut next = vec![BigInt::from(0); cur.len() + 1];
        for (k, c) in cur.iter().enumerate() {
            next[k + 1] += c;
        }
        for (k, c) in prev.iter().enumerate() {
            next[k] -= c;
        }
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

#[test]
fn cn_is_a_rescaled_dickson_polynomial() {
    let dq: RationalFunction = LaurentScalar::q_minus_q_inv().into();
    for n in 3..=16u32 {
        let d = dickson(n as usize);
        let cs = cn_coefficients(n).unwrap();
        assert_eq!(cs[0].1, RationalFunction::from_rational(Rational::new(1.into(), n.into())));
        let mut seen = 0;
        for (power, c) in &cs {
            assert_eq!((n - power) % 2, 0);
            let j = (n - power) / 2;
            let rescaled = c.mul(&dq.pow(2 * j as i32).unwrap()).scale(&Rational::from_integer(n.into()));
            assert_eq!(rescaled, RationalFunction::from_rational(d[*power as usize].clone().into()), "n={n} j={j}");
            seen += 1;
        }
        // every nonzero Dickson coefficient of positive degree is accounted for
        let nonzero = d.iter().skip(1).filter(|c| **c != BigInt::from(0)).count();
        assert_eq!(seen, nonzero, "n={n}");
    }
}

#[test]
fn pq_closed_forms_match_direct_products() {
    let p = &*SO3;
    let (i1, i2, i3) = (i(2, 1), i(3, 2), i(3, 1));
    for m in 0..=6 {
        let (pm, qm) = pq_polys(m).unwrap();
        let direct = p.multiply(&p.gen(i3).unwrap(), &p.gen_pow(i1, m).unwrap()).unwrap();
        let closed = &poly_in_letter(p, i1, &pm, Some(i2)).unwrap() + &poly_in_letter(p, i1, &qm, Some(i3)).unwrap();
        assert_eq!(direct, closed, "m={m}");
    }
}

#[test]
fn pq_first_values() {
    let p = &*SO3;
    let direct = p.straighten_pair(i(3, 1), i(2, 1)).unwrap();
    let (p1, q1) = pq_polys(1).unwrap();
    let lead = |g: GeneratorId| {
        direct
            .terms()
            .find(|(m, _)| m.letters().map(|x| p.id(x)).collect::<Vec<_>>().contains(&g))
            .map(|(_, c)| c.clone())
    };
    assert_eq!(lead(i(3, 2)), Some(p.domain().lift(&p1.coeff(0)).unwrap()));
    assert_eq!(q1.coeff(0), RationalFunction::zero());
    assert!(q1.coeff(1) != RationalFunction::zero());
}

#[test]
fn casimirs_are_central_for_generic_q() {
    let so3 = &*SO3;
    assert!(is_central(&casimir_so3(so3).unwrap(), so3).unwrap().central);
    let iso2 = build(Family::Iso(2), CoeffDomain::generic());
    assert!(is_central(&casimir_iso2(&iso2).unwrap(), &iso2).unwrap().central);
    assert!(matches!(casimir_so3(&iso2), Err(AlgebraError::WrongFamily(_))));
    assert!(matches!(casimir_iso2(so3), Err(AlgebraError::WrongFamily(_))));
}

#[test]
fn cn_commutes_with_disjoint_and_overlapping_generators() {
    for n in 3..=4 {
        let p = build(Family::SoPrime(4), CoeffDomain::root_of_unity(n).unwrap());
        let c21 = cn_element(i(2, 1), n, &p).unwrap();
        assert!(p.commutator(&c21, &p.gen(i(4, 3)).unwrap()).unwrap().is_zero());
        let c32 = cn_element(i(3, 2), n, &p).unwrap();
        for g in [i(2, 1), i(4, 3)] {
            assert!(p.commutator(&c32, &p.gen(g).unwrap()).unwrap().is_zero(), "n={n} {g}");
        }
    }
}

#[test]
fn contraction_of_tilde_elements() {
    for n in 3..=5 {
        let eps = build(Family::EpsSo3, CoeffDomain::root_of_unity(n).unwrap());
        let iso = build(Family::Iso(2), CoeffDomain::root_of_unity(n).unwrap());
        let t1 = contract_to_iso2(&tilde_cn(1, n, &eps).unwrap(), &eps, &iso).unwrap();
        assert_eq!(t1, iso.gen_pow(GeneratorId::Trans(1), n).unwrap());
        let t2 = contract_to_iso2(&tilde_cn(3, n, &eps).unwrap(), &eps, &iso).unwrap();
        assert_eq!(t2, iso.gen_pow(GeneratorId::Trans(2), n).unwrap());
        let c = contract_to_iso2(&tilde_cn(2, n, &eps).unwrap(), &eps, &iso).unwrap();
        assert_eq!(c, cn_element(i(2, 1), n, &iso).unwrap());
    }
}

#[test]
fn tilde_elements_need_the_eps_algebra() {
    let so3 = build(Family::SoPrime(3), CoeffDomain::root_of_unity(3).unwrap());
    assert!(matches!(tilde_cn(1, 3, &so3), Err(AlgebraError::WrongFamily(_))));
    let eps = build(Family::EpsSo3, CoeffDomain::root_of_unity(3).unwrap());
    assert!(matches!(tilde_cn(4, 3, &eps), Err(AlgebraError::UnknownLetter(_))));
    assert!(matches!(tilde_cn(1, 2, &eps), Err(AlgebraError::UnsupportedN(2))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn eps_iso_is_multiplicative(a in words(&EPS, 3), b in words(&EPS, 3)) {
        let (s, t) = (&*EPS, &*SO3_EPS);
        let (a, b) = (element(s, &a), element(s, &b));
        let lhs = eps_iso(&s.multiply(&a, &b).unwrap(), s, t).unwrap();
        let rhs = t.multiply(&eps_iso(&a, s, t).unwrap(), &eps_iso(&b, s, t).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn rho_is_an_automorphism_of_order_three(a in words(&SO3, 3), b in words(&SO3, 3)) {
        let p = &*SO3;
        let (a, b) = (element(p, &a), element(p, &b));
        let lhs = rho_apply(&p.multiply(&a, &b).unwrap(), p).unwrap();
        let rhs = p.multiply(&rho_apply(&a, p).unwrap(), &rho_apply(&b, p).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        let thrice = rho_apply(&rho_apply(&rho_apply(&a, p).unwrap(), p).unwrap(), p).unwrap();
        prop_assert_eq!(thrice, a);
    }

    #[test]
    fn contraction_is_multiplicative(a in words(&EPS, 3), b in words(&EPS, 3)) {
        let s = &*EPS;
        let iso = build(Family::Iso(2), CoeffDomain::generic());
        let (a, b) = (element(s, &a), element(s, &b));
        let lhs = contract_to_iso2(&s.multiply(&a, &b).unwrap(), s, &iso);
        let x = contract_to_iso2(&a, s, &iso);
        let y = contract_to_iso2(&b, s, &iso);
        // elements with ε in a denominator have no limit
        if let (Ok(l), Ok(x), Ok(y)) = (lhs, x, y) {
            prop_assert_eq!(l, iso.multiply(&x, &y).unwrap());
        }
    }
}
