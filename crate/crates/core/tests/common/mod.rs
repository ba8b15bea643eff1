#![allow(dead_code)]

use proptest::prelude::*;
use qcenter_core::algebra::{AlgebraElement, Crossing, Family, GeneratorId, Presentation};
use qcenter_core::coeffs::{rational, CoeffDomain, LaurentScalar, RationalFunction, Scalar};

pub fn build(family: Family, domain: CoeffDomain) -> Presentation {
    Presentation::build(family, domain, Crossing::PlainBracket).unwrap()
}

pub fn laurent(max_eps: u32) -> impl Strategy<Value = LaurentScalar> {
    prop::collection::vec((-4i32..=4, 0..=max_eps, -6i64..=6, 1i64..=4), 0..4)
        .prop_map(|terms| LaurentScalar::from_terms(terms.into_iter().map(|(s, e, n, d)| ((s, e), rational(n, d)))))
}

/// Quotients by the denominators that occur in practice.
pub fn ratfunc(max_eps: u32) -> impl Strategy<Value = RationalFunction> {
    (laurent(max_eps), 0u32..3, 0u32..2, 0u32..=max_eps).prop_map(|(num, a, b, e)| {
        let minus: RationalFunction = LaurentScalar::q_minus_q_inv().into();
        let plus: RationalFunction = LaurentScalar::q_plus_q_inv().into();
        let den = minus.pow(a as i32).unwrap().mul(&plus.pow(b as i32).unwrap()).mul(&RationalFunction::eps_pow(e));
        RationalFunction::from(num).div(&den).unwrap()
    })
}

pub fn scalar_in(domain: &CoeffDomain) -> impl Strategy<Value = Scalar> {
    let d = domain.clone();
    let max_eps = if d.has_epsilon() { 2 } else { 0 };
    let generic = matches!(d.kind(), qcenter_core::coeffs::DomainKind::GenericQ);
    (laurent(max_eps), ratfunc(max_eps)).prop_map(move |(l, f)| {
        if generic {
            Scalar::Generic(f)
        } else {
            d.lift(&RationalFunction::from(l)).unwrap()
        }
    })
}

pub type Words = Vec<(Scalar, Vec<GeneratorId>)>;

/// Up to four scaled random words of length up to `max_len`.
pub fn words(pres: &Presentation, max_len: usize) -> BoxedStrategy<Words> {
    let letters: Vec<GeneratorId> = pres.letters().to_vec();
    let n = letters.len();
    prop::collection::vec((scalar_in(pres.domain()), prop::collection::vec(0..n, 0..=max_len)), 0..4)
        .prop_map(move |ws| ws.into_iter().map(|(c, w)| (c, w.into_iter().map(|i| letters[i]).collect())).collect())
        .boxed()
}

pub fn element(pres: &Presentation, ws: &Words) -> AlgebraElement {
    pres.normal_form(ws).unwrap()
}
