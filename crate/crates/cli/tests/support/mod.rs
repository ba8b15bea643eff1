#![allow(dead_code)]

use qcenter_core::algebra::{AlgebraElement, Crossing, Family, GeneratorId, Presentation};
use qcenter_core::coeffs::{rational, CoeffDomain, DomainKind, LaurentScalar, RationalFunction, Scalar};
use qcenter_core::text::{element_from_json, element_to_json, format_text, parse_expression};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn presentations() -> Vec<Presentation> {
    let mut out = Vec::new();
    for family in [Family::SoPrime(3), Family::SoPrime(4), Family::Iso(2), Family::Iso(3), Family::EpsSo3] {
        for domain in [CoeffDomain::generic(), CoeffDomain::root_of_unity(5).unwrap()] {
            out.push(Presentation::build(family, domain, Crossing::PlainBracket).unwrap());
        }
    }
    out
}

fn laurent(rng: &mut ChaCha8Rng, max_eps: u32) -> LaurentScalar {
    let n = rng.gen_range(1..4);
    LaurentScalar::from_terms((0..n).map(|_| {
        let key = (rng.gen_range(-4..=4), rng.gen_range(0..=max_eps));
        (key, rational(rng.gen_range(-9..=9), rng.gen_range(1..=5)))
    }))
}

pub fn scalar(rng: &mut ChaCha8Rng, domain: &CoeffDomain) -> Scalar {
    let max_eps = if domain.has_epsilon() { 2 } else { 0 };
    let num = RationalFunction::from(laurent(rng, max_eps));
    if let DomainKind::RootOfUnity(_) = domain.kind() {
        return domain.lift(&num).unwrap();
    }
    let minus: RationalFunction = LaurentScalar::q_minus_q_inv().into();
    let plus: RationalFunction = LaurentScalar::q_plus_q_inv().into();
    let den = minus
        .pow(rng.gen_range(0..3))
        .unwrap()
        .mul(&plus.pow(rng.gen_range(0..2)).unwrap())
        .mul(&RationalFunction::eps_pow(rng.gen_range(0..=max_eps)));
    Scalar::Generic(num.div(&den).unwrap())
}

/// A normalized sum of up to four scaled words of length at most four.
pub fn random_element(rng: &mut ChaCha8Rng, pres: &Presentation) -> AlgebraElement {
    let letters = pres.letters();
    let words: Vec<(Scalar, Vec<GeneratorId>)> = (0..rng.gen_range(0..=4))
        .map(|_| {
            let len = rng.gen_range(0..=4);
            let w = (0..len).map(|_| letters[rng.gen_range(0..letters.len())]).collect();
            (scalar(rng, pres.domain()), w)
        })
        .collect();
    pres.normal_form(&words).unwrap()
}

/// Text and JSON round trips; returns a description of the first failure.
pub fn round_trip(a: &AlgebraElement, pres: &Presentation) -> Result<(), String> {
    let text = format_text(a, pres);
    match parse_expression(&text, pres) {
        Ok(b) if &b == a => {}
        Ok(b) => return Err(format!("text: {text} reparsed as {}", format_text(&b, pres))),
        Err(e) => return Err(format!("text: {text}: {e}")),
    }
    let json = element_to_json(a, pres);
    match element_from_json(&json, pres) {
        Ok(b) if &b == a => Ok(()),
        Ok(_) => Err(format!("json: {json} changed on reparse")),
        Err(e) => Err(format!("json: {json}: {e}")),
    }
}
