mod common;

use std::collections::BTreeMap;
use std::sync::LazyLock;

use common::{build, element, words};
use proptest::prelude::*;
use qcenter_core::algebra::*;
use qcenter_core::coeffs::{rational, CoeffDomain, Rational, Scalar};
use qcenter_core::par::Exec;
use qcenter_core::verify::{strategy_oracle, Strategy as Reduce};

static SO4: LazyLock<Presentation> = LazyLock::new(|| build(Family::SoPrime(4), CoeffDomain::generic()));
static ISO3: LazyLock<Presentation> = LazyLock::new(|| build(Family::Iso(3), CoeffDomain::generic()));
static EPS5: LazyLock<Presentation> = LazyLock::new(|| build(Family::EpsSo3, CoeffDomain::root_of_unity(5).unwrap()));
static SO5_ROOT: LazyLock<Presentation> =
    LazyLock::new(|| build(Family::SoPrime(5), CoeffDomain::root_of_unity(4).unwrap()));

fn all() -> [&'static Presentation; 4] {
    [&SO4, &ISO3, &EPS5, &SO5_ROOT]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplication_is_associative(
        (idx, a, b, c) in (0usize..4).prop_flat_map(|i| {
            let p = all()[i];
            (Just(i), words(p, 3), words(p, 3), words(p, 3))
        })
    ) {
        let p = all()[idx];
        let (a, b, c) = (element(p, &a), element(p, &b), element(p, &c));
        let left = p.multiply(&p.multiply(&a, &b).unwrap(), &c).unwrap();
        let right = p.multiply(&a, &p.multiply(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn so4_associativity(a in words(&SO4, 3), b in words(&SO4, 3), c in words(&SO4, 3)) {
        let p = &*SO4;
        let (a, b, c) = (element(p, &a), element(p, &b), element(p, &c));
        let left = p.multiply(&p.multiply(&a, &b).unwrap(), &c).unwrap();
        let right = p.multiply(&a, &p.multiply(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn iso3_distributivity(a in words(&ISO3, 3), b in words(&ISO3, 3), c in words(&ISO3, 3)) {
        let p = &*ISO3;
        let (a, b, c) = (element(p, &a), element(p, &b), element(p, &c));
        let left = p.multiply(&a, &(&b + &c)).unwrap();
        let right = &p.multiply(&a, &b).unwrap() + &p.multiply(&a, &c).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn unit_and_filtration(idx in 0usize..4, w in prop::collection::vec(0usize..100, 0..=6)) {
        let p = all()[idx];
        let letters = p.letters();
        let word: Vec<GeneratorId> = w.into_iter().map(|i| letters[i % letters.len()]).collect();
        let nf = p.word(&word).unwrap();
        prop_assert!(nf.degree().unwrap_or(0) as usize <= word.len());
        prop_assert_eq!(p.multiply(&p.one(), &nf).unwrap(), nf.clone());
        prop_assert_eq!(p.multiply(&nf, &p.one()).unwrap(), nf.clone());
        // normal forms are fixed points
        let again: Vec<(Scalar, Vec<GeneratorId>)> = nf
            .terms()
            .map(|(m, c)| (c.clone(), m.letters().map(|x| p.id(x)).collect()))
            .collect();
        prop_assert_eq!(p.normal_form(&again).unwrap(), nf);
    }

    #[test]
    fn reduction_strategy_is_irrelevant(w in prop::collection::vec(0usize..6, 0..=6), seed in any::<u64>()) {
        let p = &*SO4;
        let word: Vec<GeneratorId> = w.into_iter().map(|i| p.letters()[i]).collect();
        let nf = p.word(&word).unwrap();
        for s in [Reduce::Leftmost, Reduce::Rightmost, Reduce::Random(seed)] {
            prop_assert_eq!(strategy_oracle(&word, p, s).unwrap(), nf.clone());
        }
    }

    #[test]
    fn sequential_matches_parallel(a in words(&SO4, 4), b in words(&SO4, 4)) {
        let p = &*SO4;
        let (a, b) = (element(p, &a), element(p, &b));
        prop_assert_eq!(p.multiply_with(&a, &b, Exec::Sequential).unwrap(), p.multiply_with(&a, &b, Exec::Parallel).unwrap());
    }
}

/// Structure constants `[X, Y]` of the `q = 1` limit, read off the rules.
fn classical_brackets(p: &Presentation) -> BTreeMap<(GeneratorId, GeneratorId), BTreeMap<GeneratorId, Rational>> {
    let one = Rational::from_integer(1.into());
    let mut out = BTreeMap::new();
    for rule in p.rules() {
        let (x, y) = rule.left;
        let mut linear = BTreeMap::new();
        for (m, c) in rule.right.terms() {
            let Scalar::Generic(f) = c else { unreachable!() };
            let v = f.eval_s(&one).unwrap().as_rational().unwrap();
            let word: Vec<GeneratorId> = m.letters().map(|l| p.id(l)).collect();
            match word.as_slice() {
                [a, b] if *a == y && *b == x => {
                    assert_eq!(v, one, "{x}{y}: reordered term must survive with coefficient 1")
                }
                [g] => {
                    // XY = YX + c g, so [X, Y] = c g
                    if v != Rational::from_integer(0.into()) {
                        linear.insert(*g, v);
                    }
                }
                _ => {
                    assert_eq!(v, Rational::from_integer(0.into()), "{x}{y}: quadratic correction must vanish at q = 1")
                }
            }
        }
        let neg: BTreeMap<_, _> = linear.iter().map(|(g, v)| (*g, -v.clone())).collect();
        out.insert((x, y), linear);
        out.insert((y, x), neg);
    }
    out
}

#[test]
fn classical_limit_is_a_lie_algebra() {
    for family in
        [Family::SoPrime(3), Family::SoPrime(4), Family::SoPrime(5), Family::Iso(2), Family::Iso(3), Family::Iso(4)]
    {
        let p = build(family, CoeffDomain::generic());
        let br = classical_brackets(&p);
        let bracket = |x: GeneratorId, y: GeneratorId| br.get(&(x, y)).cloned().unwrap_or_default();
        let nested = |x, y, z| {
            let mut acc: BTreeMap<GeneratorId, Rational> = BTreeMap::new();
            for (g, c) in bracket(y, z) {
                for (h, d) in bracket(x, g) {
                    *acc.entry(h).or_insert_with(|| Rational::from_integer(0.into())) += &c * &d;
                }
            }
            acc
        };
        let letters = p.letters();
        for &x in letters {
            for &y in letters {
                for &z in letters {
                    let mut total: BTreeMap<GeneratorId, Rational> = BTreeMap::new();
                    for part in [nested(x, y, z), nested(y, z, x), nested(z, x, y)] {
                        for (g, c) in part {
                            *total.entry(g).or_insert_with(|| Rational::from_integer(0.into())) += c;
                        }
                    }
                    assert!(
                        total.values().all(|v| *v == Rational::from_integer(0.into())),
                        "{family}: Jacobi fails at {x},{y},{z}"
                    );
                }
            }
        }
    }
}

#[test]
fn so3_classical_brackets() {
    let p = build(Family::SoPrime(3), CoeffDomain::generic());
    let br = classical_brackets(&p);
    let (i1, i2, i3) = (GeneratorId::so(2, 1), GeneratorId::so(3, 2), GeneratorId::so(3, 1));
    // I32 I21 -> I21 I32 - I31 at q = 1
    assert_eq!(br[&(i2, i1)], BTreeMap::from([(i3, rational(-1, 1))]));
    assert_eq!(br[&(i3, i2)], BTreeMap::from([(i1, rational(-1, 1))]));
    assert_eq!(br[&(i3, i1)], BTreeMap::from([(i2, rational(1, 1))]));
}

#[test]
fn eps_algebra_at_one_is_so3() {
    let eps = build(Family::EpsSo3, CoeffDomain::generic());
    let so3 = build(Family::SoPrime(3), CoeffDomain::generic());
    let one = Rational::from_integer(1.into());
    let rename = |g: GeneratorId| match g {
        GeneratorId::Eps(1) => GeneratorId::so(2, 1),
        GeneratorId::Eps(2) => GeneratorId::so(3, 2),
        _ => GeneratorId::so(3, 1),
    };
    for rule in eps.rules() {
        let (x, y) = rule.left;
        let target = so3.straighten_pair(rename(x), rename(y)).unwrap();
        let mut image = so3.zero();
        for (m, c) in rule.right.terms() {
            let c = c.eval_epsilon(&one).unwrap();
            let w: Vec<GeneratorId> = m.letters().map(|l| rename(eps.id(l))).collect();
            image = &image + &so3.word(&w).unwrap().scale(&c);
        }
        assert_eq!(image, target, "{x}{y}");
    }
}

#[test]
fn unknown_letters_and_mismatches() {
    let p = build(Family::SoPrime(3), CoeffDomain::generic());
    assert!(matches!(p.gen(GeneratorId::so(4, 1)), Err(AlgebraError::UnknownLetter(_))));
    assert!(matches!(p.gen(GeneratorId::Trans(1)), Err(AlgebraError::UnknownLetter(_))));
    let q = build(Family::SoPrime(4), CoeffDomain::generic());
    let a = q.gen(GeneratorId::so(2, 1)).unwrap();
    assert!(matches!(p.multiply(&a, &a), Err(AlgebraError::DomainMismatch)));
    assert!(matches!(
        Presentation::build(Family::SoPrime(2), CoeffDomain::generic(), Crossing::PlainBracket),
        Err(AlgebraError::UnsupportedRank { .. })
    ));
    assert!(matches!(
        p.straighten_pair(GeneratorId::so(2, 1), GeneratorId::so(3, 2)),
        Err(AlgebraError::NotOutOfOrder(..))
    ));
}
