use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{AlgebraElement, AlgebraError, GeneratorId, Letter, Monomial, Presentation};
use crate::coeffs::Scalar;
use crate::par::{self, Exec};

/// Which out-of-order adjacent pair to rewrite next.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
    Random(u64),
}

/// Reduces a word by rewriting flat words one adjacent pair at a time,
/// without the memoized engine. Agreement with [`Presentation::word`] for
/// every strategy is the PBW uniqueness claim.
pub fn strategy_oracle(
    word: &[GeneratorId],
    pres: &Presentation,
    strategy: Strategy,
) -> Result<AlgebraElement, AlgebraError> {
    let start: Vec<Letter> = word.iter().map(|&g| pres.letter(g)).collect::<Result<_, _>>()?;
    let rules: BTreeMap<(Letter, Letter), Vec<(Vec<Letter>, Scalar)>> = pres
        .rules()
        .into_iter()
        .map(|r| {
            let key = (pres.letter(r.left.0).unwrap(), pres.letter(r.left.1).unwrap());
            let rhs = r.right.terms().map(|(m, c)| (m.to_word(), c.clone())).collect();
            (key, rhs)
        })
        .collect();
    let mut rng = match strategy {
        Strategy::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };

    let mut pending: BTreeMap<Vec<Letter>, Scalar> = BTreeMap::new();
    pending.insert(start, pres.domain().one());
    let mut done: BTreeMap<Vec<Letter>, Scalar> = BTreeMap::new();
    while let Some((w, c)) = pending.pop_first() {
        let descents: Vec<usize> = (0..w.len().saturating_sub(1)).filter(|&i| w[i] > w[i + 1]).collect();
        if descents.is_empty() {
            add(&mut done, w, c);
            continue;
        }
        let at = match (strategy, rng.as_mut()) {
            (Strategy::Leftmost, _) => descents[0],
            (Strategy::Rightmost, _) => *descents.last().unwrap(),
            (_, Some(rng)) => descents[rng.gen_range(0..descents.len())],
            _ => unreachable!(),
        };
        for (mid, k) in &rules[&(w[at], w[at + 1])] {
            let mut next = w[..at].to_vec();
            next.extend_from_slice(mid);
            next.extend_from_slice(&w[at + 2..]);
            add(&mut pending, next, &c * k);
        }
    }
    let terms = done.into_iter().map(|(w, c)| (Monomial::from_sorted_word(&w).expect("sorted"), c));
    Ok(AlgebraElement::from_terms(pres.key(), terms))
}

fn add(map: &mut BTreeMap<Vec<Letter>, Scalar>, w: Vec<Letter>, c: Scalar) {
    if let Some(prev) = map.get_mut(&w) {
        let sum = &*prev + &c;
        if sum.is_zero() {
            map.remove(&w);
        } else {
            *prev = sum;
        }
    } else if !c.is_zero() {
        map.insert(w, c);
    }
}

pub fn random_word(pres: &Presentation, rng: &mut impl Rng, max_degree: usize) -> Vec<GeneratorId> {
    let letters = pres.letters();
    let len = rng.gen_range(0..=max_degree);
    (0..len).map(|_| letters[rng.gen_range(0..letters.len())]).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleMismatch {
    pub word: Vec<GeneratorId>,
    pub strategy: Strategy,
    pub oracle: AlgebraElement,
    pub engine: AlgebraElement,
}

/// Compares the engine with the oracle on `count` random words of degree
/// `<= max_degree`. Each word gets its own random strategy seed drawn from `seed`.
pub fn pbw_oracle_sweep(
    pres: &Presentation,
    count: usize,
    max_degree: usize,
    seed: u64,
    exec: Exec,
) -> Result<Vec<OracleMismatch>, AlgebraError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cases: Vec<(Vec<GeneratorId>, Strategy)> = (0..count)
        .map(|i| {
            let w = random_word(pres, &mut rng, max_degree);
            let strategy = match i % 3 {
                0 => Strategy::Leftmost,
                1 => Strategy::Rightmost,
                _ => Strategy::Random(rng.gen()),
            };
            (w, strategy)
        })
        .collect();
    let results = par::map(exec, &cases, |(w, strategy)| -> Result<Option<OracleMismatch>, AlgebraError> {
        let oracle = strategy_oracle(w, pres, *strategy)?;
        let engine = pres.word(w)?;
        Ok((oracle != engine).then(|| OracleMismatch { word: w.clone(), strategy: *strategy, oracle, engine }))
    });
    let mut out = Vec::new();
    for r in results {
        out.extend(r?);
    }
    Ok(out)
}
