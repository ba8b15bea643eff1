use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use dashmap::DashMap;

use super::element::AlgebraElement;
use super::generator::GeneratorId;
use super::monomial::{Letter, Monomial};
use super::AlgebraError;
use crate::coeffs::{CoeffDomain, DomainKind, Scalar};

/// Which algebra is presented.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `U'_q(so_m)`, `m >= 3`.
    SoPrime(u32),
    /// `U_q(iso_m)`, `m >= 2`.
    Iso(u32),
    /// `U'_{q,ε}(so_3)` on `J_1, J_2, J_3`.
    EpsSo3,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::SoPrime(m) => write!(f, "so:{m}"),
            Family::Iso(m) => write!(f, "iso:{m}"),
            Family::EpsSo3 => write!(f, "eps-so:3"),
        }
    }
}

/// How the crossing relation `k > n > l > r` between `I_{kl}` and `I_{nr}` is read.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Crossing {
    /// `[I_{kl}, I_{nr}]_q = (q - q⁻¹)(I_{lr} I_{kn} - I_{kr} I_{nl})`.
    QBracket,
    /// `[I_{kl}, I_{nr}] = (q - q⁻¹)(I_{lr} I_{kn} - I_{kr} I_{nl})`.
    PlainBracket,
}

/// Cheap identity of a presentation carried by every element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PresKey {
    pub family: Family,
    pub domain: DomainKind,
    pub epsilon: bool,
    pub crossing: Crossing,
}

pub(crate) type Terms = Vec<(Monomial, Scalar)>;

/// A straightening rule `X·Y → right` for an out-of-order pair `X > Y`.
#[derive(Clone, Debug)]
pub struct RewriteRule {
    pub left: (GeneratorId, GeneratorId),
    pub right: AlgebraElement,
}

/// An algebra together with its complete table of straightening rules.
///
/// The memo tables only cache products that are already determined by the
/// rules, so a presentation behaves as an immutable value and can be shared
/// across threads.
pub struct Presentation {
    pub(crate) key: PresKey,
    pub(crate) domain: CoeffDomain,
    pub(crate) letters: Vec<GeneratorId>,
    index: HashMap<GeneratorId, Letter>,
    pub(crate) rules: Vec<Option<Arc<Terms>>>,
    generators: Vec<Letter>,
    pub(crate) letter_memo: DashMap<(Letter, Monomial), Arc<Terms>>,
    pub(crate) mono_memo: DashMap<(Monomial, Monomial), Arc<Terms>>,
}

impl fmt::Debug for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Presentation")
            .field("family", &self.key.family)
            .field("domain", &self.domain)
            .field("crossing", &self.key.crossing)
            .field("letters", &self.letters.len())
            .finish()
    }
}

type RuleTerms = Vec<(Scalar, Vec<GeneratorId>)>;

struct RuleBuilder<'a> {
    d: &'a CoeffDomain,
    crossing: Crossing,
}

impl RuleBuilder<'_> {
    fn s(&self, k: i32) -> Scalar {
        self.d.s_pow(k)
    }

    fn neg_s(&self, k: i32) -> Scalar {
        -&self.d.s_pow(k)
    }

    fn so_pair(&self, (a, b): (u32, u32), (c, e): (u32, u32)) -> RuleTerms {
        let x = GeneratorId::so(a, b);
        let y = GeneratorId::so(c, e);
        let mut idx = vec![a, b, c, e];
        idx.sort_unstable_by(|p, q| q.cmp(p));
        idx.dedup();
        if idx.len() == 3 {
            // Shared index: K > L > N with I_{LN} < I_{KL} < I_{KN}.
            let (kk, ll, nn) = (idx[0], idx[1], idx[2]);
            let lo = GeneratorId::so(ll, nn);
            let mid = GeneratorId::so(kk, ll);
            let hi = GeneratorId::so(kk, nn);
            return if (x, y) == (mid, lo) {
                vec![(self.s(2), vec![lo, mid]), (self.neg_s(1), vec![hi])]
            } else if (x, y) == (hi, lo) {
                vec![(self.s(-2), vec![lo, hi]), (self.s(-1), vec![mid])]
            } else {
                debug_assert_eq!((x, y), (hi, mid));
                vec![(self.s(2), vec![mid, hi]), (self.neg_s(1), vec![lo])]
            };
        }
        // Disjoint indices; x > y forces a > c.
        let (k, l, n, r) = (a, b, c, e);
        if l > n || r > l {
            return vec![(self.d.one(), vec![y, x])];
        }
        // Crossing k > n > l > r. The second lower product I_{kr} I_{nl} is a
        // nested pair and is already written commuted.
        let dq = self.d.q_minus_q_inv();
        let (main, lower) = match self.crossing {
            Crossing::PlainBracket => (self.d.one(), dq),
            Crossing::QBracket => (self.s(-2), &self.s(-1) * &dq),
        };
        vec![
            (main, vec![y, x]),
            (lower.clone(), vec![GeneratorId::so(l, r), GeneratorId::so(k, n)]),
            (-&lower, vec![GeneratorId::so(n, l), GeneratorId::so(k, r)]),
        ]
    }

    fn trans_so(&self, t: u32, (b, c): (u32, u32)) -> RuleTerms {
        let x = GeneratorId::Trans(t);
        let y = GeneratorId::so(b, c);
        if t == b {
            vec![(self.s(2), vec![y, x]), (self.neg_s(1), vec![GeneratorId::Trans(c)])]
        } else if t == c {
            vec![(self.s(-2), vec![y, x]), (self.s(-1), vec![GeneratorId::Trans(b)])]
        } else if t > b || c > t {
            vec![(self.d.one(), vec![y, x])]
        } else {
            // b > t > c; both lower products are commuting pairs, written sorted.
            let dq = self.d.q_minus_q_inv();
            vec![
                (self.d.one(), vec![y, x]),
                (dq.clone(), vec![GeneratorId::so(t, c), GeneratorId::Trans(b)]),
                (-&dq, vec![GeneratorId::so(b, t), GeneratorId::Trans(c)]),
            ]
        }
    }

    fn eps_pair(&self, i: u32, j: u32) -> Result<RuleTerms, AlgebraError> {
        let jj = GeneratorId::Eps;
        Ok(match (i, j) {
            (2, 1) => vec![(self.s(2), vec![jj(1), jj(2)]), (self.neg_s(1), vec![jj(3)])],
            (3, 1) => {
                let c = &self.s(-1) * &self.d.eps_pow(2)?;
                vec![(self.s(-2), vec![jj(1), jj(3)]), (c, vec![jj(2)])]
            }
            (3, 2) => vec![(self.s(2), vec![jj(2), jj(3)]), (self.neg_s(1), vec![jj(1)])],
            _ => unreachable!("J letters are 1..=3"),
        })
    }

    fn rule(&self, x: GeneratorId, y: GeneratorId) -> Result<RuleTerms, AlgebraError> {
        use GeneratorId::*;
        Ok(match (x, y) {
            (So { k, l }, So { k: n, l: r }) => self.so_pair((k, l), (n, r)),
            (Trans(t), So { k, l }) => self.trans_so(t, (k, l)),
            (Trans(_), Trans(_)) => vec![(self.s(-2), vec![y, x])],
            (Eps(i), Eps(j)) => self.eps_pair(i, j)?,
            _ => unreachable!("letter kinds never mix out of order"),
        })
    }
}

impl Presentation {
    pub fn build(family: Family, domain: CoeffDomain, crossing: Crossing) -> Result<Self, AlgebraError> {
        let mut domain = domain;
        let mut letters = Vec::new();
        let mut generators = Vec::new();
        let so_letters = |m: u32, letters: &mut Vec<GeneratorId>, gens: &mut Vec<GeneratorId>| {
            for k in 2..=m {
                for l in (1..k).rev() {
                    letters.push(GeneratorId::so(k, l));
                }
                gens.push(GeneratorId::so(k, k - 1));
            }
        };
        match family {
            Family::SoPrime(m) => {
                if m < 3 {
                    return Err(AlgebraError::UnsupportedRank { family, m });
                }
                so_letters(m, &mut letters, &mut generators);
            }
            Family::Iso(m) => {
                if m < 2 {
                    return Err(AlgebraError::UnsupportedRank { family, m });
                }
                so_letters(m, &mut letters, &mut generators);
                letters.extend((1..=m).map(GeneratorId::Trans));
                generators.push(GeneratorId::Trans(m));
            }
            Family::EpsSo3 => {
                domain = domain.with_epsilon(true);
                letters.extend((1..=3).map(GeneratorId::Eps));
                generators.extend([GeneratorId::Eps(1), GeneratorId::Eps(2)]);
            }
        }
        debug_assert!(letters.windows(2).all(|w| w[0] < w[1]));
        let index: HashMap<GeneratorId, Letter> =
            letters.iter().enumerate().map(|(i, &g)| (g, Letter(i as u16))).collect();
        let key = PresKey { family, domain: domain.kind(), epsilon: domain.has_epsilon(), crossing };

        let n = letters.len();
        let mut rules = vec![None; n * n];
        let builder = RuleBuilder { d: &domain, crossing };
        for (xi, &x) in letters.iter().enumerate() {
            for (yi, &y) in letters.iter().enumerate().take(xi) {
                let mut terms: Terms = Vec::new();
                for (c, word) in builder.rule(x, y)? {
                    let w: Vec<Letter> = word.iter().map(|g| index[g]).collect();
                    let m = Monomial::from_sorted_word(&w).expect("rule right-hand sides are written in PBW order");
                    terms.push((m, c));
                }
                rules[xi * n + yi] = Some(Arc::new(terms));
            }
        }
        let generators = generators.iter().map(|g| index[g]).collect();
        Ok(Self {
            key,
            domain,
            letters,
            index,
            rules,
            generators,
            letter_memo: DashMap::new(),
            mono_memo: DashMap::new(),
        })
    }

    pub fn key(&self) -> PresKey {
        self.key
    }

    pub fn family(&self) -> Family {
        self.key.family
    }

    pub fn crossing(&self) -> Crossing {
        self.key.crossing
    }

    pub fn domain(&self) -> &CoeffDomain {
        &self.domain
    }

    /// The PBW alphabet in order.
    pub fn letters(&self) -> &[GeneratorId] {
        &self.letters
    }

    pub fn letter(&self, g: GeneratorId) -> Result<Letter, AlgebraError> {
        self.index.get(&g).copied().ok_or(AlgebraError::UnknownLetter(g.to_string()))
    }

    pub fn id(&self, x: Letter) -> GeneratorId {
        self.letters[x.0 as usize]
    }

    /// The algebra generators: `I_{k,k-1}`, then `T_m` for `Iso`, or `J_1, J_2`.
    pub fn generators(&self) -> Vec<GeneratorId> {
        self.generators.iter().map(|&x| self.id(x)).collect()
    }

    pub(crate) fn rule_terms(&self, x: Letter, y: Letter) -> Option<&Arc<Terms>> {
        self.rules[x.0 as usize * self.letters.len() + y.0 as usize].as_ref()
    }

    pub fn rules(&self) -> Vec<RewriteRule> {
        let n = self.letters.len();
        let mut out = Vec::new();
        for xi in 0..n {
            for yi in 0..xi {
                let terms = self.rule_terms(Letter(xi as u16), Letter(yi as u16)).unwrap();
                out.push(RewriteRule {
                    left: (self.letters[xi], self.letters[yi]),
                    right: AlgebraElement::from_terms(self.key, terms.iter().cloned()),
                });
            }
        }
        out
    }

    /// Drops memoized products (used by benchmarks to measure cold runs).
    pub fn clear_memo(&self) {
        self.letter_memo.clear();
        self.mono_memo.clear();
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement::zero(self.key)
    }

    pub fn scalar(&self, c: Scalar) -> AlgebraElement {
        AlgebraElement::from_terms(self.key, [(Monomial::one(), c)])
    }

    pub fn one(&self) -> AlgebraElement {
        self.scalar(self.domain.one())
    }

    pub fn gen(&self, g: GeneratorId) -> Result<AlgebraElement, AlgebraError> {
        self.gen_pow(g, 1)
    }

    pub fn gen_pow(&self, g: GeneratorId, e: u32) -> Result<AlgebraElement, AlgebraError> {
        let x = self.letter(g)?;
        Ok(AlgebraElement::from_terms(self.key, [(Monomial::power(x, e), self.domain.one())]))
    }

    pub fn check_key(&self, a: &AlgebraElement) -> Result<(), AlgebraError> {
        if a.key() != self.key {
            return Err(AlgebraError::DomainMismatch);
        }
        Ok(())
    }
}
