//! Executable checks: centrality, defining relations, local confluence,
//! the `p_m`/`q_m` formula, the two combinatorial identities and a
//! rewrite-strategy oracle for PBW uniqueness.

mod identities;
mod oracle;
mod relations;
mod suite;

use thiserror::Error;

use crate::algebra::{AlgebraElement, AlgebraError, Crossing, Family, GeneratorId, Presentation};
use crate::coeffs::{rational, specialize_at_conductor, CoeffDomain, CoeffError, CycloElement, Scalar};
use crate::elements::{poly_in_letter, pq_polys};
use crate::par::{self, Exec};

pub use identities::{
    check_identity_a, check_identity_b, identity_a_sides, identity_b_sides, sweep_identity_a, sweep_identity_b,
    IdentityFailure,
};
pub use oracle::{pbw_oracle_sweep, random_word, strategy_oracle, OracleMismatch, Strategy};
pub use relations::{check_relations, eps_iso_images_hold, eps_relation_words, Relation};
pub use suite::{report_json, run_checks, CheckKind, ClaimReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("parameters {params:?} outside the range of identity {identity}")]
    Range { identity: char, params: (u32, u32, u32) },
    #[error("factorial of {arg} at {params:?} in identity {identity}")]
    NegativeFactorial { identity: char, params: (u32, u32, u32), arg: i64 },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl From<CoeffError> for VerifyError {
    fn from(e: CoeffError) -> Self {
        VerifyError::Algebra(e.into())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralityVerdict {
    pub central: bool,
    pub witness: Option<(GeneratorId, AlgebraElement)>,
}

pub fn is_central(a: &AlgebraElement, pres: &Presentation) -> Result<CentralityVerdict, AlgebraError> {
    is_central_with(a, pres, Exec::default())
}

/// Commutes `a` with every algebra generator; the witness is the first
/// nonzero commutator in generator order.
pub fn is_central_with(a: &AlgebraElement, pres: &Presentation, exec: Exec) -> Result<CentralityVerdict, AlgebraError> {
    pres.check_key(a)?;
    let gens = pres.generators();
    let comms = par::map(exec, &gens, |&g| -> Result<AlgebraElement, AlgebraError> {
        let x = pres.gen(g)?;
        Ok(&pres.multiply_with(a, &x, exec)? - &pres.multiply_with(&x, a, exec)?)
    });
    for (g, c) in gens.into_iter().zip(comms) {
        let c = c?;
        if !c.is_zero() {
            return Ok(CentralityVerdict { central: false, witness: Some((g, c)) });
        }
    }
    Ok(CentralityVerdict { central: true, witness: None })
}

/// A critical overlap `X·Y·Z` whose two reductions disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OverlapFailure {
    pub word: [GeneratorId; 3],
    pub left: AlgebraElement,
    pub right: AlgebraElement,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfluenceReport {
    pub confluent: bool,
    pub overlaps: usize,
    pub failures: Vec<OverlapFailure>,
}

pub fn check_local_confluence(pres: &Presentation) -> Result<ConfluenceReport, AlgebraError> {
    check_local_confluence_with(pres, Exec::default())
}

/// Resolves every overlap `X > Y > Z` as `(XY)Z` and `X(YZ)`.
///
/// The rules are quadratic, so these are all the critical pairs.
pub fn check_local_confluence_with(pres: &Presentation, exec: Exec) -> Result<ConfluenceReport, AlgebraError> {
    let letters = pres.letters();
    let mut triples = Vec::new();
    for (xi, &x) in letters.iter().enumerate() {
        for (yi, &y) in letters.iter().enumerate().take(xi) {
            for &z in letters.iter().take(yi) {
                triples.push([x, y, z]);
            }
        }
    }
    let results = par::map(exec, &triples, |&[x, y, z]| -> Result<Option<OverlapFailure>, AlgebraError> {
        let left = pres.multiply_with(&pres.straighten_pair(x, y)?, &pres.gen(z)?, Exec::Sequential)?;
        let right = pres.multiply_with(&pres.gen(x)?, &pres.straighten_pair(y, z)?, Exec::Sequential)?;
        Ok((left != right).then_some(OverlapFailure { word: [x, y, z], left, right }))
    });
    let mut failures = Vec::new();
    for r in results {
        failures.extend(r?);
    }
    Ok(ConfluenceReport { confluent: failures.is_empty(), overlaps: triples.len(), failures })
}

/// Outcome of building one crossing variant of `SoPrime(m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariantOutcome {
    pub crossing: Crossing,
    pub confluence_failures: usize,
    pub nonzero_residuals: Vec<String>,
}

impl VariantOutcome {
    pub fn sound(&self) -> bool {
        self.confluence_failures == 0 && self.nonzero_residuals.is_empty()
    }
}

/// Builds both readings of the crossing relation and reports which one is
/// confluent with every displayed relation satisfied.
pub fn compare_crossings(family: Family) -> Result<(Vec<VariantOutcome>, Option<Crossing>), AlgebraError> {
    let mut outcomes = Vec::new();
    for crossing in [Crossing::QBracket, Crossing::PlainBracket] {
        let pres = Presentation::build(family, CoeffDomain::generic(), crossing)?;
        let conf = check_local_confluence(&pres)?;
        let nonzero_residuals =
            check_relations(&pres)?.into_iter().filter(|r| !r.residual.is_zero()).map(|r| r.id).collect();
        outcomes.push(VariantOutcome { crossing, confluence_failures: conf.failures.len(), nonzero_residuals });
    }
    let sound: Vec<Crossing> = outcomes.iter().filter(|o| o.sound()).map(|o| o.crossing).collect();
    let winner = (sound.len() == 1).then(|| sound[0]);
    Ok((outcomes, winner))
}

/// Compares `I₃ I₁^m` with `p_m(I₁) I₂ + q_m(I₁) I₃` in a generic `U'_q(so_3)`.
pub fn check_pm_identity(m: u32, pres: &Presentation) -> Result<bool, AlgebraError> {
    pm_residual(m, pres).map(|r| r.is_zero())
}

pub fn pm_residual(m: u32, pres: &Presentation) -> Result<AlgebraElement, AlgebraError> {
    if pres.family() != Family::SoPrime(3) {
        return Err(AlgebraError::WrongFamily(pres.family()));
    }
    let (i1, i2, i3) = (GeneratorId::so(2, 1), GeneratorId::so(3, 2), GeneratorId::so(3, 1));
    let mut word = vec![i3];
    word.extend(std::iter::repeat_n(i1, m as usize));
    let lhs = pres.word(&word)?;
    let (p, q) = pq_polys(m)?;
    let rhs = &poly_in_letter(pres, i1, &p, Some(i2))? + &poly_in_letter(pres, i1, &q, Some(i3))?;
    Ok(&lhs - &rhs)
}

/// Nonzero terms of `[C^(2)(I₁), I₂]` at `q = -1`, computed at generic `q`
/// and then specialized at `s = i`.
pub fn n2_commutator() -> Result<Vec<(Vec<GeneratorId>, CycloElement)>, AlgebraError> {
    let pres = Presentation::build(Family::SoPrime(3), CoeffDomain::generic(), Crossing::PlainBracket)?;
    let half = pres.domain().rational(rational(1, 2));
    let c2 = pres.gen_pow(GeneratorId::so(2, 1), 2)?.scale(&half);
    let comm = pres.commutator(&c2, &pres.gen(GeneratorId::so(3, 2))?)?;
    let mut out = Vec::new();
    for (m, c) in comm.terms() {
        let Scalar::Generic(f) = c else { unreachable!("generic presentation") };
        let v = specialize_at_conductor(f, 4)?;
        if !v.is_zero() {
            out.push((m.letters().map(|x| pres.id(x)).collect(), v));
        }
    }
    Ok(out)
}
