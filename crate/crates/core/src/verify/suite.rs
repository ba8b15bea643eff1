use std::str::FromStr;
use std::time::Instant;

use serde_json::{json, Value};

use super::{
    check_local_confluence_with, check_relations, is_central_with, pbw_oracle_sweep, pm_residual, sweep_identity_a,
    sweep_identity_b, IdentityFailure,
};
use crate::algebra::{AlgebraError, Crossing, Family, GeneratorId, Presentation};
use crate::coeffs::{CoeffDomain, DomainKind};
use crate::elements::cn_element;
use crate::par::Exec;
use crate::text::format_text;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckKind {
    Relations,
    Confluence,
    Pm,
    Identities,
    Pbw,
    Center,
    All,
}

impl FromStr for CheckKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "relations" => CheckKind::Relations,
            "confluence" => CheckKind::Confluence,
            "pm" => CheckKind::Pm,
            "identities" => CheckKind::Identities,
            "pbw" => CheckKind::Pbw,
            "center" => CheckKind::Center,
            "all" => CheckKind::All,
            other => return Err(format!("unknown check '{other}'")),
        })
    }
}

/// One line of the machine-readable report.
#[derive(Clone, Debug, PartialEq)]
pub struct ClaimReport {
    pub claim: String,
    pub parameters: Value,
    pub verdict: bool,
    pub witness: Option<String>,
    pub millis: u128,
}

impl ClaimReport {
    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "claim": self.claim,
            "parameters": self.parameters,
            "verdict": self.verdict,
            "millis": self.millis,
        });
        if let Some(w) = &self.witness {
            v["witness"] = json!(w);
        }
        v
    }
}

fn timed(
    claim: &str,
    parameters: Value,
    f: impl FnOnce() -> Result<Option<String>, AlgebraError>,
) -> Result<ClaimReport, AlgebraError> {
    let start = Instant::now();
    let witness = f()?;
    Ok(ClaimReport {
        claim: claim.into(),
        parameters,
        verdict: witness.is_none(),
        witness,
        millis: start.elapsed().as_millis(),
    })
}

fn identity_witness(failures: &[IdentityFailure]) -> Option<String> {
    failures.first().map(|f| match f {
        IdentityFailure::Unequal { params, lhs, rhs } => format!("{params:?}: lhs = {lhs}, rhs = {rhs}"),
        IdentityFailure::Error(e) => e.to_string(),
    })
}

/// Runs the requested verification suites and returns one report per claim.
pub fn run_checks(
    pres: &Presentation,
    kind: CheckKind,
    seed: u64,
    exec: Exec,
) -> Result<Vec<ClaimReport>, AlgebraError> {
    let wants = |k: CheckKind| kind == k || kind == CheckKind::All;
    let family = pres.family().to_string();
    let domain = match pres.domain().kind() {
        DomainKind::GenericQ => json!("generic"),
        DomainKind::RootOfUnity(n) => json!({ "root_of_unity": n }),
    };
    let crossing = match pres.crossing() {
        Crossing::QBracket => "q",
        Crossing::PlainBracket => "plain",
    };
    let mut out = Vec::new();

    if wants(CheckKind::Relations) {
        out.push(timed("relations", json!({ "algebra": family, "domain": domain, "crossing": crossing }), || {
            let rels = check_relations(pres)?;
            Ok(rels
                .iter()
                .find(|r| !r.residual.is_zero())
                .map(|r| format!("{}: {}", r.id, format_text(&r.residual, pres))))
        })?);
    }
    if wants(CheckKind::Confluence) {
        out.push(timed(
            "local-confluence",
            json!({ "algebra": family, "domain": domain, "crossing": crossing }),
            || {
                let report = check_local_confluence_with(pres, exec)?;
                Ok(report.failures.first().map(|f| {
                    let [x, y, z] = f.word;
                    format!("{x}*{y}*{z}: {} vs {}", format_text(&f.left, pres), format_text(&f.right, pres))
                }))
            },
        )?);
    }
    if wants(CheckKind::Pm) {
        let so3 = Presentation::build(Family::SoPrime(3), CoeffDomain::generic(), pres.crossing())?;
        for m in 1..=8 {
            out.push(timed("pm-identity", json!({ "m": m }), || {
                let r = pm_residual(m, &so3)?;
                Ok((!r.is_zero()).then(|| format_text(&r, &so3)))
            })?);
        }
    }
    if wants(CheckKind::Identities) {
        out.push(timed("identity-A", json!({ "max_N": 12 }), || Ok(identity_witness(&sweep_identity_a(12).1)))?);
        out.push(timed("identity-B", json!({ "max_n": 12 }), || Ok(identity_witness(&sweep_identity_b(12).1)))?);
    }
    if wants(CheckKind::Pbw) {
        out.push(timed(
            "pbw-oracle",
            json!({ "algebra": family, "domain": domain, "words": 1000, "max_degree": 6, "seed": seed }),
            || {
                let bad = pbw_oracle_sweep(pres, 1000, 6, seed, exec)?;
                Ok(bad.first().map(|m| {
                    let w: Vec<String> = m.word.iter().map(GeneratorId::to_string).collect();
                    format!(
                        "{} ({:?}): {} vs {}",
                        w.join("*"),
                        m.strategy,
                        format_text(&m.oracle, pres),
                        format_text(&m.engine, pres)
                    )
                }))
            },
        )?);
    }
    if wants(CheckKind::Center) {
        if let DomainKind::RootOfUnity(n) = pres.domain().kind() {
            out.extend(center_claims(pres, n, exec)?);
        }
    }
    Ok(out)
}

/// The root-of-unity central elements of the family at `q = ζ_n`.
fn center_claims(pres: &Presentation, n: u32, exec: Exec) -> Result<Vec<ClaimReport>, AlgebraError> {
    let mut candidates = Vec::new();
    for &g in pres.letters() {
        match g {
            GeneratorId::So { .. } | GeneratorId::Eps(2) => {
                candidates.push((format!("C^({n})({g})"), cn_element(g, n, pres)?))
            }
            GeneratorId::Trans(_) => candidates.push((format!("{g}^{n}"), pres.gen_pow(g, n)?)),
            GeneratorId::Eps(i) => {
                candidates.push((format!("C~^({n})(J[{i}])"), crate::elements::tilde_cn(i, n, pres)?))
            }
        }
    }
    let mut out = Vec::new();
    for (name, elem) in candidates {
        out.push(timed("central", json!({ "algebra": pres.family().to_string(), "n": n, "element": name }), || {
            let v = is_central_with(&elem, pres, exec)?;
            Ok(v.witness.map(|(g, c)| format!("[x, {g}] = {}", format_text(&c, pres))))
        })?);
    }
    Ok(out)
}

pub fn report_json(reports: &[ClaimReport]) -> Value {
    Value::Array(reports.iter().map(ClaimReport::to_json).collect())
}
