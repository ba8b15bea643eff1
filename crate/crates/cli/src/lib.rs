//! Command dispatch for the `qcenter` binary.
//!
//! ```text
//! qcenter <verb> --algebra so:M|iso:M|eps-so:3 [--root-of-unity N]
//!         [--crossing q|plain] [--format text|json] [--out FILE] [EXPR…]
//! ```
//!
//! Exit codes: 0 success, 1 a verification verdict was false, 2 usage or
//! parse error.

use std::ffi::OsString;
use std::fmt;
use std::str::FromStr;

use clap::{Parser, ValueEnum};
use serde_json::{json, Value};

use qcenter_core::algebra::{AlgebraElement, Crossing, Family, GeneratorId, Presentation};
use qcenter_core::coeffs::CoeffDomain;
use qcenter_core::elements;
use qcenter_core::par::Exec;
use qcenter_core::text::{element_to_json, format_text, parse_expression, Format};
use qcenter_core::verify::{self, report_json, CheckKind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Verb {
    Normalize,
    Commutator,
    Central,
    Casimir,
    Cn,
    TildeCn,
    Contract,
    Check,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CrossingArg {
    Q,
    Plain,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Text,
    Json,
}

/// `so:M`, `iso:M` or `eps-so:3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AlgebraSpec(pub Family);

impl FromStr for AlgebraSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (name, m) = s.split_once(':').ok_or_else(|| format!("expected family:rank, got '{s}'"))?;
        let m: u32 = m.parse().map_err(|_| format!("bad rank '{m}'"))?;
        let family = match (name, m) {
            ("so", m) if m >= 3 => Family::SoPrime(m),
            ("iso", m) if m >= 2 => Family::Iso(m),
            ("eps-so", 3) => Family::EpsSo3,
            _ => return Err(format!("unsupported algebra '{s}'")),
        };
        Ok(AlgebraSpec(family))
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Debug, Parser)]
#[command(name = "qcenter", version, about = "Normal forms and central elements of U'_q(so_m) and U_q(iso_m)")]
pub struct Cli {
    pub verb: Verb,
    #[arg(long)]
    pub algebra: AlgebraSpec,
    /// Work at q a primitive N-th root of unity (N >= 3).
    #[arg(long, value_name = "N")]
    pub root_of_unity: Option<u32>,
    #[arg(long, value_enum, default_value = "plain")]
    pub crossing: CrossingArg,
    /// Output format; `check` defaults to json, everything else to text.
    #[arg(long, value_enum)]
    pub format: Option<FormatArg>,
    #[arg(long, value_name = "FILE")]
    pub out: Option<std::path::PathBuf>,
    #[arg(value_name = "EXPR")]
    pub exprs: Vec<String>,
}

/// Result of one invocation: exit code, text for stdout, text for stderr.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(msg: impl fmt::Display) -> Self {
        Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {msg}\n") }
    }
}

struct Ctx {
    cli: Cli,
    pres: Presentation,
    format: Format,
}

impl Ctx {
    fn render(&self, a: &AlgebraElement, pres: &Presentation) -> String {
        match self.format {
            Format::Text => format_text(a, pres),
            Format::Json => element_to_json(a, pres).to_string(),
        }
    }

    fn parse(&self, text: &str) -> Result<AlgebraElement, String> {
        parse_expression(text, &self.pres).map_err(|e| format!("{text}: {e}"))
    }

    fn exprs(&self, n: usize) -> Result<&[String], String> {
        if self.cli.exprs.len() != n {
            return Err(format!("{:?} takes {n} expression(s), got {}", self.cli.verb, self.cli.exprs.len()));
        }
        Ok(&self.cli.exprs)
    }

    fn root_order(&self) -> Option<u32> {
        self.cli.root_of_unity
    }
}

fn seed() -> u64 {
    std::env::var("QCENTER_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(1)
}

fn domain(root: Option<u32>) -> Result<CoeffDomain, String> {
    match root {
        None => Ok(CoeffDomain::generic()),
        Some(n) => CoeffDomain::root_of_unity(n).map_err(|e| e.to_string()),
    }
}

/// Parses the order argument of `cn`/`tilde-cn`, defaulting to the root-of-unity order.
fn order_arg(ctx: &Ctx, arg: Option<&String>) -> Result<u32, String> {
    match (arg, ctx.root_order()) {
        (Some(s), _) => s.parse().map_err(|_| format!("bad order '{s}'")),
        (None, Some(n)) => Ok(n),
        (None, None) => Err("give the order n or --root-of-unity".into()),
    }
}

fn dispatch(ctx: &Ctx) -> Result<(i32, String), String> {
    let pres = &ctx.pres;
    let err = |e: &dyn fmt::Display| e.to_string();
    match ctx.cli.verb {
        Verb::Normalize => {
            if ctx.cli.exprs.is_empty() {
                return Err("normalize needs at least one expression".into());
            }
            let mut out = String::new();
            for e in &ctx.cli.exprs {
                out += &ctx.render(&ctx.parse(e)?, pres);
                out.push('\n');
            }
            Ok((EXIT_OK, out))
        }
        Verb::Commutator => {
            let args = ctx.exprs(2)?;
            let (a, b) = (ctx.parse(&args[0])?, ctx.parse(&args[1])?);
            let c = pres.commutator(&a, &b).map_err(|e| err(&e))?;
            Ok((EXIT_OK, ctx.render(&c, pres) + "\n"))
        }
        Verb::Central => {
            let args = ctx.exprs(1)?;
            let a = ctx.parse(&args[0])?;
            let v = verify::is_central(&a, pres).map_err(|e| err(&e))?;
            let code = if v.central { EXIT_OK } else { EXIT_FALSE };
            let out = match (ctx.format, &v.witness) {
                (Format::Json, None) => json!({ "central": true }).to_string(),
                (Format::Json, Some((g, c))) => {
                    json!({ "central": false, "witness": { "generator": g.to_string(), "commutator": element_to_json(c, pres) } })
                        .to_string()
                }
                (Format::Text, None) => "central".into(),
                (Format::Text, Some((g, c))) => format!("not central: [x, {g}] = {}", format_text(c, pres)),
            };
            Ok((code, out + "\n"))
        }
        Verb::Casimir => {
            ctx.exprs(0)?;
            let c = match pres.family() {
                Family::SoPrime(3) => elements::casimir_so3(pres),
                Family::Iso(2) => elements::casimir_iso2(pres),
                other => return Err(format!("no Casimir element implemented for {other}")),
            }
            .map_err(|e| err(&e))?;
            Ok((EXIT_OK, ctx.render(&c, pres) + "\n"))
        }
        Verb::Cn => {
            let args = &ctx.cli.exprs;
            if args.is_empty() || args.len() > 2 {
                return Err("cn takes a letter and an optional order n".into());
            }
            let letter = ctx.parse(&args[0])?;
            let g = single_letter(&letter, pres).ok_or_else(|| format!("'{}' is not a PBW letter", args[0]))?;
            let n = order_arg(ctx, args.get(1))?;
            let c = elements::cn_element(g, n, pres).map_err(|e| err(&e))?;
            Ok((EXIT_OK, ctx.render(&c, pres) + "\n"))
        }
        Verb::TildeCn => {
            let args = &ctx.cli.exprs;
            if args.is_empty() || args.len() > 2 {
                return Err("tilde-cn takes an index i in 1..3 and an optional order n".into());
            }
            let i: u32 = args[0].parse().map_err(|_| format!("bad index '{}'", args[0]))?;
            let n = order_arg(ctx, args.get(1))?;
            let c = elements::tilde_cn(i, n, pres).map_err(|e| err(&e))?;
            Ok((EXIT_OK, ctx.render(&c, pres) + "\n"))
        }
        Verb::Contract => {
            let args = ctx.exprs(1)?;
            let a = ctx.parse(&args[0])?;
            let target =
                Presentation::build(Family::Iso(2), domain(ctx.root_order())?, pres.crossing()).map_err(|e| err(&e))?;
            let c = elements::contract_to_iso2(&a, pres, &target).map_err(|e| err(&e))?;
            Ok((EXIT_OK, ctx.render(&c, &target) + "\n"))
        }
        Verb::Check => {
            let kind = match ctx.cli.exprs.as_slice() {
                [] => CheckKind::All,
                [k] => k.parse()?,
                _ => return Err("check takes at most one suite name".into()),
            };
            let reports = verify::run_checks(pres, kind, seed(), Exec::default()).map_err(|e| err(&e))?;
            let code = if reports.iter().all(|r| r.verdict) { EXIT_OK } else { EXIT_FALSE };
            let out = match ctx.format {
                Format::Json => serde_json::to_string_pretty(&report_json(&reports)).unwrap(),
                Format::Text => reports
                    .iter()
                    .map(|r| {
                        let mark = if r.verdict { "ok  " } else { "FAIL" };
                        let mut line = format!("{mark} {} {} ({} ms)", r.claim, r.parameters, r.millis);
                        if let Some(w) = &r.witness {
                            line += &format!("\n     witness: {w}");
                        }
                        line
                    })
                    .collect::<Vec<_>>()
                    .join("\n"),
            };
            Ok((code, out + "\n"))
        }
    }
}

fn single_letter(a: &AlgebraElement, pres: &Presentation) -> Option<GeneratorId> {
    let mut terms = a.terms();
    let (m, c) = terms.next()?;
    if terms.next().is_some() || !c.is_one() || m.degree() != 1 {
        return None;
    }
    m.first().map(|x| pres.id(x))
}

/// Runs one command line (including the program name) to completion.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let crossing = match cli.crossing {
        CrossingArg::Q => Crossing::QBracket,
        CrossingArg::Plain => Crossing::PlainBracket,
    };
    let format = match (cli.format, cli.verb) {
        (Some(FormatArg::Text), _) => Format::Text,
        (Some(FormatArg::Json), _) | (None, Verb::Check) => Format::Json,
        (None, _) => Format::Text,
    };
    let pres = match domain(cli.root_of_unity)
        .and_then(|d| Presentation::build(cli.algebra.0, d, crossing).map_err(|e| e.to_string()))
    {
        Ok(p) => p,
        Err(e) => return Outcome::usage(e),
    };
    let ctx = Ctx { cli, pres, format };
    match dispatch(&ctx) {
        Ok((code, text)) => match &ctx.cli.out {
            Some(path) => match std::fs::write(path, &text) {
                Ok(()) => Outcome { code, ..Outcome::default() },
                Err(e) => Outcome::usage(format!("{}: {e}", path.display())),
            },
            None => Outcome { code, stdout: text, stderr: String::new() },
        },
        Err(e) => Outcome::usage(e),
    }
}

/// Parses a JSON report produced by `check --format json` back into values.
pub fn parse_report(text: &str) -> Option<Vec<Value>> {
    match serde_json::from_str::<Value>(text).ok()? {
        Value::Array(items) => Some(items),
        _ => None,
    }
}
