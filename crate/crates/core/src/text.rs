//! Surface syntax for elements: a small expression parser and the canonical
//! text and JSON printers.
//!
//! Grammar:
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary)*
//! unary   := '-' unary | power
//! power   := primary ('^' exponent)?
//! exponent:= ['-'] INT | '(' ['-'] INT ['/' INT] ')'
//! primary := INT | 'q' | 'eps' | letter | '(' expr ')'
//!          | ('qbr' | 'br') '(' expr ',' expr ')'
//! letter  := 'I[' INT ',' INT ']' | 'T[' INT ']' | 'J[' INT ']'
//! ```

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::{AlgebraElement, AlgebraError, GeneratorId, Monomial, Presentation};
use crate::coeffs::{scalar_from_json, scalar_to_json, CoeffError, LaurentScalar, Rational, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl From<CoeffError> for ParseError {
    fn from(e: CoeffError) -> Self {
        ParseError::Algebra(e.into())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

fn q_power(k: i32) -> Option<String> {
    match k {
        0 => None,
        2 => Some("q".into()),
        k if k % 2 == 0 && k > 0 => Some(format!("q^{}", k / 2)),
        k if k % 2 == 0 => Some(format!("q^({})", k / 2)),
        k => Some(format!("q^({k}/2)")),
    }
}

fn eps_power(k: u32) -> Option<String> {
    match k {
        0 => None,
        1 => Some("eps".into()),
        k => Some(format!("eps^{k}")),
    }
}

fn rational_text(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// `|c| q^a eps^b` without its sign, `"1"` for the unit.
fn unsigned_monomial(c: &Rational, a: i32, b: u32) -> String {
    let mut parts: Vec<String> = Vec::new();
    let abs = c.abs();
    if !abs.is_one() {
        parts.push(rational_text(&abs));
    }
    parts.extend(q_power(a));
    parts.extend(eps_power(b));
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

fn laurent_text(l: &LaurentScalar) -> String {
    if l.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (a, b, c)) in l.terms().enumerate() {
        let body = unsigned_monomial(c, a, b);
        match (i, c.is_negative()) {
            (0, false) => out.push_str(&body),
            (0, true) => write!(out, "-{body}").unwrap(),
            (_, false) => write!(out, " + {body}").unwrap(),
            (_, true) => write!(out, " - {body}").unwrap(),
        }
    }
    out
}

/// Numerator and denominator of any scalar as Laurent polynomials in `s`, `ε`.
fn scalar_parts(c: &Scalar) -> (LaurentScalar, LaurentScalar) {
    match c {
        Scalar::Generic(f) => (f.numerator().clone(), f.denominator().clone()),
        Scalar::Root(r) => {
            let mut terms = Vec::new();
            for (e, v) in r.eps_terms() {
                for (i, x) in v.coeffs().into_iter().enumerate() {
                    terms.push(((i as i32, e), x));
                }
            }
            (LaurentScalar::from_terms(terms), LaurentScalar::one())
        }
    }
}

/// Sign and unsigned text of a scalar used as a coefficient.
fn coefficient_text(c: &Scalar) -> (bool, String) {
    let (num, den) = scalar_parts(c);
    if den.is_one() {
        if num.len() == 1 {
            let (a, b, v) = num.terms().next().unwrap();
            return (v.is_negative(), unsigned_monomial(v, a, b));
        }
        return (false, format!("({})", laurent_text(&num)));
    }
    (false, format!("({})/({})", laurent_text(&num), laurent_text(&den)))
}

pub fn format_scalar(c: &Scalar) -> String {
    let (neg, body) = coefficient_text(c);
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

fn monomial_text(m: &Monomial, pres: &Presentation) -> String {
    let parts: Vec<String> = m
        .runs()
        .iter()
        .map(|&(x, e)| {
            let g = pres.id(x);
            if e == 1 {
                g.to_string()
            } else {
                format!("{g}^{e}")
            }
        })
        .collect();
    parts.join("*")
}

/// Canonical text: terms in PBW-lexicographic order, e.g.
/// `q*I[2,1]*I[3,2] - q^(1/2)*I[3,1]`; zero prints as `0`.
pub fn format_text(a: &AlgebraElement, pres: &Presentation) -> String {
    if a.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (m, c)) in a.terms().enumerate() {
        let (neg, coeff) = coefficient_text(c);
        let body = match (m.is_one(), coeff.as_str()) {
            (true, _) => coeff,
            (false, "1") => monomial_text(m, pres),
            (false, _) => format!("{coeff}*{}", monomial_text(m, pres)),
        };
        match (i, neg) {
            (0, false) => out.push_str(&body),
            (0, true) => write!(out, "-{body}").unwrap(),
            (_, false) => write!(out, " + {body}").unwrap(),
            (_, true) => write!(out, " - {body}").unwrap(),
        }
    }
    out
}

pub fn element_to_json(a: &AlgebraElement, pres: &Presentation) -> Value {
    let terms: Vec<Value> = a
        .terms()
        .map(|(m, c)| {
            let mono: Vec<Value> = m.runs().iter().map(|&(x, e)| json!([pres.id(x).to_string(), e])).collect();
            json!({ "mono": mono, "coeff": scalar_to_json(c) })
        })
        .collect();
    json!({ "terms": terms })
}

pub fn format_element(a: &AlgebraElement, pres: &Presentation, format: Format) -> String {
    match format {
        Format::Text => format_text(a, pres),
        Format::Json => element_to_json(a, pres).to_string(),
    }
}

pub fn element_from_json(v: &Value, pres: &Presentation) -> Result<AlgebraElement, ParseError> {
    let bad = |message: &str| ParseError::Syntax { pos: 0, message: message.into() };
    let terms = v.get("terms").and_then(Value::as_array).ok_or_else(|| bad("expected {\"terms\": [...]}"))?;
    let mut words = Vec::new();
    for t in terms {
        let coeff = scalar_from_json(t.get("coeff").ok_or_else(|| bad("term without coeff"))?, pres.domain())?;
        let mono = t.get("mono").and_then(Value::as_array).ok_or_else(|| bad("term without mono"))?;
        let mut word = Vec::new();
        for run in mono {
            let (name, e) = match run.as_array().map(Vec::as_slice) {
                Some([Value::String(name), e]) => (name, e.as_u64().ok_or_else(|| bad("bad exponent"))?),
                _ => return Err(bad("mono entries are [letter, exponent]")),
            };
            let g = parse_letter(name, pres)?;
            word.extend(std::iter::repeat_n(g, e as usize));
        }
        words.push((coeff, word));
    }
    Ok(pres.normal_form(&words)?)
}

fn parse_letter(name: &str, pres: &Presentation) -> Result<GeneratorId, ParseError> {
    let mut p = Parser::new(name, pres);
    let g = p.letter()?;
    if p.pos != p.src.len() {
        return Err(p.error("trailing input after letter"));
    }
    Ok(g)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    pres: &'a Presentation,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, pres: &'a Presentation) -> Self {
        Self { src: text.as_bytes(), pos: 0, pres }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::Syntax { pos: self.pos, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", c as char)))
        }
    }

    fn ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).unwrap().parse().unwrap())
    }

    fn small(&mut self) -> Result<u32, ParseError> {
        let at = self.pos;
        self.integer()?.to_u32().ok_or(ParseError::Syntax { pos: at, message: "index too large".into() })
    }

    fn letter(&mut self) -> Result<GeneratorId, ParseError> {
        let at = self.pos;
        let g = match self.ident() {
            Some("I") => {
                self.expect(b'[')?;
                let k = self.small()?;
                self.expect(b',')?;
                let l = self.small()?;
                self.expect(b']')?;
                GeneratorId::so(k, l)
            }
            Some("T") => {
                self.expect(b'[')?;
                let k = self.small()?;
                self.expect(b']')?;
                GeneratorId::Trans(k)
            }
            Some("J") => {
                self.expect(b'[')?;
                let k = self.small()?;
                self.expect(b']')?;
                GeneratorId::Eps(k)
            }
            _ => return Err(ParseError::Syntax { pos: at, message: "expected a letter".into() }),
        };
        self.pres.letter(g)?;
        Ok(g)
    }

    fn scalar_of(&self, e: &AlgebraElement) -> Option<Scalar> {
        if e.is_zero() {
            Some(self.pres.domain().zero())
        } else {
            e.as_scalar()
        }
    }

    fn expr(&mut self) -> Result<AlgebraElement, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<AlgebraElement, ParseError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                let rhs = self.unary()?;
                acc = self.pres.multiply(&acc, &rhs)?;
            } else if self.peek() == Some(b'/') {
                let at = self.pos;
                self.pos += 1;
                let rhs = self.unary()?;
                let c = self
                    .scalar_of(&rhs)
                    .ok_or(ParseError::Syntax { pos: at, message: "can only divide by a scalar".into() })?;
                acc = acc.scale(&c.inv()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<AlgebraElement, ParseError> {
        if self.eat(b'-') {
            return Ok(-&self.unary()?);
        }
        self.power()
    }

    fn exponent(&mut self) -> Result<Rational, ParseError> {
        let paren = self.eat(b'(');
        let neg = self.eat(b'-');
        let n = self.integer()?;
        let d = if paren && self.eat(b'/') { self.integer()? } else { BigInt::one() };
        if paren {
            self.expect(b')')?;
        }
        if d.is_zero() {
            return Err(self.error("zero denominator in exponent"));
        }
        let e = Rational::new(n, d);
        Ok(if neg { -e } else { e })
    }

    fn power(&mut self) -> Result<AlgebraElement, ParseError> {
        let base = self.primary()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let at = self.pos;
        let e = self.exponent()?;
        let fail = |message: &str| ParseError::Syntax { pos: at, message: message.into() };
        let d = self.pres.domain();
        match self.scalar_of(&base) {
            Some(c) => {
                let twice = &e * Rational::from_integer(2.into());
                if !e.is_integer() {
                    if !twice.is_integer() || c != d.s_pow(2) {
                        return Err(fail("fractional exponents are only allowed on q, in halves"));
                    }
                    let k = twice.to_integer().to_i32().ok_or_else(|| fail("exponent too large"))?;
                    return Ok(self.pres.scalar(d.s_pow(k)));
                }
                let k = e.to_integer().to_i32().ok_or_else(|| fail("exponent too large"))?;
                let unit = if k < 0 { c.inv()? } else { c };
                let mut acc = d.one();
                for _ in 0..k.unsigned_abs() {
                    acc = &acc * &unit;
                }
                Ok(self.pres.scalar(acc))
            }
            None => {
                if !e.is_integer() || e.is_negative() {
                    return Err(fail("elements only take non-negative integer powers"));
                }
                let k = e.to_integer().to_u32().ok_or_else(|| fail("exponent too large"))?;
                Ok(self.pres.pow(&base, k)?)
            }
        }
    }

    fn primary(&mut self) -> Result<AlgebraElement, ParseError> {
        let d = self.pres.domain().clone();
        match self.peek() {
            None => Err(self.error("unexpected end of input")),
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(self.pres.scalar(d.rational(Rational::from_integer(n))))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let at = self.pos;
                let word = self.ident().unwrap();
                match word {
                    "q" => Ok(self.pres.scalar(d.s_pow(2))),
                    "eps" => Ok(self.pres.scalar(d.eps_pow(1)?)),
                    "qbr" | "br" => {
                        self.expect(b'(')?;
                        let a = self.expr()?;
                        self.expect(b',')?;
                        let b = self.expr()?;
                        self.expect(b')')?;
                        Ok(if word == "qbr" {
                            self.pres.q_commutator(&a, &b, 1)?
                        } else {
                            self.pres.commutator(&a, &b)?
                        })
                    }
                    "I" | "T" | "J" => {
                        self.pos = at;
                        let g = self.letter()?;
                        Ok(self.pres.gen(g)?)
                    }
                    other => Err(ParseError::Syntax { pos: at, message: format!("unknown name '{other}'") }),
                }
            }
            Some(c) => Err(self.error(format!("unexpected '{}'", c as char))),
        }
    }
}

/// Parses and normalizes an expression over `pres`.
pub fn parse_expression(text: &str, pres: &Presentation) -> Result<AlgebraElement, ParseError> {
    let mut p = Parser::new(text, pres);
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}
