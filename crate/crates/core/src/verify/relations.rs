use crate::algebra::{AlgebraElement, AlgebraError, Crossing, Family, GeneratorId, Presentation};
use crate::coeffs::Scalar;

/// A defining or derived relation moved to one side and normalized.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub id: String,
    pub residual: AlgebraElement,
}

struct Ctx<'a> {
    pres: &'a Presentation,
    out: Vec<Relation>,
}

impl Ctx<'_> {
    fn push(&mut self, id: String, residual: AlgebraElement) {
        self.out.push(Relation { id, residual });
    }

    fn i(&self, k: u32, l: u32) -> Result<AlgebraElement, AlgebraError> {
        self.pres.gen(GeneratorId::so(k, l))
    }

    fn t(&self, k: u32) -> Result<AlgebraElement, AlgebraError> {
        self.pres.gen(GeneratorId::Trans(k))
    }

    fn mul(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        self.pres.multiply(a, b)
    }

    /// `[a,b]_{q^{sign}}`, or the plain commutator for `sign = 0`.
    fn br(&self, a: &AlgebraElement, b: &AlgebraElement, sign: i32) -> Result<AlgebraElement, AlgebraError> {
        if sign == 0 {
            self.pres.commutator(a, b)
        } else {
            self.pres.q_commutator(a, b, sign)
        }
    }

    fn dq(&self, sign: i32) -> Scalar {
        let d = self.pres.domain().q_minus_q_inv();
        if sign < 0 {
            -&d
        } else {
            d
        }
    }

    /// `x y² - (q+q⁻¹) y x y + y² x + x`, the cubic relation between two neighbours.
    fn cubic(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        Ok(&self.cubic_homogeneous(x, y)? + x)
    }

    fn cubic_homogeneous(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        let d = self.pres.domain();
        let qq = &d.s_pow(2) + &d.s_pow(-2);
        let yy = self.mul(y, y)?;
        let a = self.mul(x, &yy)?;
        let b = self.mul(&self.mul(y, x)?, y)?.scale(&qq);
        let c = self.mul(&yy, x)?;
        Ok(&(&a - &b) + &c)
    }

    fn so_relations(&mut self, m: u32) -> Result<(), AlgebraError> {
        for i in 2..m {
            let (hi, lo) = (self.i(i + 1, i)?, self.i(i, i - 1)?);
            let r = self.cubic(&hi, &lo)?;
            self.push(format!("cubic-up[{i}]"), r);
            let r = self.cubic(&lo, &hi)?;
            self.push(format!("cubic-down[{i}]"), r);
        }
        for i in 2..=m {
            for j in i + 2..=m {
                let r = self.br(&self.i(i, i - 1)?, &self.i(j, j - 1)?, 0)?;
                self.push(format!("far[{i},{j}]"), r);
            }
        }
        for sign in [1, -1] {
            self.derived_relations(m, sign)?;
        }
        if m >= 4 {
            self.so4_table()?;
        }
        Ok(())
    }

    /// Recursion, triple, disjoint and crossing relations among `I^±_{kl}`.
    fn derived_relations(&mut self, m: u32, sign: i32) -> Result<(), AlgebraError> {
        let tag = if sign > 0 { "+" } else { "-" };
        let mut elems = std::collections::HashMap::new();
        for k in 2..=m {
            for l in 1..k {
                let e = self.pres.expand_derived(k, l, sign)?;
                if sign > 0 && k > l + 1 {
                    let r = &e - &self.i(k, l)?;
                    self.push(format!("recursion[{k},{l}]"), r);
                }
                elems.insert((k, l), e);
            }
        }
        let g = |k: u32, l: u32| &elems[&(k, l)];
        for k in 3..=m {
            for l in 2..k {
                for n in 1..l {
                    let r = &self.br(g(l, n), g(k, l), sign)? - g(k, n);
                    self.push(format!("triple{tag}[{k},{l},{n}]a"), r);
                    let r = &self.br(g(k, l), g(k, n), sign)? - g(l, n);
                    self.push(format!("triple{tag}[{k},{l},{n}]b"), r);
                    let r = &self.br(g(k, n), g(l, n), sign)? - g(k, l);
                    self.push(format!("triple{tag}[{k},{l},{n}]c"), r);
                }
            }
        }
        let crossing = match self.pres.crossing() {
            Crossing::QBracket => sign,
            Crossing::PlainBracket => 0,
        };
        for k in 4..=m {
            for l in 1..k {
                for n in 2..k {
                    for r in 1..n {
                        if n == l || r == l {
                            continue;
                        }
                        if l > n || r > l {
                            let res = self.br(g(k, l), g(n, r), 0)?;
                            self.push(format!("disjoint{tag}[{k},{l},{n},{r}]"), res);
                        } else {
                            let rhs = &self.mul(g(l, r), g(k, n))? - &self.mul(g(k, r), g(n, l))?;
                            let res = &self.br(g(k, l), g(n, r), crossing)? - &rhs.scale(&self.dq(sign));
                            self.push(format!("crossing{tag}[{k},{n},{l},{r}]"), res);
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// The fifteen displayed relations among the letters of `U'_q(so_4)`.
    fn so4_table(&mut self) -> Result<(), AlgebraError> {
        let pres = self.pres;
        let i = |k, l| pres.gen(GeneratorId::so(k, l));
        let table: [(u32, u32, u32, u32, i32, Option<(u32, u32)>); 14] = [
            (4, 3, 2, 1, 0, None),
            (3, 2, 3, 1, 1, Some((2, 1))),
            (2, 1, 3, 2, 1, Some((3, 1))),
            (3, 1, 2, 1, 1, Some((3, 2))),
            (4, 3, 4, 2, 1, Some((3, 2))),
            (3, 2, 4, 3, 1, Some((4, 2))),
            (4, 2, 3, 2, 1, Some((4, 3))),
            (3, 1, 4, 3, 1, Some((4, 1))),
            (2, 1, 4, 2, 1, Some((4, 1))),
            (4, 1, 2, 1, 1, Some((4, 2))),
            (4, 1, 3, 1, 1, Some((4, 3))),
            (4, 2, 4, 1, 1, Some((2, 1))),
            (4, 1, 3, 2, 0, None),
            (4, 3, 4, 1, 1, Some((3, 1))),
        ];
        for (idx, &(a, b, c, d, sign, rhs)) in table.iter().enumerate() {
            let lhs = self.br(&i(a, b)?, &i(c, d)?, sign)?;
            let r = match rhs {
                Some((k, l)) => &lhs - &i(k, l)?,
                None => lhs,
            };
            self.push(format!("so4-table[{}]", idx + 1), r);
        }
        let lhs = self.br(&i(4, 2)?, &i(3, 1)?, 0)?;
        let rhs = &self.mul(&i(2, 1)?, &i(4, 3)?)? - &self.mul(&i(4, 1)?, &i(3, 2)?)?;
        self.push("so4-table[15]".into(), &lhs - &rhs.scale(&self.dq(1)));
        Ok(())
    }

    fn iso_relations(&mut self, m: u32) -> Result<(), AlgebraError> {
        let (top, tm) = (self.i(m, m - 1)?, self.t(m)?);
        let r = self.cubic(&tm, &top)?;
        self.push("iso-cubic-t".into(), r);
        // right-hand side 0
        let r = self.cubic_homogeneous(&top, &tm)?;
        self.push("iso-cubic-i".into(), r);
        for k in 2..m {
            let r = self.br(&self.i(k, k - 1)?, &tm, 0)?;
            self.push(format!("iso-far[{k}]"), r);
        }
        for k in 1..m {
            let r = &self.pres.expand_trans(k, 1)? - &self.t(k)?;
            self.push(format!("trans-recursion[{k}]"), r);
        }
        for l in 2..=m {
            for n in 1..l {
                let (iln, tl, tn) = (self.i(l, n)?, self.t(l)?, self.t(n)?);
                let r = &self.br(&iln, &tl, 1)? - &tn;
                self.push(format!("trans-up[{l},{n}]"), r);
                let r = &self.br(&tn, &iln, 1)? - &tl;
                self.push(format!("trans-down[{l},{n}]"), r);
                let r = self.br(&tl, &tn, 1)?;
                self.push(format!("trans-pair[{l},{n}]"), r);
            }
        }
        for l in 1..=m {
            for n in 2..=m {
                for p in 1..n {
                    if l == n || l == p {
                        continue;
                    }
                    let (tl, inp) = (self.t(l)?, self.i(n, p)?);
                    let lhs = self.br(&tl, &inp, 0)?;
                    if l > n || p > l {
                        self.push(format!("trans-disjoint[{l},{n},{p}]"), lhs);
                    } else {
                        let rhs = &self.mul(&self.t(n)?, &self.i(l, p)?)? - &self.mul(&self.t(p)?, &self.i(n, l)?)?;
                        self.push(format!("trans-crossing[{l},{n},{p}]"), &lhs - &rhs.scale(&self.dq(1)));
                    }
                }
            }
        }
        Ok(())
    }
}

/// The three defining relations of `U'_{q,ε}(so_3)` as weighted words, each summing to zero.
pub fn eps_relation_words(pres: &Presentation) -> Result<Vec<(String, Vec<(Scalar, Vec<GeneratorId>)>)>, AlgebraError> {
    if pres.family() != Family::EpsSo3 {
        return Err(AlgebraError::WrongFamily(pres.family()));
    }
    let d = pres.domain();
    let j = GeneratorId::Eps;
    let bracket = |a: u32, b: u32, c: u32, coeff: Scalar| {
        vec![(d.s_pow(1), vec![j(a), j(b)]), (-&d.s_pow(-1), vec![j(b), j(a)]), (-&coeff, vec![j(c)])]
    };
    Ok(vec![
        ("eps[1,2]".into(), bracket(1, 2, 3, d.one())),
        ("eps[2,3]".into(), bracket(2, 3, 1, d.one())),
        ("eps[3,1]".into(), bracket(3, 1, 2, d.eps_pow(2)?)),
    ])
}

/// Pushes each defining relation of the ε-algebra through `eps_iso` word by
/// word; every image must vanish in `target`.
pub fn eps_iso_images_hold(source: &Presentation, target: &Presentation) -> Result<Vec<Relation>, AlgebraError> {
    let mut out = Vec::new();
    for (id, words) in eps_relation_words(source)? {
        let mut total = target.zero();
        for (c, w) in words {
            let mut prod = target.scalar(c);
            for g in w {
                let img = crate::elements::eps_iso(&source.gen(g)?, source, target)?;
                prod = target.multiply(&prod, &img)?;
            }
            total = &total + &prod;
        }
        out.push(Relation { id, residual: total });
    }
    Ok(out)
}

/// Every displayed relation of the family, as normalized residuals.
pub fn check_relations(pres: &Presentation) -> Result<Vec<Relation>, AlgebraError> {
    let mut ctx = Ctx { pres, out: Vec::new() };
    match pres.family() {
        Family::SoPrime(m) => ctx.so_relations(m)?,
        Family::Iso(m) => {
            if m >= 3 {
                ctx.so_relations(m)?;
            }
            ctx.iso_relations(m)?;
        }
        Family::EpsSo3 => {
            for (id, words) in eps_relation_words(pres)? {
                let r = pres.normal_form(&words)?;
                ctx.push(id, r);
            }
        }
    }
    Ok(ctx.out)
}
