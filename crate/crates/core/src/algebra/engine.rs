//! Straightening of products into PBW normal form.
//!
//! Products of normal monomials are reduced recursively: the last letter of
//! the left factor is pushed through the right factor one adjacent swap at a
//! time, and each swap is replaced by its rule. Both `letter × monomial` and
//! `monomial × monomial` products are memoized on the presentation.

use std::collections::hash_map::{Entry, HashMap};
use std::sync::Arc;

use super::element::AlgebraElement;
use super::generator::GeneratorId;
use super::monomial::{Letter, Monomial};
use super::presentation::{Presentation, Terms};
use super::AlgebraError;
use crate::coeffs::Scalar;
use crate::par::{self, Exec};

#[derive(Default)]
pub(crate) struct Acc(HashMap<Monomial, Scalar>);

impl Acc {
    pub(crate) fn add(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.0.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub(crate) fn add_scaled(&mut self, terms: &Terms, c: &Scalar) {
        let unit = c.is_one();
        for (m, v) in terms {
            let v = if unit { v.clone() } else { v * c };
            self.add(m.clone(), v);
        }
    }

    pub(crate) fn merge(&mut self, other: Acc) {
        for (m, c) in other.0 {
            self.add(m, c);
        }
    }

    pub(crate) fn into_terms(self) -> Terms {
        self.0.into_iter().collect()
    }
}

impl Presentation {
    fn single(&self, m: Monomial) -> Arc<Terms> {
        Arc::new(vec![(m, self.domain.one())])
    }

    /// Normal form of `x · b` for a normal monomial `b`.
    pub(crate) fn mul_letter_mono(&self, x: Letter, b: &Monomial) -> Arc<Terms> {
        let y = match b.first() {
            Some(y) if x > y => y,
            _ => return self.single(Monomial::power(x, 1).concat(b)),
        };
        let key = (x, b.clone());
        if let Some(hit) = self.letter_memo.get(&key) {
            return hit.clone();
        }
        let rule = self.rule_terms(x, y).expect("every out-of-order pair has a rule").clone();
        let rest = b.drop_first();
        let mut acc = Acc::default();
        for (w, c) in rule.iter() {
            let t = self.mul_monos(w, &rest);
            acc.add_scaled(&t, c);
        }
        let out = Arc::new(acc.into_terms());
        self.letter_memo.insert(key, out.clone());
        out
    }

    /// Normal form of `a · b` for normal monomials `a`, `b`.
    pub(crate) fn mul_monos(&self, a: &Monomial, b: &Monomial) -> Arc<Terms> {
        match (a.last(), b.first()) {
            (None, _) => return self.single(b.clone()),
            (_, None) => return self.single(a.clone()),
            (Some(x), Some(y)) if x <= y => return self.single(a.concat(b)),
            _ => {}
        }
        let key = (a.clone(), b.clone());
        if let Some(hit) = self.mono_memo.get(&key) {
            return hit.clone();
        }
        let x = a.last().unwrap();
        let head = a.drop_last();
        let pushed = self.mul_letter_mono(x, b);
        let mut acc = Acc::default();
        for (m, c) in pushed.iter() {
            let t = self.mul_monos(&head, m);
            acc.add_scaled(&t, c);
        }
        let out = Arc::new(acc.into_terms());
        self.mono_memo.insert(key, out.clone());
        out
    }

    pub(crate) fn word_terms(&self, word: &[Letter]) -> Terms {
        let mut acc: Terms = vec![(Monomial::one(), self.domain.one())];
        for &x in word.iter().rev() {
            let mut next = Acc::default();
            for (m, c) in &acc {
                next.add_scaled(&self.mul_letter_mono(x, m), c);
            }
            acc = next.into_terms();
        }
        acc
    }

    pub(crate) fn element(&self, terms: Terms) -> AlgebraElement {
        AlgebraElement::from_terms(self.key, terms)
    }

    /// Normal form of a single word in the PBW letters.
    pub fn word(&self, word: &[GeneratorId]) -> Result<AlgebraElement, AlgebraError> {
        let letters = word.iter().map(|&g| self.letter(g)).collect::<Result<Vec<_>, _>>()?;
        Ok(self.element(self.word_terms(&letters)))
    }

    /// Normal form of a scalar-weighted list of words.
    pub fn normal_form(&self, words: &[(Scalar, Vec<GeneratorId>)]) -> Result<AlgebraElement, AlgebraError> {
        let mut acc = Acc::default();
        for (c, w) in words {
            if !self.domain.owns(c) {
                return Err(AlgebraError::DomainMismatch);
            }
            let letters = w.iter().map(|&g| self.letter(g)).collect::<Result<Vec<_>, _>>()?;
            acc.add_scaled(&self.word_terms(&letters), c);
        }
        Ok(self.element(acc.into_terms()))
    }

    /// Normal form of `X·Y` for an out-of-order pair (a rule lookup).
    pub fn straighten_pair(&self, x: GeneratorId, y: GeneratorId) -> Result<AlgebraElement, AlgebraError> {
        let (xi, yi) = (self.letter(x)?, self.letter(y)?);
        if xi <= yi {
            return Err(AlgebraError::NotOutOfOrder(x.to_string(), y.to_string()));
        }
        Ok(self.element(self.rule_terms(xi, yi).unwrap().as_ref().clone()))
    }

    pub fn multiply(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        self.multiply_with(a, b, Exec::default())
    }

    /// Product with an explicit execution strategy; the result does not depend on it.
    pub fn multiply_with(
        &self,
        a: &AlgebraElement,
        b: &AlgebraElement,
        exec: Exec,
    ) -> Result<AlgebraElement, AlgebraError> {
        self.check_key(a)?;
        self.check_key(b)?;
        let left: Vec<(&Monomial, &Scalar)> = a.terms().collect();
        let right: Vec<(&Monomial, &Scalar)> = b.terms().collect();
        let partials = par::map(exec, &left, |&(ma, ca)| {
            let mut acc = Acc::default();
            for &(mb, cb) in &right {
                let c = ca * cb;
                acc.add_scaled(&self.mul_monos(ma, mb), &c);
            }
            acc
        });
        let mut total = Acc::default();
        for p in partials {
            total.merge(p);
        }
        Ok(self.element(total.into_terms()))
    }

    pub fn pow(&self, a: &AlgebraElement, e: u32) -> Result<AlgebraElement, AlgebraError> {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.multiply(&acc, a)?;
        }
        Ok(acc)
    }

    /// `ab - ba`.
    pub fn commutator(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        Ok(&self.multiply(a, b)? - &self.multiply(b, a)?)
    }

    /// `[a, b]_{q^{±1}} = q^{±1/2} ab - q^{∓1/2} ba`.
    pub fn q_commutator(
        &self,
        a: &AlgebraElement,
        b: &AlgebraElement,
        sign: i32,
    ) -> Result<AlgebraElement, AlgebraError> {
        debug_assert!(sign == 1 || sign == -1);
        let ab = self.multiply(a, b)?.scale(&self.domain.s_pow(sign));
        let ba = self.multiply(b, a)?.scale(&self.domain.s_pow(-sign));
        Ok(&ab - &ba)
    }

    /// `I^±_{kl}` built from the generators by the recursive q-bracket.
    pub fn expand_derived(&self, k: u32, l: u32, sign: i32) -> Result<AlgebraElement, AlgebraError> {
        if k <= l {
            return Err(AlgebraError::BadIndices(k, l));
        }
        if k == l + 1 {
            return self.gen(GeneratorId::so(k, l));
        }
        let step = self.gen(GeneratorId::so(l + 1, l))?;
        let inner = self.expand_derived(k, l + 1, sign)?;
        self.q_commutator(&step, &inner, sign)
    }

    /// `T^±_k = [I_{k+1,k}, T^±_{k+1}]_{q^{±1}}`, starting from the generator `T_m`.
    pub fn expand_trans(&self, k: u32, sign: i32) -> Result<AlgebraElement, AlgebraError> {
        let m = match self.family() {
            super::Family::Iso(m) => m,
            other => return Err(AlgebraError::WrongFamily(other)),
        };
        if k == 0 || k > m {
            return Err(AlgebraError::BadIndices(k, m));
        }
        if k == m {
            return self.gen(GeneratorId::Trans(m));
        }
        let step = self.gen(GeneratorId::so(k + 1, k))?;
        let inner = self.expand_trans(k + 1, sign)?;
        self.q_commutator(&step, &inner, sign)
    }

    /// Applies an algebra homomorphism given on letters, with a coefficient
    /// map, landing in `self`.
    pub fn apply_hom(
        &self,
        a: &AlgebraElement,
        source: &Presentation,
        image: &dyn Fn(GeneratorId) -> Result<AlgebraElement, AlgebraError>,
        coeff: &dyn Fn(&Scalar) -> Result<Scalar, AlgebraError>,
    ) -> Result<AlgebraElement, AlgebraError> {
        source.check_key(a)?;
        let images = source.letters().iter().map(|&g| image(g)).collect::<Result<Vec<_>, _>>()?;
        let mut total = self.zero();
        for (m, c) in a.terms() {
            let mut prod = self.scalar(coeff(c)?);
            for x in m.letters() {
                prod = self.multiply(&prod, &images[x.0 as usize])?;
            }
            total = &total + &prod;
        }
        Ok(total)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Crossing, Family};
    use crate::coeffs::CoeffDomain;

    fn so(m: u32) -> Presentation {
        Presentation::build(Family::SoPrime(m), CoeffDomain::generic(), Crossing::PlainBracket).unwrap()
    }

    fn i(k: u32, l: u32) -> GeneratorId {
        GeneratorId::so(k, l)
    }

    #[test]
    fn so3_straightening_examples() {
        let p = so(3);
        let d = p.domain().clone();
        let expect = p.normal_form(&[(d.s_pow(2), vec![i(2, 1), i(3, 2)]), (-&d.s_pow(1), vec![i(3, 1)])]).unwrap();
        assert_eq!(p.word(&[i(3, 2), i(2, 1)]).unwrap(), expect);
        assert_eq!(p.straighten_pair(i(3, 2), i(2, 1)).unwrap(), expect);

        let expect = p.normal_form(&[(d.s_pow(-2), vec![i(2, 1), i(3, 1)]), (d.s_pow(-1), vec![i(3, 2)])]).unwrap();
        assert_eq!(p.word(&[i(3, 1), i(2, 1)]).unwrap(), expect);
        assert!(matches!(p.straighten_pair(i(2, 1), i(3, 2)), Err(AlgebraError::NotOutOfOrder(..))));
    }

    #[test]
    fn unit_and_ordered_products() {
        let p = so(3);
        let x = p.gen(i(2, 1)).unwrap();
        let y = p.gen(i(3, 2)).unwrap();
        assert_eq!(p.multiply(&p.one(), &x).unwrap(), x);
        assert_eq!(p.multiply(&x, &y).unwrap(), p.word(&[i(2, 1), i(3, 2)]).unwrap());
    }

    #[test]
    fn q_bracket_of_generators_is_i31() {
        let p = so(3);
        let x = p.gen(i(2, 1)).unwrap();
        let y = p.gen(i(3, 2)).unwrap();
        assert_eq!(p.q_commutator(&x, &y, 1).unwrap(), p.gen(i(3, 1)).unwrap());
        // a = b case
        let d = p.domain();
        let coeff = &d.s_pow(1) - &d.s_pow(-1);
        assert_eq!(p.q_commutator(&x, &x, 1).unwrap(), p.gen_pow(i(2, 1), 2).unwrap().scale(&coeff));
    }

    #[test]
    fn so4_crossing_rule_plain() {
        let p = so(4);
        let d = p.domain().clone();
        let dq = d.q_minus_q_inv();
        let expect = p
            .normal_form(&[
                (d.one(), vec![i(3, 1), i(4, 2)]),
                (dq.clone(), vec![i(2, 1), i(4, 3)]),
                (-&dq, vec![i(3, 2), i(4, 1)]),
            ])
            .unwrap();
        assert_eq!(p.straighten_pair(i(4, 2), i(3, 1)).unwrap(), expect);
        assert!(p.commutator(&p.gen(i(4, 3)).unwrap(), &p.gen(i(2, 1)).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn derived_elements_are_letters() {
        let p = so(5);
        for k in 2..=5 {
            for l in 1..k {
                assert_eq!(p.expand_derived(k, l, 1).unwrap(), p.gen(i(k, l)).unwrap(), "I{k}{l}");
            }
        }
        let expected = p
            .normal_form(&[
                (p.domain().s_pow(1), vec![i(2, 1), i(3, 2)]),
                (-&p.domain().s_pow(-1), vec![i(3, 2), i(2, 1)]),
            ])
            .unwrap();
        assert_eq!(p.expand_derived(3, 1, 1).unwrap(), expected);
        assert_eq!(p.expand_derived(2, 1, -1).unwrap(), p.gen(i(2, 1)).unwrap());
        assert!(matches!(p.expand_derived(1, 2, 1), Err(AlgebraError::BadIndices(1, 2))));
    }

    #[test]
    fn sequential_and_parallel_products_agree() {
        let p = so(4);
        let a = &p.word(&[i(4, 2), i(3, 1), i(2, 1)]).unwrap() + &p.gen(i(4, 1)).unwrap();
        let b = &p.word(&[i(4, 3), i(3, 2)]).unwrap() - &p.gen_pow(i(4, 2), 2).unwrap();
        let seq = p.multiply_with(&a, &b, Exec::Sequential).unwrap();
        p.clear_memo();
        let par = p.multiply_with(&a, &b, Exec::Parallel).unwrap();
        assert_eq!(seq, par);
    }
}
