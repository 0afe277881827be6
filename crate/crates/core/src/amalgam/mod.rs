//! `Q = Q₁ *_R Q₂` with `Q₁ = R[x; τ₁, δ₁]/(x² - a x - b)` and
//! `Q₂ = R[y; τ₂, δ₂]/(y² - c y - d)`, in alternating-word normal form.

mod right;

use std::collections::BTreeMap;

pub use right::AmalgamRight;

use crate::error::{Error, Result};
use crate::ore::{quadratic_compat_check, QuadraticData};
use crate::ring::{BaseRing, Endo, Twist};
use crate::text::{coefficient_term, join_terms};
use crate::word::{Letter, Word, WordAlgebra, WordElement};

/// An alternating word, identified by its length and first letter.
/// The empty word is always stored with first letter `x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AltWord {
    pub len: usize,
    pub first: Letter,
}

impl AltWord {
    pub fn unit() -> AltWord {
        AltWord {
            len: 0,
            first: Letter::X,
        }
    }

    pub fn starting(len: usize, first: Letter) -> AltWord {
        AltWord {
            len,
            first: if len == 0 { Letter::X } else { first },
        }
    }

    /// The word of length `len` ending in `last` (the hatted basis element).
    pub fn ending(len: usize, last: Letter) -> AltWord {
        AltWord::starting(len, if len % 2 == 1 { last } else { last.other() })
    }

    pub fn last(&self) -> Letter {
        if self.len % 2 == 1 {
            self.first
        } else {
            self.first.other()
        }
    }

    pub fn word(&self) -> Word {
        Word::alternating(self.len, self.first)
    }

    pub fn from_word(w: &Word) -> Option<AltWord> {
        if !w.is_alternating() {
            return None;
        }
        Some(AltWord::starting(
            w.len(),
            w.letters().first().copied().unwrap_or(Letter::X),
        ))
    }

    /// `τ^(n)` for words starting with `x`, and its mirror for words starting with `y`.
    pub fn endo(&self) -> Endo {
        Endo::alternating_from(self.first.twist(), self.len)
    }
}

/// `r₀ + Σ (rᵢ x^(i) + r′ᵢ y^(i))` with left coefficients; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmalgamElement<E> {
    terms: BTreeMap<AltWord, E>,
}

impl<E> Default for AmalgamElement<E> {
    fn default() -> Self {
        AmalgamElement {
            terms: BTreeMap::new(),
        }
    }
}

/// Degree and leading pair `(a_n, b_n)` of the coefficients of `x^(n)`, `y^(n)`.
/// The zero element has no degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DegreeLeading<E> {
    NegInfinity,
    Degree { n: usize, a: Option<E>, b: Option<E> },
}

impl<E: Clone> AmalgamElement<E> {
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&AltWord, &E)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &AltWord) -> Option<&E> {
        self.terms.get(w)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next_back().map(|w| w.len)
    }

    pub fn degree_leading(&self) -> DegreeLeading<E> {
        match self.degree() {
            None => DegreeLeading::NegInfinity,
            Some(n) => DegreeLeading::Degree {
                n,
                a: self.terms.get(&AltWord::starting(n, Letter::X)).cloned(),
                b: self
                    .terms
                    .get(&AltWord::starting(n, Letter::Y))
                    .filter(|_| n > 0)
                    .cloned(),
            },
        }
    }
}

/// `x^(n)` / `y^(n)` for `kind ∈ {x, y}` and `x̂^(n)` / `ŷ^(n)` for the hatted kinds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorKind {
    X,
    Y,
    XHat,
    YHat,
}

/// The alternating word `w` with `base^(n) · w = base^(m)` (unhatted kinds) or
/// `w · base^(n) = base^(m)` (hatted kinds).
pub fn word_factor(kind: FactorKind, n: usize, m: usize) -> Result<AltWord> {
    if m < n {
        return Err(Error::InvalidArgument(format!(
            "word_factor needs m >= n, got n = {n}, m = {m}"
        )));
    }
    let k = m - n;
    Ok(match kind {
        FactorKind::X | FactorKind::Y => {
            let base = if kind == FactorKind::X { Letter::X } else { Letter::Y };
            // The letter at position n of base^(m).
            let first = if n.is_multiple_of(2) { base } else { base.other() };
            AltWord::starting(k, first)
        }
        FactorKind::XHat | FactorKind::YHat => {
            let base = if kind == FactorKind::XHat { Letter::X } else { Letter::Y };
            let last = if n.is_multiple_of(2) { base } else { base.other() };
            AltWord::ending(k, last)
        }
    })
}

/// `τ^(i) = τ₁ τ₂ τ₁ ⋯` (`i` factors, outermost first).
pub fn tau_alt(i: usize) -> Endo {
    Endo::alternating(i)
}

/// `[[n]]`: 1 for odd `n`, 2 for even `n`.
pub fn parity_selector(n: usize) -> u8 {
    if n % 2 == 1 {
        1
    } else {
        2
    }
}

/// A validated amalgam: base ring plus the two quadratic data.
#[derive(Clone, Debug)]
pub struct AmalgamInstance<R: BaseRing> {
    ring: R,
    name: String,
    q1: QuadraticData<R::Elem>,
    q2: QuadraticData<R::Elem>,
}

impl<R: BaseRing> AmalgamInstance<R> {
    /// Builds `Q` from `x² = a x + b`, `y² = c y + d` after checking normality of both
    /// relators and that the `τ`'s invert on generators.
    pub fn new(name: &str, ring: R, a: R::Elem, b: R::Elem, c: R::Elem, d: R::Elem) -> Result<Self> {
        let q1 = QuadraticData::new(a, b, Twist::One);
        let q2 = QuadraticData::new(c, d, Twist::Two);
        for qd in [&q1, &q2] {
            for e in [&qd.a, &qd.b] {
                if !ring.contains(e) {
                    return Err(Error::ContextMismatch(format!(
                        "quadratic datum outside {}",
                        ring.descriptor()
                    )));
                }
            }
            let report = quadratic_compat_check(&ring, qd);
            if let Some(f) = report.failure {
                return Err(Error::Incompatible(format!("{}: {} vs {}", f.identity, f.lhs, f.rhs)));
            }
        }
        for g in ring.generators() {
            for t in [Twist::One, Twist::Two] {
                if ring.tau_inv(t, &ring.tau(t, &g)) != g || ring.tau(t, &ring.tau_inv(t, &g)) != g {
                    return Err(Error::Incompatible(format!(
                        "tau inverse fails on {}",
                        ring.format(&g)
                    )));
                }
            }
        }
        Ok(AmalgamInstance {
            ring,
            name: name.to_string(),
            q1,
            q2,
        })
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn quadratic(&self, l: Letter) -> &QuadraticData<R::Elem> {
        match l {
            Letter::X => &self.q1,
            Letter::Y => &self.q2,
        }
    }

    pub fn words(&self) -> WordAlgebra<'_, R> {
        WordAlgebra::new(&self.ring)
    }

    pub fn zero(&self) -> AmalgamElement<R::Elem> {
        AmalgamElement::default()
    }

    pub fn one(&self) -> AmalgamElement<R::Elem> {
        self.constant(self.ring.one())
    }

    pub fn constant(&self, r: R::Elem) -> AmalgamElement<R::Elem> {
        self.term(r, AltWord::unit())
    }

    pub fn term(&self, c: R::Elem, w: AltWord) -> AmalgamElement<R::Elem> {
        let mut e = self.zero();
        self.accumulate(&mut e.terms, w, c);
        e
    }

    pub fn basis(&self, w: AltWord) -> AmalgamElement<R::Elem> {
        self.term(self.ring.one(), w)
    }

    pub fn x(&self) -> AmalgamElement<R::Elem> {
        self.basis(AltWord::starting(1, Letter::X))
    }

    pub fn y(&self) -> AmalgamElement<R::Elem> {
        self.basis(AltWord::starting(1, Letter::Y))
    }

    pub fn from_terms<I: IntoIterator<Item = (AltWord, R::Elem)>>(&self, it: I) -> AmalgamElement<R::Elem> {
        let mut e = self.zero();
        for (w, c) in it {
            self.accumulate(&mut e.terms, w, c);
        }
        e
    }

    fn accumulate(&self, terms: &mut BTreeMap<AltWord, R::Elem>, w: AltWord, c: R::Elem) {
        if self.ring.is_zero(&c) {
            return;
        }
        match terms.get_mut(&w) {
            Some(x) => {
                *x = self.ring.add(x, &c);
                if self.ring.is_zero(x) {
                    terms.remove(&w);
                }
            }
            None => {
                terms.insert(w, c);
            }
        }
    }

    pub fn contains(&self, f: &AmalgamElement<R::Elem>) -> bool {
        f.terms.values().all(|c| self.ring.contains(c))
    }

    pub fn add(&self, f: &AmalgamElement<R::Elem>, g: &AmalgamElement<R::Elem>) -> AmalgamElement<R::Elem> {
        let mut terms = f.terms.clone();
        for (w, c) in &g.terms {
            self.accumulate(&mut terms, *w, c.clone());
        }
        AmalgamElement { terms }
    }

    pub fn neg(&self, f: &AmalgamElement<R::Elem>) -> AmalgamElement<R::Elem> {
        AmalgamElement {
            terms: f.terms.iter().map(|(w, c)| (*w, self.ring.neg(c))).collect(),
        }
    }

    pub fn sub(&self, f: &AmalgamElement<R::Elem>, g: &AmalgamElement<R::Elem>) -> AmalgamElement<R::Elem> {
        self.add(f, &self.neg(g))
    }

    /// `r · f`.
    pub fn scale_left(&self, r: &R::Elem, f: &AmalgamElement<R::Elem>) -> AmalgamElement<R::Elem> {
        self.from_terms(f.terms.iter().map(|(w, c)| (*w, self.ring.mul(r, c))))
    }

    pub fn to_word_element(&self, f: &AmalgamElement<R::Elem>) -> WordElement<R::Elem> {
        self.words()
            .from_terms(f.terms.iter().map(|(w, c)| (w.word(), c.clone())))
    }

    /// Image of an element of `S` in `Q`: rewrite the leftmost doubled letter `ll` as
    /// `a_l l + b_l`, pushing the new coefficients left, longest words first. Every
    /// rewrite replaces a word by strictly shorter ones, so this terminates.
    pub fn normalize(&self, f: &WordElement<R::Elem>) -> AmalgamElement<R::Elem> {
        let s = self.words();
        let mut pending: BTreeMap<Word, R::Elem> = BTreeMap::new();
        for (w, c) in f.terms() {
            s.accumulate(&mut pending, w.clone(), c.clone());
        }
        let mut out = self.zero();
        while let Some((w, c)) = pending.pop_last() {
            let letters = w.letters();
            let Some(i) = letters.windows(2).position(|p| p[0] == p[1]) else {
                let aw = AltWord::from_word(&w).expect("no doubled letter");
                self.accumulate(&mut out.terms, aw, c);
                continue;
            };
            let l = letters[i];
            let qd = self.quadratic(l);
            let prefix = Word::new(letters[..i].to_vec());
            let rest = Word::new(letters[i + 2..].to_vec());
            let with_l = Word::letter(l).concat(&rest);
            for (coef, tail) in [(&qd.a, &with_l), (&qd.b, &rest)] {
                if self.ring.is_zero(coef) {
                    continue;
                }
                for (r, v) in s.push(&prefix, coef) {
                    s.accumulate(&mut pending, v.concat(tail), self.ring.mul(&c, &r));
                }
            }
        }
        out
    }

    pub fn mul(&self, f: &AmalgamElement<R::Elem>, g: &AmalgamElement<R::Elem>) -> AmalgamElement<R::Elem> {
        let s = self.words();
        self.normalize(&s.mul(&self.to_word_element(f), &self.to_word_element(g)))
    }

    /// Checked product: both factors must have coefficients in this instance's ring.
    pub fn amalgam_mul(
        &self,
        f: &AmalgamElement<R::Elem>,
        g: &AmalgamElement<R::Elem>,
    ) -> Result<AmalgamElement<R::Elem>> {
        if !self.contains(f) || !self.contains(g) {
            return Err(Error::ContextMismatch(format!(
                "element does not belong to {}",
                self.name
            )));
        }
        Ok(self.mul(f, g))
    }

    /// `f^e` for `e ≥ 0`.
    pub fn pow(&self, f: &AmalgamElement<R::Elem>, e: u32) -> AmalgamElement<R::Elem> {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, f);
        }
        acc
    }

    pub fn word_factor(&self, kind: FactorKind, n: usize, m: usize) -> Result<AmalgamElement<R::Elem>> {
        Ok(self.basis(word_factor(kind, n, m)?))
    }

    /// Two-sided inverse of `f` from a candidate, certified by multiplication.
    pub fn certify_inverse(
        &self,
        f: &AmalgamElement<R::Elem>,
        candidate: AmalgamElement<R::Elem>,
    ) -> Option<AmalgamElement<R::Elem>> {
        let one = self.one();
        (self.mul(f, &candidate) == one && self.mul(&candidate, f) == one).then_some(candidate)
    }

    /// Inverse of a single letter when its quadratic has `a = 0` and `b` a unit:
    /// the candidate `b⁻¹ l`, returned only if it is a two-sided inverse.
    pub fn letter_inverse(&self, l: Letter) -> Option<AmalgamElement<R::Elem>> {
        let qd = self.quadratic(l);
        if !self.ring.is_zero(&qd.a) {
            return None;
        }
        let binv = self.ring.inverse(&qd.b)?;
        let letter = self.basis(AltWord::starting(1, l));
        self.certify_inverse(&letter, self.scale_left(&binv, &letter))
    }

    /// Inverse of an element whose only term is a unit of `R`.
    pub fn constant_inverse(&self, f: &AmalgamElement<R::Elem>) -> Option<AmalgamElement<R::Elem>> {
        if f.degree() != Some(0) {
            return None;
        }
        let c = f.coefficient(&AltWord::unit())?;
        Some(self.constant(self.ring.inverse(c)?))
    }

    pub fn format(&self, f: &AmalgamElement<R::Elem>) -> String {
        join_terms(f.terms.iter().map(|(w, c)| {
            coefficient_term(&self.ring.format(c), &w.word().to_text())
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{FieldPreset, QuantumTorus};

    fn daha() -> AmalgamInstance<QuantumTorus> {
        let r = QuantumTorus::generic();
        let beta = r.scalars().beta();
        let b = r.scalar(&beta * &beta);
        let d = r.mono([0, 0, -1]);
        AmalgamInstance::new("daha", r.clone(), r.zero(), b, r.zero(), d).unwrap()
    }

    #[test]
    fn square_relations() {
        let q = daha();
        let r = q.ring();
        assert_eq!(q.mul(&q.y(), &q.y()), q.constant(r.mono([0, 0, -1])));
        let x2 = q.basis(AltWord::starting(2, Letter::X));
        let expected = q.term(r.mono([0, 0, -1]), AltWord::starting(1, Letter::X));
        assert_eq!(q.mul(&x2, &q.y()), expected);
        assert_eq!(q.mul(&x2, &q.one()), x2);
        assert_eq!(
            q.mul(&x2, &q.y()).degree_leading(),
            DegreeLeading::Degree {
                n: 1,
                a: Some(r.mono([0, 0, -1])),
                b: None
            }
        );
    }

    #[test]
    fn degree_leading_examples() {
        let q = daha();
        let r = q.ring();
        let f = q.from_terms([
            (AltWord::starting(3, Letter::X), r.z(1)),
            (AltWord::starting(3, Letter::Y), r.z(2)),
            (AltWord::starting(1, Letter::X), r.one()),
        ]);
        assert_eq!(
            f.degree_leading(),
            DegreeLeading::Degree {
                n: 3,
                a: Some(r.z(1)),
                b: Some(r.z(2))
            }
        );
        assert_eq!(q.zero().degree_leading(), DegreeLeading::NegInfinity);
    }

    #[test]
    fn word_factor_examples() {
        assert_eq!(word_factor(FactorKind::X, 2, 2).unwrap(), AltWord::unit());
        assert_eq!(
            word_factor(FactorKind::X, 1, 3).unwrap().word(),
            Word::new(vec![Letter::Y, Letter::X])
        );
        assert_eq!(
            word_factor(FactorKind::XHat, 1, 2).unwrap().word(),
            Word::letter(Letter::Y)
        );
        assert!(word_factor(FactorKind::X, 3, 1).is_err());
    }

    #[test]
    fn word_factor_identities() {
        let q = daha();
        for n in 0..=8 {
            for m in n..=8 {
                for (kind, hat, l) in [
                    (FactorKind::X, FactorKind::XHat, Letter::X),
                    (FactorKind::Y, FactorKind::YHat, Letter::Y),
                ] {
                    let base_n = q.basis(AltWord::starting(n, l));
                    let base_m = q.basis(AltWord::starting(m, l));
                    let f = q.word_factor(kind, n, m).unwrap();
                    assert_eq!(q.mul(&base_n, &f), base_m);
                    let hat_n = q.basis(AltWord::ending(n, l));
                    let hat_m = q.basis(AltWord::ending(m, l));
                    let g = q.word_factor(hat, n, m).unwrap();
                    assert_eq!(q.mul(&g, &hat_n), hat_m);
                }
            }
        }
    }

    #[test]
    fn tau_alt_and_parity() {
        let q = daha();
        let r = q.ring();
        assert!(tau_alt(0).is_identity());
        assert_eq!(r.apply_endo(&tau_alt(2), &r.z(1)), r.z(1));
        assert_eq!(parity_selector(3), 1);
        assert_eq!(parity_selector(4), 2);
    }

    #[test]
    fn letter_inverses() {
        let f1 = FieldPreset::qs_order2();
        let s = f1.s();
        let b = &s * &s;
        let d = &b + &f1.one();
        let q = AmalgamInstance::new("F1", f1.clone(), f1.zero(), b, f1.zero(), d).unwrap();
        let xi = q.letter_inverse(Letter::X).unwrap();
        assert_eq!(q.mul(&q.x(), &xi), q.one());
        assert!(daha().letter_inverse(Letter::Y).is_some());
    }

    #[test]
    fn incompatible_data_rejected() {
        let r = QuantumTorus::generic();
        let bad = AmalgamInstance::new("bad", r.clone(), r.zero(), r.one(), r.zero(), r.z(1));
        assert!(matches!(bad, Err(Error::Incompatible(_))));
    }
}
