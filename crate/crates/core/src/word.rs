//! The amalgamated product `S = R[x; τ₁, δ₁] *_R R[y; τ₂, δ₂]` on its free word basis.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::ore::SkewPoly;
use crate::ring::{BaseRing, Endo, Twist};
use crate::text::{coefficient_term, join_terms};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    X,
    Y,
}

impl Letter {
    pub fn other(self) -> Letter {
        match self {
            Letter::X => Letter::Y,
            Letter::Y => Letter::X,
        }
    }

    pub fn twist(self) -> Twist {
        match self {
            Letter::X => Twist::One,
            Letter::Y => Twist::Two,
        }
    }

    pub fn from_twist(t: Twist) -> Letter {
        match t {
            Twist::One => Letter::X,
            Twist::Two => Letter::Y,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Letter::X => 'x',
            Letter::Y => 'y',
        }
    }
}

/// A word in `x, y`, ordered by length and then alphabetically with `x < y`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    pub fn letter(l: Letter) -> Word {
        Word(vec![l])
    }

    /// Alternating word of length `n` whose first letter is `first`.
    pub fn alternating(n: usize, first: Letter) -> Word {
        let mut l = first;
        let mut v = Vec::with_capacity(n);
        for _ in 0..n {
            v.push(l);
            l = l.other();
        }
        Word(v)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, o: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&o.0);
        Word(v)
    }

    pub fn is_alternating(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != w[1])
    }

    /// The composite `τ^𝐣` with `w r = τ^𝐣(r) w + (shorter words)`: the first letter's
    /// automorphism is applied last.
    pub fn endo(&self) -> Endo {
        Endo::from_factors(self.0.iter().map(|l| (l.twist(), 1)).collect())
    }

    pub fn to_text(&self) -> String {
        self.0
            .iter()
            .map(|l| l.symbol().to_string())
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl Ord for Word {
    fn cmp(&self, o: &Word) -> Ordering {
        self.len().cmp(&o.len()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, o: &Word) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&self.to_text())
        }
    }
}

/// `Σ r_w · w` with left coefficients; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordElement<E> {
    terms: BTreeMap<Word, E>,
}

impl<E> Default for WordElement<E> {
    fn default() -> Self {
        WordElement {
            terms: BTreeMap::new(),
        }
    }
}

impl<E: Clone> WordElement<E> {
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &E)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &Word) -> Option<&E> {
        self.terms.get(w)
    }

    /// Leading term under the word order.
    pub fn leading(&self) -> Result<(&E, &Word)> {
        self.terms
            .iter()
            .next_back()
            .map(|(w, c)| (c, w))
            .ok_or_else(|| Error::InvalidArgument("leading term of zero".into()))
    }
}

/// Arithmetic in `S` over a base ring.
#[derive(Clone, Copy, Debug)]
pub struct WordAlgebra<'a, R: BaseRing> {
    ring: &'a R,
}

impl<'a, R: BaseRing> WordAlgebra<'a, R> {
    pub fn new(ring: &'a R) -> Self {
        WordAlgebra { ring }
    }

    pub fn ring(&self) -> &'a R {
        self.ring
    }

    pub fn zero(&self) -> WordElement<R::Elem> {
        WordElement::default()
    }

    pub fn term(&self, c: R::Elem, w: Word) -> WordElement<R::Elem> {
        let mut e = self.zero();
        self.accumulate(&mut e.terms, w, c);
        e
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, R::Elem)>>(&self, it: I) -> WordElement<R::Elem> {
        let mut e = self.zero();
        for (w, c) in it {
            self.accumulate(&mut e.terms, w, c);
        }
        e
    }

    pub(crate) fn accumulate(&self, terms: &mut BTreeMap<Word, R::Elem>, w: Word, c: R::Elem) {
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

    /// Expands `w · r` as `Σ r_v v`, pushing `r` left one letter at a time.
    pub fn push(&self, w: &Word, r: &R::Elem) -> Vec<(R::Elem, Word)> {
        let mut cur: BTreeMap<Word, R::Elem> = BTreeMap::new();
        self.accumulate(&mut cur, Word::empty(), r.clone());
        for &l in w.letters().iter().rev() {
            let t = l.twist();
            let mut next = BTreeMap::new();
            for (suffix, c) in cur {
                let mut longer = vec![l];
                longer.extend_from_slice(suffix.letters());
                self.accumulate(&mut next, Word(longer), self.ring.tau(t, &c));
                self.accumulate(&mut next, suffix, self.ring.delta(t, &c));
            }
            cur = next;
        }
        cur.into_iter().map(|(w, c)| (c, w)).collect()
    }

    pub fn add(&self, f: &WordElement<R::Elem>, g: &WordElement<R::Elem>) -> WordElement<R::Elem> {
        let mut terms = f.terms.clone();
        for (w, c) in &g.terms {
            self.accumulate(&mut terms, w.clone(), c.clone());
        }
        WordElement { terms }
    }

    pub fn neg(&self, f: &WordElement<R::Elem>) -> WordElement<R::Elem> {
        WordElement {
            terms: f.terms.iter().map(|(w, c)| (w.clone(), self.ring.neg(c))).collect(),
        }
    }

    pub fn sub(&self, f: &WordElement<R::Elem>, g: &WordElement<R::Elem>) -> WordElement<R::Elem> {
        self.add(f, &self.neg(g))
    }

    pub fn mul(&self, f: &WordElement<R::Elem>, g: &WordElement<R::Elem>) -> WordElement<R::Elem> {
        let mut terms = BTreeMap::new();
        for (wf, cf) in &f.terms {
            for (wg, cg) in &g.terms {
                for (c, v) in self.push(wf, cg) {
                    self.accumulate(&mut terms, v.concat(wg), self.ring.mul(cf, &c));
                }
            }
        }
        WordElement { terms }
    }

    pub fn checked_mul(
        &self,
        f: &WordElement<R::Elem>,
        g: &WordElement<R::Elem>,
    ) -> Result<WordElement<R::Elem>> {
        for e in [f, g] {
            if !e.terms.values().all(|c| self.ring.contains(c)) {
                return Err(Error::ContextMismatch(format!(
                    "coefficient outside {}",
                    self.ring.descriptor()
                )));
            }
        }
        Ok(self.mul(f, g))
    }

    /// The injection `R[x; τᵢ, δᵢ] → S`.
    pub fn embed(&self, p: &SkewPoly<R::Elem>) -> WordElement<R::Elem> {
        let l = Letter::from_twist(p.twist());
        self.from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| (Word(vec![l; i]), c.clone())),
        )
    }

    /// Predicted leading coefficient `r_I · τ^𝐣(r_J)` of a product.
    pub fn predicted_leading(
        &self,
        f: &WordElement<R::Elem>,
        g: &WordElement<R::Elem>,
    ) -> Result<(R::Elem, Word)> {
        let (rf, wf) = f.leading()?;
        let (rg, wg) = g.leading()?;
        let c = self.ring.mul(rf, &self.ring.apply_endo(&wf.endo(), rg));
        Ok((c, wf.concat(wg)))
    }

    pub fn format(&self, f: &WordElement<R::Elem>) -> String {
        join_terms(f.terms.iter().map(|(w, c)| {
            coefficient_term(&self.ring.format(c), &w.to_text())
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ore::OreExtension;
    use crate::ring::QuantumTorus;
    use Letter::{X, Y};

    #[test]
    fn word_order() {
        let x = Word::letter(X);
        let yx = Word::new(vec![Y, X]);
        let xy = Word::new(vec![X, Y]);
        assert!(x < yx);
        assert_eq!(yx.cmp(&yx), Ordering::Equal);
        assert!(xy < yx);
    }

    #[test]
    fn pushing_examples() {
        let r = QuantumTorus::generic();
        let s = WordAlgebra::new(&r);
        let x = s.term(r.one(), Word::letter(X));
        let z3y = s.term(r.z(3), Word::letter(Y));
        let p = s.mul(&x, &z3y);
        assert_eq!(s.format(&p), "z3*x*y");
        let xz1 = s.mul(&x, &s.term(r.z(1), Word::empty()));
        let ext = OreExtension::new(&r, Twist::One);
        let expected = s.embed(&ext.mul(&ext.x(), &ext.constant(r.z(1))));
        assert_eq!(xz1, expected);
    }

    #[test]
    fn leading_examples() {
        let r = QuantumTorus::generic();
        let s = WordAlgebra::new(&r);
        let f = s.add(
            &s.term(r.z(1), Word::new(vec![X, Y])),
            &s.term(r.z(2), Word::letter(X)),
        );
        let (c, w) = f.leading().unwrap();
        assert_eq!((c, w), (&r.z(1), &Word::new(vec![X, Y])));
        assert!(s.zero().leading().is_err());
    }

    #[test]
    fn leading_law_on_monomials() {
        let r = QuantumTorus::generic();
        let s = WordAlgebra::new(&r);
        let f = s.term(r.z(1), Word::new(vec![X, Y]));
        let g = s.term(r.z(2), Word::new(vec![Y]));
        let (c, w) = s.predicted_leading(&f, &g).unwrap();
        let p = s.mul(&f, &g);
        assert_eq!(p.leading().unwrap(), (&c, &w));
    }
}
