use std::collections::BTreeMap;

use super::{AltWord, AmalgamElement, AmalgamInstance};
use crate::ring::BaseRing;
use crate::text::{join_terms, needs_parens};

/// `Σ w · r_w` with right coefficients over alternating words; zero coefficients
/// are never stored. Keys are the words themselves, so `x̂^(n)` is
/// `AltWord::ending(n, Letter::X)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmalgamRight<E> {
    terms: BTreeMap<AltWord, E>,
}

impl<E: Clone> AmalgamRight<E> {
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
}

impl<R: BaseRing> AmalgamInstance<R> {
    pub fn right_from_terms<I: IntoIterator<Item = (AltWord, R::Elem)>>(&self, it: I) -> AmalgamRight<R::Elem> {
        let mut terms = BTreeMap::new();
        for (w, c) in it {
            if self.ring().is_zero(&c) {
                continue;
            }
            let v = match terms.remove(&w) {
                Some(x) => self.ring().add(&x, &c),
                None => c,
            };
            if !self.ring().is_zero(&v) {
                terms.insert(w, v);
            }
        }
        AmalgamRight { terms }
    }

    /// Change to the right basis by descending on the leading word: `r w` is
    /// `w · (τ^w)⁻¹(r)` plus shorter terms.
    pub fn to_right_form(&self, f: &AmalgamElement<R::Elem>) -> AmalgamRight<R::Elem> {
        let ring = self.ring();
        let mut rest = f.clone();
        let mut out = Vec::new();
        loop {
            let Some((w, c)) = rest.terms().next_back().map(|(w, c)| (*w, c.clone())) else {
                break;
            };
            let c_right = ring.apply_endo(&w.endo().inverse(), &c);
            let t = self.mul(&self.basis(w), &self.constant(c_right.clone()));
            debug_assert_eq!(t.coefficient(&w), Some(&c));
            rest = self.sub(&rest, &t);
            out.push((w, c_right));
        }
        self.right_from_terms(out)
    }

    pub fn to_left_form(&self, f: &AmalgamRight<R::Elem>) -> AmalgamElement<R::Elem> {
        let mut acc = self.zero();
        for (w, c) in f.terms() {
            acc = self.add(&acc, &self.mul(&self.basis(*w), &self.constant(c.clone())));
        }
        acc
    }

    /// Text form with trailing coefficients, e.g. `x*y*(z1+z2)`.
    pub fn format_right(&self, f: &AmalgamRight<R::Elem>) -> String {
        join_terms(f.terms().map(|(w, c)| {
            let coeff = self.ring().format(c);
            if w.len == 0 {
                return if needs_parens(&coeff) { format!("({coeff})") } else { coeff };
            }
            let word = w.word().to_text();
            match coeff.as_str() {
                "1" => word,
                "-1" => format!("-{word}"),
                c if needs_parens(c) || c.starts_with('-') => format!("{word}*({c})"),
                c => format!("{word}*{c}"),
            }
        }))
    }
}
