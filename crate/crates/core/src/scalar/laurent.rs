use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::num::{rational_factor_text, term_text};

/// Element of ℚ[q^±1, h^±1], keyed by `(q-degree, h-degree)`. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Laurent {
    terms: BTreeMap<(i64, i64), BigRational>,
}

impl Laurent {
    pub fn zero() -> Laurent {
        Laurent::default()
    }

    pub fn constant(c: BigRational) -> Laurent {
        Laurent::monomial(c, 0, 0)
    }

    pub fn one() -> Laurent {
        Laurent::constant(BigRational::one())
    }

    pub fn monomial(c: BigRational, q_deg: i64, h_deg: i64) -> Laurent {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((q_deg, h_deg), c);
        }
        Laurent { terms }
    }

    pub fn q() -> Laurent {
        Laurent::monomial(BigRational::one(), 1, 0)
    }

    pub fn h() -> Laurent {
        Laurent::monomial(BigRational::one(), 0, 1)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &BigRational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    fn accumulate(terms: &mut BTreeMap<(i64, i64), BigRational>, k: (i64, i64), c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = terms.entry(k).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            terms.remove(&k);
        }
    }

    pub fn add(&self, o: &Laurent) -> Laurent {
        let mut terms = self.terms.clone();
        for (k, c) in &o.terms {
            Laurent::accumulate(&mut terms, *k, c.clone());
        }
        Laurent { terms }
    }

    pub fn neg(&self) -> Laurent {
        Laurent {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    pub fn sub(&self, o: &Laurent) -> Laurent {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Laurent) -> Laurent {
        let mut terms = BTreeMap::new();
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &o.terms {
                Laurent::accumulate(&mut terms, (a1 + a2, b1 + b2), c1 * c2);
            }
        }
        Laurent { terms }
    }

    pub fn scale(&self, c: &BigRational) -> Laurent {
        if c.is_zero() {
            return Laurent::zero();
        }
        Laurent {
            terms: self.terms.iter().map(|(k, x)| (*k, x * c)).collect(),
        }
    }

    /// Units of the Laurent ring are exactly the nonzero monomials.
    pub fn inv(&self) -> Option<Laurent> {
        if self.terms.len() != 1 {
            return None;
        }
        let (&(a, b), c) = self.terms.iter().next().unwrap();
        Some(Laurent::monomial(c.recip(), -a, -b))
    }

    pub fn pow(&self, e: i64) -> Option<Laurent> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Laurent::one();
        let mut b = base;
        let mut n = e.unsigned_abs();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            n >>= 1;
        }
        Some(acc)
    }

    /// Canonical text without spaces, terms in descending `(q, h)` order.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (&(a, b), c) in self.terms.iter().rev() {
            let mono = [("q", a), ("h", b)]
                .iter()
                .filter(|(_, e)| *e != 0)
                .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
                .collect::<Vec<_>>()
                .join("*");
            let (neg, body) = rational_factor_text(c);
            let t = term_text(neg, &body, &mono);
            if out.is_empty() {
                out.push_str(&t);
            } else if let Some(rest) = t.strip_prefix('-') {
                out.push('-');
                out.push_str(rest);
            } else {
                out.push('+');
                out.push_str(&t);
            }
        }
        out
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
