use std::fmt;

use super::num::{term_text, BaseField, Num};

/// Dense univariate polynomial in `s` over a prime subfield, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly {
    field: BaseField,
    coeffs: Vec<Num>,
}

impl UniPoly {
    pub fn new(field: BaseField, coeffs: Vec<Num>) -> Self {
        let mut p = UniPoly { field, coeffs };
        p.trim();
        p
    }

    pub fn zero(field: BaseField) -> Self {
        UniPoly { field, coeffs: Vec::new() }
    }

    pub fn constant(c: Num) -> Self {
        UniPoly::new(c.field(), vec![c])
    }

    pub fn one(field: BaseField) -> Self {
        UniPoly::constant(Num::one(field))
    }

    /// The monomial `c * s^k`.
    pub fn monomial(c: Num, k: usize) -> Self {
        let field = c.field();
        let mut coeffs = vec![Num::zero(field); k];
        coeffs.push(c);
        UniPoly::new(field, coeffs)
    }

    pub fn field(&self) -> BaseField {
        self.field
    }

    pub fn coeffs(&self) -> &[Num] {
        &self.coeffs
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Num::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&Num> {
        self.coeffs.last()
    }

    fn coeff(&self, i: usize) -> Num {
        self.coeffs.get(i).cloned().unwrap_or_else(|| Num::zero(self.field))
    }

    pub fn add(&self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let c = (0..n).map(|i| self.coeff(i).add(&o.coeff(i))).collect();
        UniPoly::new(self.field, c)
    }

    pub fn sub(&self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let c = (0..n).map(|i| self.coeff(i).sub(&o.coeff(i))).collect();
        UniPoly::new(self.field, c)
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly::new(self.field, self.coeffs.iter().map(Num::neg).collect())
    }

    pub fn scale(&self, c: &Num) -> UniPoly {
        UniPoly::new(self.field, self.coeffs.iter().map(|x| x.mul(c)).collect())
    }

    pub fn mul(&self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero(self.field);
        }
        let mut c = vec![Num::zero(self.field); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] = c[i + j].add(&a.mul(b));
            }
        }
        UniPoly::new(self.field, c)
    }

    pub fn pow(&self, e: u32) -> UniPoly {
        let mut acc = UniPoly::one(self.field);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead_inv = d.lead().unwrap().inv().expect("field leading coefficient");
        let mut rem = self.clone();
        let mut quot = vec![Num::zero(self.field); self.coeffs.len().saturating_sub(dd).max(1)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let c = rem.lead().unwrap().mul(&lead_inv);
            let shift = rd - dd;
            quot[shift] = quot[shift].add(&c);
            rem = rem.sub(&UniPoly::monomial(c, shift).mul(d));
        }
        (UniPoly::new(self.field, quot), rem)
    }

    pub fn monic(&self) -> UniPoly {
        match self.lead() {
            None => self.clone(),
            Some(l) => self.scale(&l.inv().expect("nonzero lead")),
        }
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, o: &UniPoly) -> UniPoly {
        if self.degree() == Some(0) || o.degree() == Some(0) {
            return UniPoly::one(self.field);
        }
        let mut a = self.monic();
        let mut b = o.monic();
        // Keeping remainders monic holds back coefficient growth over ℚ.
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a
    }

    pub fn derivative(&self) -> UniPoly {
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, a)| a.mul_int(i as i64))
            .collect();
        UniPoly::new(self.field, c)
    }

    /// Canonical text without spaces, e.g. `s^2+1`, `(1/2)*s-3`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "s".to_string(),
                k => format!("s^{k}"),
            };
            let (neg, body) = c.factor_text();
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

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
