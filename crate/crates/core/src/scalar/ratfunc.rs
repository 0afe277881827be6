use std::fmt;

use super::num::{BaseField, Num};
use super::unipoly::UniPoly;

/// Element of K(s): coprime numerator and monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: UniPoly,
    den: UniPoly,
}

impl RatFunc {
    /// Builds `num/den` in lowest terms. Returns `None` for a zero denominator.
    pub fn new(num: UniPoly, den: UniPoly) -> Option<RatFunc> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(RatFunc::zero(num.field()));
        }
        let g = num.gcd(&den);
        let (n, _) = num.div_rem(&g);
        let (d, _) = den.div_rem(&g);
        let lead_inv = d.lead().unwrap().inv().expect("field leading coefficient");
        Some(RatFunc {
            num: n.scale(&lead_inv),
            den: d.scale(&lead_inv),
        })
    }

    pub fn from_poly(p: UniPoly) -> RatFunc {
        let field = p.field();
        RatFunc {
            num: p,
            den: UniPoly::one(field),
        }
    }

    pub fn zero(field: BaseField) -> RatFunc {
        RatFunc {
            num: UniPoly::zero(field),
            den: UniPoly::one(field),
        }
    }

    pub fn constant(c: Num) -> RatFunc {
        RatFunc::from_poly(UniPoly::constant(c))
    }

    pub fn s(field: BaseField) -> RatFunc {
        RatFunc::from_poly(UniPoly::monomial(Num::one(field), 1))
    }

    pub fn field(&self) -> BaseField {
        self.num.field()
    }

    pub fn numer(&self) -> &UniPoly {
        &self.num
    }

    pub fn denom(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn add(&self, o: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            if self.den.is_one() {
                return RatFunc::from_poly(self.num.add(&o.num));
            }
            return RatFunc::new(self.num.add(&o.num), self.den.clone()).unwrap();
        }
        let n = self.num.mul(&o.den).add(&o.num.mul(&self.den));
        RatFunc::new(n, self.den.mul(&o.den)).unwrap()
    }

    pub fn sub(&self, o: &RatFunc) -> RatFunc {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero(self.field());
        }
        // Both inputs are reduced, so only cross factors can cancel.
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let n = self.num.div_rem(&g1).0.mul(&o.num.div_rem(&g2).0);
        let d = self.den.div_rem(&g2).0.mul(&o.den.div_rem(&g1).0);
        let lead_inv = d.lead().unwrap().inv().expect("field leading coefficient");
        RatFunc {
            num: n.scale(&lead_inv),
            den: d.scale(&lead_inv),
        }
    }

    pub fn inv(&self) -> Option<RatFunc> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, o: &RatFunc) -> Option<RatFunc> {
        o.inv().map(|i| self.mul(&i))
    }

    pub fn pow(&self, e: i64) -> Option<RatFunc> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = RatFunc::constant(Num::one(self.field()));
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Some(acc)
    }

    /// d/ds by the quotient rule.
    pub fn derivative(&self) -> RatFunc {
        let n = self
            .num
            .derivative()
            .mul(&self.den)
            .sub(&self.num.mul(&self.den.derivative()));
        RatFunc::new(n, self.den.mul(&self.den)).unwrap()
    }

    /// Substitutes `s := image` (a field endomorphism when `image` is not constant).
    pub fn compose(&self, image: &RatFunc) -> Option<RatFunc> {
        let n = eval_poly(&self.num, image);
        let d = eval_poly(&self.den, image);
        n.div(&d)
    }

    /// Canonical text, e.g. `s^2+1` or `(s^2+1)/(s^3)`.
    pub fn to_text(&self) -> String {
        if self.den.is_one() {
            self.num.to_text()
        } else {
            format!("({})/({})", self.num.to_text(), self.den.to_text())
        }
    }
}

fn eval_poly(p: &UniPoly, at: &RatFunc) -> RatFunc {
    let mut acc = RatFunc::zero(p.field());
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(at).add(&RatFunc::constant(c.clone()));
    }
    acc
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
