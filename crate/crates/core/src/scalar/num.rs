use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::fp::Fp;

/// Prime subfield underneath a rational-function field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseField {
    Rationals,
    Prime(u64),
}

impl BaseField {
    pub fn characteristic(&self) -> u64 {
        match self {
            BaseField::Rationals => 0,
            BaseField::Prime(p) => *p,
        }
    }

    pub fn prime(&self) -> Option<u64> {
        match self {
            BaseField::Rationals => None,
            BaseField::Prime(p) => Some(*p),
        }
    }
}

impl fmt::Display for BaseField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseField::Rationals => write!(f, "Q"),
            BaseField::Prime(p) => write!(f, "F{p}"),
        }
    }
}

/// Element of a prime subfield (ℚ or 𝔽_p).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Num {
    Q(BigRational),
    F(Fp),
}

impl Num {
    pub fn zero(field: BaseField) -> Num {
        Num::from_i64(field, 0)
    }

    pub fn one(field: BaseField) -> Num {
        Num::from_i64(field, 1)
    }

    pub fn from_i64(field: BaseField, n: i64) -> Num {
        match field {
            BaseField::Rationals => Num::Q(BigRational::from_integer(BigInt::from(n))),
            BaseField::Prime(p) => Num::F(Fp::new(n, p)),
        }
    }

    pub fn from_rational(field: BaseField, r: &BigRational) -> Option<Num> {
        match field {
            BaseField::Rationals => Some(Num::Q(r.clone())),
            BaseField::Prime(p) => super::fp::rational_to_fp(r.numer(), r.denom(), p).map(Num::F),
        }
    }

    pub fn field(&self) -> BaseField {
        match self {
            Num::Q(_) => BaseField::Rationals,
            Num::F(x) => BaseField::Prime(x.modulus()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Num::Q(x) => x.is_zero(),
            Num::F(x) => x.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Num::Q(x) => x.is_one(),
            Num::F(x) => x.value() == 1,
        }
    }

    pub fn add(&self, o: &Num) -> Num {
        match (self, o) {
            (Num::Q(a), Num::Q(b)) => Num::Q(a + b),
            (Num::F(a), Num::F(b)) => Num::F(a.add(b)),
            _ => panic!("mixed prime subfields"),
        }
    }

    pub fn sub(&self, o: &Num) -> Num {
        match (self, o) {
            (Num::Q(a), Num::Q(b)) => Num::Q(a - b),
            (Num::F(a), Num::F(b)) => Num::F(a.sub(b)),
            _ => panic!("mixed prime subfields"),
        }
    }

    pub fn mul(&self, o: &Num) -> Num {
        match (self, o) {
            (Num::Q(a), Num::Q(b)) => Num::Q(a * b),
            (Num::F(a), Num::F(b)) => Num::F(a.mul(b)),
            _ => panic!("mixed prime subfields"),
        }
    }

    pub fn neg(&self) -> Num {
        match self {
            Num::Q(a) => Num::Q(-a),
            Num::F(a) => Num::F(a.neg()),
        }
    }

    pub fn inv(&self) -> Option<Num> {
        match self {
            Num::Q(a) if a.is_zero() => None,
            Num::Q(a) => Some(Num::Q(a.recip())),
            Num::F(a) => a.inv().map(Num::F),
        }
    }

    /// Multiplies by the integer `n` (image of `n` in the prime field).
    pub fn mul_int(&self, n: i64) -> Num {
        self.mul(&Num::from_i64(self.field(), n))
    }

    /// Canonical text of a coefficient as it appears in a product:
    /// returns `(negative, body)` where `body` is `1`, an integer or `(n/d)`.
    pub fn factor_text(&self) -> (bool, String) {
        match self {
            Num::Q(r) => rational_factor_text(r),
            Num::F(x) => (false, x.to_string()),
        }
    }
}

/// Splits a rational into sign and unsigned factor text (`3` or `(3/2)`).
pub fn rational_factor_text(r: &BigRational) -> (bool, String) {
    let neg = r.is_negative();
    let a = r.abs();
    let body = if a.denom().is_one() {
        a.numer().to_string()
    } else {
        format!("({}/{})", a.numer(), a.denom())
    };
    (neg, body)
}

/// Writes `coeff * monomial` in canonical form. `monomial` is empty for constants.
pub fn term_text(neg: bool, coeff_body: &str, monomial: &str) -> String {
    let sign = if neg { "-" } else { "" };
    if monomial.is_empty() {
        format!("{sign}{coeff_body}")
    } else if coeff_body == "1" {
        format!("{sign}{monomial}")
    } else {
        format!("{sign}{coeff_body}*{monomial}")
    }
}

impl fmt::Display for Num {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (neg, body) = self.factor_text();
        write!(f, "{}", term_text(neg, &body, ""))
    }
}
