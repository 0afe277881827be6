//! Exact coefficient arithmetic.
//!
//! [`ParamScalar`] is a tagged value of one of four flavors: rationals, a prime
//! field, the parameter Laurent ring ℚ[q^±1, h^±1] (`h` stands for `t^{1/2}`),
//! or a univariate rational-function field K(s). Arithmetic never coerces
//! between flavors: the checked operations report a mismatch, and the
//! operator impls (used internally once a context has been validated) panic.

mod fp;
mod laurent;
mod maps;
mod num;
mod ratfunc;
mod unipoly;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use fp::{is_prime, Fp};
pub use laurent::Laurent;
pub use maps::{DerivationKind, DerivationSpec, FieldAutomorphismSpec};
pub use num::{BaseField, Num};
pub use ratfunc::RatFunc;
pub use unipoly::UniPoly;

use crate::error::{Error, Result};

/// Which coefficient domain a [`ParamScalar`] lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    Rational,
    Prime(u64),
    Laurent,
    RatFunc(BaseField),
}

impl Flavor {
    pub fn characteristic(&self) -> u64 {
        match self {
            Flavor::Rational | Flavor::Laurent => 0,
            Flavor::Prime(p) => *p,
            Flavor::RatFunc(k) => k.characteristic(),
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Flavor::Rational => write!(f, "rational"),
            Flavor::Prime(p) => write!(f, "prime-field({p})"),
            Flavor::Laurent => write!(f, "param-laurent"),
            Flavor::RatFunc(k) => write!(f, "ratfunc({k})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ParamScalar {
    Rational(BigRational),
    Prime(Fp),
    Laurent(Laurent),
    RatFunc(RatFunc),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl ParamScalar {
    pub fn from_i64(flavor: Flavor, n: i64) -> ParamScalar {
        ParamScalar::from_rational(flavor, &BigRational::from_integer(BigInt::from(n)))
            .expect("integers embed in every flavor")
    }

    /// Embeds a rational; fails in `F_p` when `p` divides the denominator.
    pub fn from_rational(flavor: Flavor, r: &BigRational) -> Result<ParamScalar> {
        Ok(match flavor {
            Flavor::Rational => ParamScalar::Rational(r.clone()),
            Flavor::Prime(p) => ParamScalar::Prime(
                fp::rational_to_fp(r.numer(), r.denom(), p).ok_or(Error::DivisionByZero)?,
            ),
            Flavor::Laurent => ParamScalar::Laurent(Laurent::constant(r.clone())),
            Flavor::RatFunc(k) => ParamScalar::RatFunc(RatFunc::constant(
                Num::from_rational(k, r).ok_or(Error::DivisionByZero)?,
            )),
        })
    }

    pub fn zero(flavor: Flavor) -> ParamScalar {
        ParamScalar::from_i64(flavor, 0)
    }

    pub fn one(flavor: Flavor) -> ParamScalar {
        ParamScalar::from_i64(flavor, 1)
    }

    pub fn flavor(&self) -> Flavor {
        match self {
            ParamScalar::Rational(_) => Flavor::Rational,
            ParamScalar::Prime(x) => Flavor::Prime(x.modulus()),
            ParamScalar::Laurent(_) => Flavor::Laurent,
            ParamScalar::RatFunc(f) => Flavor::RatFunc(f.field()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            ParamScalar::Rational(x) => x.is_zero(),
            ParamScalar::Prime(x) => x.is_zero(),
            ParamScalar::Laurent(x) => x.is_zero(),
            ParamScalar::RatFunc(x) => x.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            ParamScalar::Rational(x) => x.is_one(),
            ParamScalar::Prime(x) => x.value() == 1,
            ParamScalar::Laurent(x) => x.is_one(),
            ParamScalar::RatFunc(x) => x.is_one(),
        }
    }

    fn mismatch(&self, o: &ParamScalar) -> Error {
        Error::FlavorMismatch {
            left: self.flavor().to_string(),
            right: o.flavor().to_string(),
        }
    }

    pub fn checked_add(&self, o: &ParamScalar) -> Result<ParamScalar> {
        Ok(match (self, o) {
            (ParamScalar::Rational(a), ParamScalar::Rational(b)) => ParamScalar::Rational(a + b),
            (ParamScalar::Prime(a), ParamScalar::Prime(b)) if a.modulus() == b.modulus() => {
                ParamScalar::Prime(a.add(b))
            }
            (ParamScalar::Laurent(a), ParamScalar::Laurent(b)) => ParamScalar::Laurent(a.add(b)),
            (ParamScalar::RatFunc(a), ParamScalar::RatFunc(b)) if a.field() == b.field() => {
                ParamScalar::RatFunc(a.add(b))
            }
            _ => return Err(self.mismatch(o)),
        })
    }

    pub fn checked_sub(&self, o: &ParamScalar) -> Result<ParamScalar> {
        self.checked_add(&o.neg_ref())
    }

    pub fn checked_mul(&self, o: &ParamScalar) -> Result<ParamScalar> {
        Ok(match (self, o) {
            (ParamScalar::Rational(a), ParamScalar::Rational(b)) => ParamScalar::Rational(a * b),
            (ParamScalar::Prime(a), ParamScalar::Prime(b)) if a.modulus() == b.modulus() => {
                ParamScalar::Prime(a.mul(b))
            }
            (ParamScalar::Laurent(a), ParamScalar::Laurent(b)) => ParamScalar::Laurent(a.mul(b)),
            (ParamScalar::RatFunc(a), ParamScalar::RatFunc(b)) if a.field() == b.field() => {
                ParamScalar::RatFunc(a.mul(b))
            }
            _ => return Err(self.mismatch(o)),
        })
    }

    pub fn checked_div(&self, o: &ParamScalar) -> Result<ParamScalar> {
        if self.flavor() != o.flavor() {
            return Err(self.mismatch(o));
        }
        self.checked_mul(&o.inv()?)
    }

    /// The `scalar_arith` entry point.
    pub fn arith(a: &ParamScalar, b: &ParamScalar, op: ArithOp) -> Result<ParamScalar> {
        match op {
            ArithOp::Add => a.checked_add(b),
            ArithOp::Sub => a.checked_sub(b),
            ArithOp::Mul => a.checked_mul(b),
            ArithOp::Div => a.checked_div(b),
        }
    }

    fn neg_ref(&self) -> ParamScalar {
        match self {
            ParamScalar::Rational(a) => ParamScalar::Rational(-a),
            ParamScalar::Prime(a) => ParamScalar::Prime(a.neg()),
            ParamScalar::Laurent(a) => ParamScalar::Laurent(a.neg()),
            ParamScalar::RatFunc(a) => ParamScalar::RatFunc(a.neg()),
        }
    }

    /// Multiplicative inverse. In the Laurent flavor only monomials are units.
    pub fn inv(&self) -> Result<ParamScalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            ParamScalar::Rational(a) => ParamScalar::Rational(a.recip()),
            ParamScalar::Prime(a) => ParamScalar::Prime(a.inv().ok_or(Error::DivisionByZero)?),
            ParamScalar::Laurent(a) => ParamScalar::Laurent(
                a.inv().ok_or_else(|| Error::NotInvertible(a.to_text()))?,
            ),
            ParamScalar::RatFunc(a) => ParamScalar::RatFunc(a.inv().ok_or(Error::DivisionByZero)?),
        })
    }

    pub fn pow(&self, e: i64) -> Result<ParamScalar> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = ParamScalar::one(self.flavor());
        let mut b = base;
        let mut n = e.unsigned_abs();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &b;
            }
            n >>= 1;
            if n > 0 {
                b = &b * &b;
            }
        }
        Ok(acc)
    }

    /// Evaluates a parameter-Laurent scalar at nonzero values for `q` and `h`.
    /// `t` may be supplied instead of `h` only when `h` occurs to even powers.
    pub fn specialize(&self, assignment: &BTreeMap<String, ParamScalar>) -> Result<ParamScalar> {
        let ParamScalar::Laurent(l) = self else {
            return Err(Error::FlavorMismatch {
                left: self.flavor().to_string(),
                right: Flavor::Laurent.to_string(),
            });
        };
        let q = assignment.get("q");
        let h = assignment.get("h");
        let target = q
            .or(h)
            .map(ParamScalar::flavor)
            .ok_or_else(|| Error::MissingParameter("q".into()))?;
        for (name, v) in assignment {
            if v.flavor() != target {
                return Err(Error::FlavorMismatch {
                    left: target.to_string(),
                    right: v.flavor().to_string(),
                });
            }
            if v.is_zero() {
                return Err(Error::ZeroSpecialization(name.clone()));
            }
        }
        let mut acc = ParamScalar::zero(target);
        for (&(a, b), c) in l.terms() {
            let mut term = ParamScalar::from_rational(target, c)?;
            if a != 0 {
                let qv = q.ok_or_else(|| Error::MissingParameter("q".into()))?;
                term = &term * &qv.pow(a)?;
            }
            if b != 0 {
                let hv = h.ok_or_else(|| Error::MissingParameter("h".into()))?;
                term = &term * &hv.pow(b)?;
            }
            acc = &acc + &term;
        }
        Ok(acc)
    }

    /// Applies a derivation of K(s) to a rational-function scalar.
    pub fn derive(d: &DerivationSpec, f: &ParamScalar) -> Result<ParamScalar> {
        match f {
            ParamScalar::RatFunc(r) => Ok(ParamScalar::RatFunc(d.apply(r)?)),
            other => Err(Error::FlavorMismatch {
                left: other.flavor().to_string(),
                right: "ratfunc".into(),
            }),
        }
    }

    pub fn as_ratfunc(&self) -> Option<&RatFunc> {
        match self {
            ParamScalar::RatFunc(r) => Some(r),
            _ => None,
        }
    }

    /// Canonical text form.
    pub fn to_text(&self) -> String {
        match self {
            ParamScalar::Rational(r) => Num::Q(r.clone()).to_string(),
            ParamScalar::Prime(x) => x.to_string(),
            ParamScalar::Laurent(l) => l.to_text(),
            ParamScalar::RatFunc(r) => r.to_text(),
        }
    }
}

impl fmt::Display for ParamScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Add for &ParamScalar {
    type Output = ParamScalar;
    fn add(self, o: &ParamScalar) -> ParamScalar {
        self.checked_add(o).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for &ParamScalar {
    type Output = ParamScalar;
    fn sub(self, o: &ParamScalar) -> ParamScalar {
        self.checked_sub(o).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul for &ParamScalar {
    type Output = ParamScalar;
    fn mul(self, o: &ParamScalar) -> ParamScalar {
        self.checked_mul(o).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &ParamScalar {
    type Output = ParamScalar;
    fn neg(self) -> ParamScalar {
        self.neg_ref()
    }
}

/// Values of the deformation parameters `q` and `h = t^{1/2}` in one flavor.
///
/// `generic()` keeps both as Laurent indeterminates; `specialized` evaluates them
/// in ℚ or 𝔽_p. Characteristic 2 is rejected because `α` and `β` divide by 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarContext {
    flavor: Flavor,
    q: ParamScalar,
    h: ParamScalar,
}

impl ScalarContext {
    pub fn generic() -> ScalarContext {
        ScalarContext {
            flavor: Flavor::Laurent,
            q: ParamScalar::Laurent(Laurent::q()),
            h: ParamScalar::Laurent(Laurent::h()),
        }
    }

    pub fn specialized(q: ParamScalar, h: ParamScalar) -> Result<ScalarContext> {
        let flavor = q.flavor();
        if h.flavor() != flavor {
            return Err(q.mismatch(&h));
        }
        if !matches!(flavor, Flavor::Rational | Flavor::Prime(_)) {
            return Err(Error::InvalidArgument(format!(
                "parameters must be specialized to rational or prime-field values, got {flavor}"
            )));
        }
        if flavor.characteristic() == 2 {
            return Err(Error::CharacteristicTwo("alpha = (h - h^-1)/2".into()));
        }
        if q.is_zero() {
            return Err(Error::ZeroSpecialization("q".into()));
        }
        if h.is_zero() {
            return Err(Error::ZeroSpecialization("h".into()));
        }
        Ok(ScalarContext { flavor, q, h })
    }

    /// Specializes the generic context through `ParamScalar::specialize`.
    pub fn specialize(&self, assignment: &BTreeMap<String, ParamScalar>) -> Result<ScalarContext> {
        let q = self.q.specialize(assignment)?;
        let h = self.h.specialize(assignment)?;
        ScalarContext::specialized(q, h)
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn q(&self) -> &ParamScalar {
        &self.q
    }

    pub fn h(&self) -> &ParamScalar {
        &self.h
    }

    pub fn int(&self, n: i64) -> ParamScalar {
        ParamScalar::from_i64(self.flavor, n)
    }

    pub fn q_pow(&self, e: i64) -> ParamScalar {
        self.q.pow(e).expect("q is a unit")
    }

    fn half(&self) -> ParamScalar {
        self.int(2).inv().expect("characteristic is not 2")
    }

    /// `α = (h - h^-1)/2`.
    pub fn alpha(&self) -> ParamScalar {
        let hinv = self.h.inv().expect("h is a unit");
        &(&self.h - &hinv) * &self.half()
    }

    /// `β = (h + h^-1)/2`, so that `β² - α² = 1`.
    pub fn beta(&self) -> ParamScalar {
        let hinv = self.h.inv().expect("h is a unit");
        &(&self.h + &hinv) * &self.half()
    }
}
