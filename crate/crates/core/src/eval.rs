//! Evaluation of [`Expr`] trees in a concrete algebra.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::amalgam::{AmalgamElement, AmalgamInstance};
use crate::error::{Error, Result};
use crate::expr::Expr;
use crate::ring::{BaseRing, QuantumTorus, TorusElement};

/// The operations an evaluator needs from its target algebra.
pub trait EvalAlgebra {
    type Value: Clone + PartialEq;

    fn one(&self) -> Self::Value;
    fn rational(&self, r: &BigRational) -> Result<Self::Value>;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn neg(&self, a: &Self::Value) -> Self::Value;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    /// A two-sided inverse when one is known.
    fn invert(&self, a: &Self::Value) -> Option<Self::Value>;
    fn render(&self, a: &Self::Value) -> String;
}

impl EvalAlgebra for QuantumTorus {
    type Value = TorusElement;

    fn one(&self) -> TorusElement {
        BaseRing::one(self)
    }

    fn rational(&self, r: &BigRational) -> Result<TorusElement> {
        BaseRing::rational(self, r)
    }

    fn add(&self, a: &TorusElement, b: &TorusElement) -> TorusElement {
        BaseRing::add(self, a, b)
    }

    fn neg(&self, a: &TorusElement) -> TorusElement {
        BaseRing::neg(self, a)
    }

    fn mul(&self, a: &TorusElement, b: &TorusElement) -> TorusElement {
        BaseRing::mul(self, a, b)
    }

    fn invert(&self, a: &TorusElement) -> Option<TorusElement> {
        self.inverse(a)
    }

    fn render(&self, a: &TorusElement) -> String {
        self.format(a)
    }
}

impl<R: BaseRing> EvalAlgebra for AmalgamInstance<R> {
    type Value = AmalgamElement<R::Elem>;

    fn one(&self) -> Self::Value {
        AmalgamInstance::one(self)
    }

    fn rational(&self, r: &BigRational) -> Result<Self::Value> {
        Ok(self.constant(self.ring().rational(r)?))
    }

    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value {
        AmalgamInstance::add(self, a, b)
    }

    fn neg(&self, a: &Self::Value) -> Self::Value {
        AmalgamInstance::neg(self, a)
    }

    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value {
        AmalgamInstance::mul(self, a, b)
    }

    fn invert(&self, a: &Self::Value) -> Option<Self::Value> {
        if let Some(inv) = self.constant_inverse(a) {
            return Some(inv);
        }
        // A single letter with a unit coefficient: (c l)⁻¹ = l⁻¹ c⁻¹.
        let mut terms = a.terms();
        let (w, c) = terms.next()?;
        if terms.next().is_some() || w.len != 1 {
            return None;
        }
        let letter_inv = self.letter_inverse(w.first)?;
        let c_inv = self.constant(self.ring().inverse(c)?);
        self.certify_inverse(a, self.mul(&letter_inv, &c_inv))
    }

    fn render(&self, a: &Self::Value) -> String {
        self.format(a)
    }
}

#[derive(Clone, Debug)]
struct Binding<V> {
    value: V,
    inverse: Option<V>,
}

/// Evaluates expressions against a symbol table over an [`EvalAlgebra`].
#[derive(Clone, Debug)]
pub struct Evaluator<'a, A: EvalAlgebra> {
    alg: &'a A,
    symbols: BTreeMap<String, Binding<A::Value>>,
}

impl<'a, A: EvalAlgebra> Evaluator<'a, A> {
    pub fn new(alg: &'a A) -> Self {
        Evaluator {
            alg,
            symbols: BTreeMap::new(),
        }
    }

    pub fn algebra(&self) -> &'a A {
        self.alg
    }

    /// Binds `name`; without an explicit inverse, `name^-1` falls back to [`EvalAlgebra::invert`].
    pub fn bind(&mut self, name: &str, value: A::Value, inverse: Option<A::Value>) {
        self.symbols.insert(name.to_string(), Binding { value, inverse });
    }

    pub fn symbol_names(&self) -> impl Iterator<Item = &str> {
        self.symbols.keys().map(String::as_str)
    }

    pub fn eval(&self, e: &Expr) -> Result<A::Value> {
        let alg = self.alg;
        Ok(match e {
            Expr::Int(n) => alg.rational(&BigRational::from_integer(n.clone()))?,
            Expr::Sym(s) => self.lookup(s)?.value.clone(),
            Expr::Neg(a) => alg.neg(&self.eval(a)?),
            Expr::Add(a, b) => alg.add(&self.eval(a)?, &self.eval(b)?),
            Expr::Sub(a, b) => alg.add(&self.eval(a)?, &alg.neg(&self.eval(b)?)),
            Expr::Mul(a, b) => alg.mul(&self.eval(a)?, &self.eval(b)?),
            Expr::Div(a, b) => alg.mul(&self.eval(a)?, &self.inverse(b)?),
            Expr::Pow(a, k) => {
                let base = if *k < 0 { self.inverse(a)? } else { self.eval(a)? };
                self.power(&base, k.unsigned_abs())
            }
        })
    }

    fn lookup(&self, s: &str) -> Result<&Binding<A::Value>> {
        self.symbols
            .get(s)
            .ok_or_else(|| Error::UnknownSymbol(s.to_string()))
    }

    fn power(&self, base: &A::Value, k: u64) -> A::Value {
        let mut acc = self.alg.one();
        for _ in 0..k {
            acc = self.alg.mul(&acc, base);
        }
        acc
    }

    /// Inverse of a subexpression: products invert factorwise in reverse order,
    /// anything else must evaluate to a known unit.
    pub fn inverse(&self, e: &Expr) -> Result<A::Value> {
        let alg = self.alg;
        match e {
            Expr::Int(n) => {
                if n.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                alg.rational(&BigRational::new(BigInt::from(1), n.clone()))
            }
            Expr::Sym(s) => {
                let b = self.lookup(s)?;
                match &b.inverse {
                    Some(v) => Ok(v.clone()),
                    None => alg
                        .invert(&b.value)
                        .ok_or_else(|| Error::NotInvertible(s.clone())),
                }
            }
            Expr::Neg(a) => Ok(alg.neg(&self.inverse(a)?)),
            Expr::Mul(a, b) => Ok(alg.mul(&self.inverse(b)?, &self.inverse(a)?)),
            Expr::Div(a, b) => Ok(alg.mul(&self.eval(b)?, &self.inverse(a)?)),
            Expr::Pow(a, k) => {
                let base = if *k < 0 { self.eval(a)? } else { self.inverse(a)? };
                Ok(self.power(&base, k.unsigned_abs()))
            }
            Expr::Add(..) | Expr::Sub(..) => {
                let v = self.eval(e)?;
                alg.invert(&v).ok_or_else(|| Error::NotInvertible(e.to_string()))
            }
        }
    }
}

/// Binds `q`, `h`, `t = h²` and `z1, z2, z3` (with inverses) through `lift`.
pub fn bind_torus_symbols<A: EvalAlgebra>(
    ev: &mut Evaluator<'_, A>,
    torus: &QuantumTorus,
    lift: impl Fn(TorusElement) -> A::Value,
) {
    let sc = torus.scalars();
    let h = sc.h().clone();
    let h2 = &h * &h;
    for (name, v) in [("q", sc.q().clone()), ("h", h), ("t", h2)] {
        let inv = v.inv().expect("parameters are units");
        ev.bind(name, lift(torus.scalar(v)), Some(lift(torus.scalar(inv))));
    }
    for i in 1..=3 {
        let mut e = [0; 3];
        e[i - 1] = 1;
        let z = torus.mono(e);
        let zi = torus.inverse(&z).expect("monomials are units");
        ev.bind(&format!("z{i}"), lift(z), Some(lift(zi)));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;

    fn torus_eval(r: &QuantumTorus) -> Evaluator<'_, QuantumTorus> {
        let mut ev = Evaluator::new(r);
        bind_torus_symbols(&mut ev, r, |v| v);
        ev
    }

    #[test]
    fn torus_expressions() {
        let r = QuantumTorus::generic();
        let ev = torus_eval(&r);
        let v = ev.eval(&parse("z3*z1").unwrap()).unwrap();
        assert_eq!(r.format(&v), "q*z1*z3");
        let w = ev.eval(&parse("(z1*z3)^-1*z1*z3").unwrap()).unwrap();
        assert_eq!(w, BaseRing::one(&r));
        assert_eq!(
            ev.eval(&parse("t").unwrap()).unwrap(),
            ev.eval(&parse("h^2").unwrap()).unwrap()
        );
        assert!(matches!(
            ev.eval(&parse("(z1+z2)^-1").unwrap()),
            Err(Error::NotInvertible(_))
        ));
        assert!(matches!(
            ev.eval(&parse("z4").unwrap()),
            Err(Error::UnknownSymbol(_))
        ));
        assert_eq!(
            r.format(&ev.eval(&parse("(3/2)*q^-1*h^2").unwrap()).unwrap()),
            "(3/2)*q^-1*h^2"
        );
    }
}
