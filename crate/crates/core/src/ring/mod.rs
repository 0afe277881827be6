//! Base rings carrying two named automorphisms `τ₁, τ₂` and twisted derivations `δ₁, δ₂`.

mod field;
mod torus;

use std::fmt::Debug;

pub use field::FieldPreset;
pub use torus::{QuantumTorus, TorusElement};

use num_rational::BigRational;

use crate::error::Result;
use crate::scalar::ParamScalar;

/// Selects the pair `(τ₁, δ₁)` or `(τ₂, δ₂)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Twist {
    One,
    Two,
}

impl Twist {
    pub fn other(self) -> Twist {
        match self {
            Twist::One => Twist::Two,
            Twist::Two => Twist::One,
        }
    }
}

/// A composite `τ_{i₁}^{e₁} ∘ τ_{i₂}^{e₂} ∘ ⋯`; the leftmost factor is applied last.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Endo {
    factors: Vec<(Twist, i64)>,
}

impl Endo {
    pub fn identity() -> Endo {
        Endo::default()
    }

    pub fn tau(t: Twist) -> Endo {
        Endo {
            factors: vec![(t, 1)],
        }
    }

    pub fn tau_inv(t: Twist) -> Endo {
        Endo {
            factors: vec![(t, -1)],
        }
    }

    pub fn from_factors(factors: Vec<(Twist, i64)>) -> Endo {
        let mut e = Endo::identity();
        for f in factors {
            e.push(f);
        }
        e
    }

    fn push(&mut self, (t, e): (Twist, i64)) {
        if e == 0 {
            return;
        }
        if let Some(last) = self.factors.last_mut() {
            if last.0 == t {
                last.1 += e;
                if last.1 == 0 {
                    self.factors.pop();
                }
                return;
            }
        }
        self.factors.push((t, e));
    }

    /// `τ^(i) = τ₁ ∘ τ₂ ∘ τ₁ ∘ ⋯` with `i` factors.
    pub fn alternating(i: usize) -> Endo {
        Endo::alternating_from(Twist::One, i)
    }

    /// Alternating composite of `i` factors whose outermost factor is `first`.
    pub fn alternating_from(first: Twist, i: usize) -> Endo {
        let mut t = first;
        let mut f = Vec::with_capacity(i);
        for _ in 0..i {
            f.push((t, 1));
            t = t.other();
        }
        Endo::from_factors(f)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Endo) -> Endo {
        let mut e = self.clone();
        for f in &other.factors {
            e.push(*f);
        }
        e
    }

    pub fn inverse(&self) -> Endo {
        Endo::from_factors(self.factors.iter().rev().map(|&(t, e)| (t, -e)).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> &[(Twist, i64)] {
        &self.factors
    }

    pub fn name(&self) -> String {
        if self.factors.is_empty() {
            return "id".into();
        }
        self.factors
            .iter()
            .map(|(t, e)| {
                let i = if *t == Twist::One { 1 } else { 2 };
                if *e == 1 {
                    format!("tau{i}")
                } else {
                    format!("tau{i}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("∘")
    }
}

/// The base-ring contract: element arithmetic plus `τ₁, τ₂` (automorphisms)
/// and left `τᵢ`-derivations `δ₁, δ₂`.
///
/// Elements are plain data; every operation goes through the ring value, which
/// owns the parameters (such as `q`) the arithmetic depends on.
pub trait BaseRing: Send + Sync {
    type Elem: Clone + PartialEq + Eq + Debug + Send + Sync;

    /// Preset name (`torus3`, `QS-order2`, ...).
    fn descriptor(&self) -> String;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// Embeds a scalar of the ring's coefficient flavor.
    fn from_scalar(&self, c: &ParamScalar) -> Result<Self::Elem>;

    fn int(&self, n: i64) -> Self::Elem;

    /// Embeds a rational number; fails in characteristic `p` when `p` divides the denominator.
    fn rational(&self, r: &BigRational) -> Result<Self::Elem>;

    fn tau(&self, t: Twist, a: &Self::Elem) -> Self::Elem;
    fn tau_inv(&self, t: Twist, a: &Self::Elem) -> Self::Elem;
    fn delta(&self, t: Twist, a: &Self::Elem) -> Self::Elem;

    /// Two-sided inverse, when it exists.
    fn inverse(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn is_division_ring(&self) -> bool;

    /// Generating set used by the closure-based identity checks.
    fn generators(&self) -> Vec<Self::Elem>;

    /// Checks that `a` belongs to this ring (coefficient flavors agree).
    fn contains(&self, a: &Self::Elem) -> bool;

    fn format(&self, a: &Self::Elem) -> String;

    /// `Some(true)` when neither `δᵢ` is an inner `τᵢ`-derivation, `Some(false)`
    /// when one is, `None` when the ring cannot decide.
    fn derivations_outer(&self) -> Option<bool> {
        None
    }

    fn apply_endo(&self, e: &Endo, a: &Self::Elem) -> Self::Elem {
        let mut v = a.clone();
        for &(t, k) in e.factors().iter().rev() {
            for _ in 0..k.unsigned_abs() {
                v = if k > 0 { self.tau(t, &v) } else { self.tau_inv(t, &v) };
            }
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn endo_composition_cancels() {
        let e = Endo::alternating(3);
        assert!(e.compose(&e.inverse()).is_identity());
        assert_eq!(Endo::alternating(0), Endo::identity());
        assert_eq!(Endo::alternating(2).name(), "tau1∘tau2");
        assert_eq!(
            Endo::tau(Twist::One).compose(&Endo::tau(Twist::One)).factors(),
            &[(Twist::One, 2)]
        );
    }
}
