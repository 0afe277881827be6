//! Named contexts: the torus, the field amalgams and the DAHA.

use std::fmt;
use std::str::FromStr;

use crate::amalgam::{AmalgamElement, AmalgamInstance};
use crate::error::{Error, Result};
use crate::eval::{bind_torus_symbols, Evaluator};
use crate::ring::{BaseRing, FieldPreset, QuantumTorus};
use crate::scalar::ParamScalar;
use crate::word::Letter;

pub type FieldAmalgam = AmalgamInstance<FieldPreset>;
pub type FieldElement = AmalgamElement<ParamScalar>;

/// `x² = s²`, `y² = s² + 1` over a field preset.
pub fn field_amalgam(name: &str, k: FieldPreset) -> Result<FieldAmalgam> {
    let s = k.s();
    let s2 = k.mul(&s, &s);
    let d = k.add(&s2, &k.one());
    AmalgamInstance::new(name, k.clone(), k.zero(), s2, k.zero(), d)
}

/// `ℚ(s)` with `s ↦ -s` and zero derivations.
pub fn f1() -> FieldAmalgam {
    field_amalgam("F1", FieldPreset::qs_order2()).expect("F1 data is compatible")
}

/// `𝔽₂(s)` with identity automorphisms and `d/ds`.
pub fn f2() -> FieldAmalgam {
    field_amalgam("F2", FieldPreset::f2s_dds()).expect("F2 data is compatible")
}

/// `𝔽₂(s)` with zero derivations, where two-sided principality is not promised.
pub fn f2_zero() -> FieldAmalgam {
    field_amalgam("F2S-zero", FieldPreset::f2s_zero()).expect("F2S-zero data is compatible")
}

/// Binds `s`, `x`, `y` (with whatever inverses exist).
pub fn field_evaluator(inst: &FieldAmalgam) -> Evaluator<'_, FieldAmalgam> {
    let mut ev = Evaluator::new(inst);
    let s = inst.ring().s();
    let s_inv = s.inv().expect("s is nonzero");
    ev.bind("s", inst.constant(s), Some(inst.constant(s_inv)));
    ev.bind("x", inst.x(), inst.letter_inverse(Letter::X));
    ev.bind("y", inst.y(), inst.letter_inverse(Letter::Y));
    ev
}

pub fn torus_evaluator(r: &QuantumTorus) -> Evaluator<'_, QuantumTorus> {
    let mut ev = Evaluator::new(r);
    bind_torus_symbols(&mut ev, r, |v| v);
    ev
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ContextName {
    Torus3,
    F1,
    F2,
    F2Zero,
    Daha,
}

impl ContextName {
    pub const ALL: [ContextName; 5] = [
        ContextName::Torus3,
        ContextName::F1,
        ContextName::F2,
        ContextName::F2Zero,
        ContextName::Daha,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ContextName::Torus3 => "torus3",
            ContextName::F1 => "F1",
            ContextName::F2 => "F2",
            ContextName::F2Zero => "F2S-zero",
            ContextName::Daha => "daha",
        }
    }

    /// The field amalgam for `F1`, `F2` and `F2S-zero`.
    pub fn field_amalgam(self) -> Option<FieldAmalgam> {
        match self {
            ContextName::F1 => Some(f1()),
            ContextName::F2 => Some(f2()),
            ContextName::F2Zero => Some(f2_zero()),
            ContextName::Torus3 | ContextName::Daha => None,
        }
    }
}

impl fmt::Display for ContextName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ContextName {
    type Err = Error;

    fn from_str(s: &str) -> Result<ContextName> {
        match s {
            "torus3" | "torus" => Ok(ContextName::Torus3),
            "F1" | "f1" | "QS-order2" => Ok(ContextName::F1),
            "F2" | "f2" | "F2S-dds" => Ok(ContextName::F2),
            "F2S-zero" | "f2s-zero" => Ok(ContextName::F2Zero),
            "daha" | "DAHA" => Ok(ContextName::Daha),
            other => Err(Error::InvalidArgument(format!(
                "unknown context `{other}` (expected torus3, F1, F2, F2S-zero or daha)"
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;

    #[test]
    fn field_presets_build_and_evaluate() {
        for ctx in [ContextName::F1, ContextName::F2, ContextName::F2Zero] {
            let inst = ctx.field_amalgam().unwrap();
            let ev = field_evaluator(&inst);
            let x2 = ev.eval(&parse("x*x").unwrap()).unwrap();
            assert_eq!(x2, ev.eval(&parse("s^2").unwrap()).unwrap(), "{ctx}");
            let y2 = ev.eval(&parse("y^2 - s^2").unwrap()).unwrap();
            assert_eq!(y2, inst.one(), "{ctx}");
            let xi = ev.eval(&parse("x^-1*x").unwrap()).unwrap();
            assert_eq!(xi, inst.one(), "{ctx}");
        }
    }

    #[test]
    fn f1_twists_scalars() {
        let inst = f1();
        let ev = field_evaluator(&inst);
        let v = ev.eval(&parse("x*s + s*x").unwrap()).unwrap();
        assert!(v.is_zero());
        let f2 = f2();
        let ev = field_evaluator(&f2);
        let v = ev.eval(&parse("x*s - s*x").unwrap()).unwrap();
        assert_eq!(v, f2.one());
    }

    #[test]
    fn names_round_trip() {
        for c in ContextName::ALL {
            assert_eq!(c.name().parse::<ContextName>().unwrap(), c);
        }
        assert!("nope".parse::<ContextName>().is_err());
    }
}
