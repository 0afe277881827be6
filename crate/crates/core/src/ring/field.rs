use num_rational::BigRational;

use super::{BaseRing, Twist};
use crate::error::{Error, Result};
use crate::scalar::{
    BaseField, DerivationKind, DerivationSpec, FieldAutomorphismSpec, Flavor, ParamScalar, RatFunc,
};

/// A rational-function field `K(s)` with named automorphisms and derivations.
#[derive(Clone, Debug)]
pub struct FieldPreset {
    name: String,
    field: BaseField,
    derivations: [DerivationSpec; 2],
}

impl FieldPreset {
    /// Builds a preset from two (automorphism, derivation) pairs; each derivation
    /// must be a derivation for its own automorphism.
    pub fn new(name: &str, field: BaseField, one: DerivationSpec, two: DerivationSpec) -> Result<Self> {
        for d in [&one, &two] {
            if d.tau().image_of_s().field() != field {
                return Err(Error::ContextMismatch(format!(
                    "{} is not defined over {field}",
                    d.name()
                )));
            }
        }
        Ok(FieldPreset {
            name: name.to_string(),
            field,
            derivations: [one, two],
        })
    }

    /// `ℚ(s)` with `τ1 = τ2 : s ↦ -s` and zero derivations.
    pub fn qs_order2() -> FieldPreset {
        let f = BaseField::Rationals;
        let minus_s = RatFunc::s(f).neg();
        let tau = FieldAutomorphismSpec::new("s->-s", minus_s.clone(), minus_s).expect("involution");
        let d = DerivationSpec::new("0", DerivationKind::Zero, tau).expect("zero derivation");
        FieldPreset::new("QS-order2", f, d.clone(), d).expect("valid preset")
    }

    /// `𝔽₂(s)` with `τ1 = τ2 = id` and `δ1 = δ2 = d/ds`.
    pub fn f2s_dds() -> FieldPreset {
        let f = BaseField::Prime(2);
        let d = DerivationSpec::new("d/ds", DerivationKind::DDs, FieldAutomorphismSpec::identity(f))
            .expect("d/ds");
        FieldPreset::new("F2S-dds", f, d.clone(), d).expect("valid preset")
    }

    /// `𝔽₂(s)` with trivial automorphisms and derivations.
    pub fn f2s_zero() -> FieldPreset {
        let f = BaseField::Prime(2);
        let d = DerivationSpec::new("0", DerivationKind::Zero, FieldAutomorphismSpec::identity(f))
            .expect("zero derivation");
        FieldPreset::new("F2S-zero", f, d.clone(), d).expect("valid preset")
    }

    pub fn field(&self) -> BaseField {
        self.field
    }

    pub fn flavor(&self) -> Flavor {
        Flavor::RatFunc(self.field)
    }

    pub fn derivation(&self, t: Twist) -> &DerivationSpec {
        match t {
            Twist::One => &self.derivations[0],
            Twist::Two => &self.derivations[1],
        }
    }

    pub fn automorphism(&self, t: Twist) -> &FieldAutomorphismSpec {
        self.derivation(t).tau()
    }

    pub fn s(&self) -> ParamScalar {
        ParamScalar::RatFunc(RatFunc::s(self.field))
    }

    fn rf<'a>(&self, a: &'a ParamScalar) -> &'a RatFunc {
        a.as_ratfunc().expect("element of a rational-function field")
    }
}

impl BaseRing for FieldPreset {
    type Elem = ParamScalar;

    fn descriptor(&self) -> String {
        self.name.clone()
    }

    fn zero(&self) -> ParamScalar {
        ParamScalar::zero(self.flavor())
    }

    fn one(&self) -> ParamScalar {
        ParamScalar::one(self.flavor())
    }

    fn is_zero(&self, a: &ParamScalar) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &ParamScalar, b: &ParamScalar) -> ParamScalar {
        a + b
    }

    fn neg(&self, a: &ParamScalar) -> ParamScalar {
        -a
    }

    fn mul(&self, a: &ParamScalar, b: &ParamScalar) -> ParamScalar {
        a * b
    }

    fn from_scalar(&self, c: &ParamScalar) -> Result<ParamScalar> {
        match c {
            ParamScalar::RatFunc(r) if r.field() == self.field => Ok(c.clone()),
            ParamScalar::Rational(r) => ParamScalar::from_rational(self.flavor(), r),
            ParamScalar::Prime(x) if Some(x.modulus()) == self.field.prime() => {
                Ok(ParamScalar::from_i64(self.flavor(), x.value() as i64))
            }
            other => Err(Error::FlavorMismatch {
                left: self.flavor().to_string(),
                right: other.flavor().to_string(),
            }),
        }
    }

    fn int(&self, n: i64) -> ParamScalar {
        ParamScalar::from_i64(self.flavor(), n)
    }

    fn rational(&self, r: &BigRational) -> Result<ParamScalar> {
        ParamScalar::from_rational(self.flavor(), r)
    }

    fn tau(&self, t: Twist, a: &ParamScalar) -> ParamScalar {
        ParamScalar::RatFunc(self.automorphism(t).apply(self.rf(a)))
    }

    fn tau_inv(&self, t: Twist, a: &ParamScalar) -> ParamScalar {
        ParamScalar::RatFunc(self.automorphism(t).apply_inverse(self.rf(a)))
    }

    fn delta(&self, t: Twist, a: &ParamScalar) -> ParamScalar {
        ParamScalar::derive(self.derivation(t), a).expect("derivation validated at construction")
    }

    fn inverse(&self, a: &ParamScalar) -> Option<ParamScalar> {
        a.inv().ok()
    }

    fn is_division_ring(&self) -> bool {
        true
    }

    fn generators(&self) -> Vec<ParamScalar> {
        let s = self.s();
        vec![self.one(), s.clone(), s.inv().expect("s is nonzero")]
    }

    fn contains(&self, a: &ParamScalar) -> bool {
        a.flavor() == self.flavor()
    }

    fn format(&self, a: &ParamScalar) -> String {
        a.to_text()
    }

    /// Over a commutative field `δ` is determined by `δ(s)`. With `τ = id` the
    /// inner derivations are all zero; otherwise `u = δ(s)/(τ(s) - s)` is the
    /// only candidate and is checked on the generators.
    fn derivations_outer(&self) -> Option<bool> {
        for t in [Twist::One, Twist::Two] {
            let d = self.derivation(t);
            if d.is_zero_map() {
                return Some(false);
            }
            if d.tau().is_identity() {
                continue;
            }
            let s = self.s();
            let gap = self.sub(&self.tau(t, &s), &s);
            let u = self.mul(&self.delta(t, &s), &self.inverse(&gap)?);
            let inner = self.generators().iter().all(|r| {
                self.delta(t, r) == self.sub(&self.mul(&self.tau(t, r), &u), &self.mul(&u, r))
            });
            if inner {
                return Some(false);
            }
        }
        Some(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_are_well_formed() {
        let f1 = FieldPreset::qs_order2();
        let s = f1.s();
        assert_eq!(f1.tau(Twist::One, &s), -&s);
        assert!(f1.delta(Twist::Two, &s).is_zero());
        let f2 = FieldPreset::f2s_dds();
        let s2 = f2.s();
        assert_eq!(f2.delta(Twist::One, &(&s2 * &s2)), f2.zero());
        assert_eq!(f2.delta(Twist::One, &s2), f2.one());
        assert_eq!(f2.descriptor(), "F2S-dds");
    }

    #[test]
    fn innerness() {
        assert_eq!(FieldPreset::f2s_dds().derivations_outer(), Some(true));
        assert_eq!(FieldPreset::f2s_zero().derivations_outer(), Some(false));
        assert_eq!(FieldPreset::qs_order2().derivations_outer(), Some(false));
    }

    #[test]
    fn flavor_checks() {
        let f1 = FieldPreset::qs_order2();
        let f2 = FieldPreset::f2s_dds();
        assert!(f1.from_scalar(&f2.s()).is_err());
        assert!(f1.contains(&f1.s()));
        assert!(!f1.contains(&f2.s()));
    }
}
