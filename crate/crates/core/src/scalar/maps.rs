use super::num::BaseField;
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

/// Automorphism of K(s) given by the image of `s` together with the image of
/// `s` under its inverse. Both compositions are checked on `s` at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldAutomorphismSpec {
    name: String,
    image: RatFunc,
    inverse_image: RatFunc,
}

impl FieldAutomorphismSpec {
    pub fn new(name: &str, image: RatFunc, inverse_image: RatFunc) -> Result<Self> {
        let s = RatFunc::s(image.field());
        // τ(τ⁻¹(s)) = g'(g) and τ⁻¹(τ(s)) = g(g') must both be s.
        let forward = inverse_image.compose(&image);
        let backward = image.compose(&inverse_image);
        if forward.as_ref() != Some(&s) || backward.as_ref() != Some(&s) {
            return Err(Error::InvalidArgument(format!(
                "{name}: supplied inverse does not invert s ↦ {image}"
            )));
        }
        Ok(FieldAutomorphismSpec {
            name: name.to_string(),
            image,
            inverse_image,
        })
    }

    pub fn identity(field: BaseField) -> Self {
        let s = RatFunc::s(field);
        FieldAutomorphismSpec {
            name: "id".into(),
            image: s.clone(),
            inverse_image: s,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn image_of_s(&self) -> &RatFunc {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image == RatFunc::s(self.image.field())
    }

    pub fn apply(&self, f: &RatFunc) -> RatFunc {
        f.compose(&self.image).expect("automorphism maps nonzero to nonzero")
    }

    pub fn apply_inverse(&self, f: &RatFunc) -> RatFunc {
        f.compose(&self.inverse_image)
            .expect("automorphism maps nonzero to nonzero")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DerivationKind {
    Zero,
    /// Ordinary `d/ds`; a τ-derivation only for `τ = id`.
    DDs,
    /// The inner τ-derivation `f ↦ τ(f)·u - u·f`.
    Inner(RatFunc),
}

/// A (left) τ-derivation of K(s), paired with its automorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationSpec {
    name: String,
    kind: DerivationKind,
    tau: FieldAutomorphismSpec,
}

impl DerivationSpec {
    /// Builds the derivation and checks the twisted Leibniz law on `s`, `s^-1` and `s + 1`.
    pub fn new(name: &str, kind: DerivationKind, tau: FieldAutomorphismSpec) -> Result<Self> {
        let d = DerivationSpec {
            name: name.to_string(),
            kind,
            tau,
        };
        let field = d.tau.image.field();
        let s = RatFunc::s(field);
        let one = RatFunc::constant(super::num::Num::one(field));
        let gens = [s.clone(), s.inv().unwrap(), s.add(&one)];
        for a in &gens {
            for b in &gens {
                let lhs = d.apply(&a.mul(b))?;
                let rhs = d.tau.apply(a).mul(&d.apply(b)?).add(&d.apply(a)?.mul(b));
                if lhs != rhs {
                    return Err(Error::InvalidArgument(format!(
                        "{name} violates the twisted Leibniz law at ({a}, {b})"
                    )));
                }
            }
        }
        Ok(d)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> &DerivationKind {
        &self.kind
    }

    pub fn tau(&self) -> &FieldAutomorphismSpec {
        &self.tau
    }

    pub fn apply(&self, f: &RatFunc) -> Result<RatFunc> {
        Ok(match &self.kind {
            DerivationKind::Zero => RatFunc::zero(f.field()),
            DerivationKind::DDs => {
                if !self.tau.is_identity() {
                    return Err(Error::Unsupported(
                        "d/ds is only a τ-derivation for τ = id".into(),
                    ));
                }
                f.derivative()
            }
            DerivationKind::Inner(u) => self.tau.apply(f).mul(u).sub(&u.mul(f)),
        })
    }

    pub fn is_zero_map(&self) -> bool {
        matches!(self.kind, DerivationKind::Zero)
    }
}
