//! The double affine Hecke algebra `ℍ_{q,t}(GL₂)` as the amalgam
//! `Q₁ *_R Q₂` over the quantum torus, with `x² = β²` and `y² = z3⁻¹`.

use std::collections::BTreeMap;

use crate::amalgam::{AmalgamElement, AmalgamInstance};
use crate::error::{Error, Result};
use crate::eval::{bind_torus_symbols, Evaluator};
use crate::expr::{parse, Expr};
use crate::par::Execution;
use crate::ring::{BaseRing, QuantumTorus, TorusElement};
use crate::scalar::ScalarContext;
use crate::word::Letter;

pub type DahaAmalgam = AmalgamInstance<QuantumTorus>;
pub type DahaElement = AmalgamElement<TorusElement>;

/// `a = 0`, `b = β²`, `c = 0`, `d = z3⁻¹` over the torus with the given parameters.
pub fn build_daha_instance(scalars: ScalarContext) -> Result<DahaAmalgam> {
    let r = QuantumTorus::new(scalars);
    let beta = r.scalars().beta();
    let b = r.scalar(&beta * &beta);
    let d = r.mono([0, 0, -1]);
    AmalgamInstance::new("daha", r.clone(), r.zero(), b, r.zero(), d)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum DahaGenerator {
    T,
    X1,
    X2,
    Y1,
    Y2,
}

impl DahaGenerator {
    pub const ALL: [DahaGenerator; 5] = [
        DahaGenerator::T,
        DahaGenerator::X1,
        DahaGenerator::X2,
        DahaGenerator::Y1,
        DahaGenerator::Y2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            DahaGenerator::T => "T",
            DahaGenerator::X1 => "X1",
            DahaGenerator::X2 => "X2",
            DahaGenerator::Y1 => "Y1",
            DahaGenerator::Y2 => "Y2",
        }
    }

    /// The image of this generator written in the amalgam's generators.
    fn image_text(self) -> &'static str {
        match self {
            DahaGenerator::T => "x + (h - h^-1)/2",
            DahaGenerator::X1 => "z1",
            DahaGenerator::X2 => "z2",
            DahaGenerator::Y1 => "z3*(x + (h - h^-1)/2)*y",
            DahaGenerator::Y2 => "z3*y*(x - (h - h^-1)/2)",
        }
    }

    /// The inverse image, derived once and certified by multiplication.
    fn inverse_text(self) -> &'static str {
        match self {
            DahaGenerator::T => "x - (h - h^-1)/2",
            DahaGenerator::X1 => "z1^-1",
            DahaGenerator::X2 => "z2^-1",
            DahaGenerator::Y1 => "z3*y*(x - (h - h^-1)/2)*z3^-1",
            DahaGenerator::Y2 => "(x + (h - h^-1)/2)*z3*y*z3^-1",
        }
    }
}

/// The images of `T, X1, X2, Y1, Y2` in `Q` together with certified inverses.
#[derive(Clone, Debug)]
pub struct DahaImages {
    images: BTreeMap<DahaGenerator, (DahaElement, DahaElement)>,
}

impl DahaImages {
    pub fn image(&self, g: DahaGenerator) -> &DahaElement {
        &self.images[&g].0
    }

    pub fn inverse(&self, g: DahaGenerator) -> &DahaElement {
        &self.images[&g].1
    }
}

/// Evaluator over `Q` knowing only the amalgam's own symbols.
fn amalgam_evaluator(inst: &DahaAmalgam) -> Evaluator<'_, DahaAmalgam> {
    let mut ev = Evaluator::new(inst);
    let lift = |t: TorusElement| inst.constant(t);
    bind_torus_symbols(&mut ev, inst.ring(), lift);
    ev.bind("x", inst.x(), inst.letter_inverse(Letter::X));
    ev.bind("y", inst.y(), inst.letter_inverse(Letter::Y));
    ev
}

pub fn build_images(inst: &DahaAmalgam) -> Result<DahaImages> {
    let ev = amalgam_evaluator(inst);
    let mut images = BTreeMap::new();
    for g in DahaGenerator::ALL {
        let img = ev.eval(&parse(g.image_text())?)?;
        let inv = ev.eval(&parse(g.inverse_text())?)?;
        let inv = inst.certify_inverse(&img, inv).ok_or_else(|| {
            Error::Internal(format!("inverse of the image of {} failed certification", g.name()))
        })?;
        images.insert(g, (img, inv));
    }
    Ok(DahaImages { images })
}

/// The DAHA instance with its images and an evaluator for mixed expressions.
#[derive(Clone, Debug)]
pub struct Daha {
    instance: DahaAmalgam,
    images: DahaImages,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationRecord {
    pub name: String,
    pub lhs: String,
    pub rhs: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationReport {
    pub records: Vec<RelationRecord>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.passed)
    }
}

/// The ten defining relations of `ℍ_{q,t}(GL₂)`, as `lhs = rhs` text.
pub const DAHA_RELATIONS: [(&str, &str); 10] = [
    ("X1*X2", "X2*X1"),
    ("Y1*Y2", "Y2*Y1"),
    ("(T - h)*(T + h^-1)", "0"),
    ("Y2^-1*X1*Y2*X1^-1", "T^2"),
    ("T^-1*Y1*T^-1", "Y2"),
    ("T*X1*T", "X2"),
    ("Y1*Y2*X1", "q*X1*Y1*Y2"),
    ("Y1*Y2*X2", "q*X2*Y1*Y2"),
    ("X1*X2*Y1", "q^-1*Y1*X1*X2"),
    ("X1*X2*Y2", "q^-1*Y2*X1*X2"),
];

/// `φ` on the amalgam generators, as DAHA expressions.
const PHI: [(&str, &str); 5] = [
    ("z1", "X1"),
    ("z2", "X2"),
    ("z3", "Y1*Y2"),
    ("x", "T - (h - h^-1)/2"),
    ("y", "Y1^-1*T"),
];

/// One relation or identity to check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub name: String,
    pub lhs: Expr,
    pub rhs: Expr,
}

impl Relation {
    pub fn parse(lhs: &str, rhs: &str) -> Result<Relation> {
        Ok(Relation {
            name: format!("{lhs} = {rhs}"),
            lhs: parse(lhs)?,
            rhs: parse(rhs)?,
        })
    }

    /// Parses a line of the form `lhs = rhs`.
    pub fn parse_line(line: &str) -> Result<Relation> {
        let (l, r) = line.split_once('=').ok_or_else(|| Error::Parse {
            pos: 0,
            msg: format!("expected `lhs = rhs`, got `{line}`"),
        })?;
        Relation::parse(l.trim(), r.trim())
    }
}

impl Daha {
    pub fn new(scalars: ScalarContext) -> Result<Daha> {
        let instance = build_daha_instance(scalars)?;
        let images = build_images(&instance)?;
        Ok(Daha { instance, images })
    }

    pub fn generic() -> Result<Daha> {
        Daha::new(ScalarContext::generic())
    }

    pub fn instance(&self) -> &DahaAmalgam {
        &self.instance
    }

    pub fn images(&self) -> &DahaImages {
        &self.images
    }

    /// Evaluator binding the amalgam symbols and the DAHA generators (through their images).
    pub fn evaluator(&self) -> Evaluator<'_, DahaAmalgam> {
        let mut ev = amalgam_evaluator(&self.instance);
        for g in DahaGenerator::ALL {
            ev.bind(
                g.name(),
                self.images.image(g).clone(),
                Some(self.images.inverse(g).clone()),
            );
        }
        ev
    }

    /// Normal form of an expression in `T^±1, X_i^±1, Y_i^±1`, amalgam symbols and scalars.
    pub fn normal_form(&self, e: &Expr) -> Result<DahaElement> {
        self.evaluator().eval(e)
    }

    pub fn defining_relations() -> Vec<Relation> {
        DAHA_RELATIONS
            .iter()
            .map(|(l, r)| Relation::parse(l, r).expect("built-in relations parse"))
            .collect()
    }

    /// `φ̃(φ(g)) = g` on `z1, z2, z3, x, y`, and `φ(φ̃(G))` evaluated back in `Q`
    /// against `φ̃(G)` for the five DAHA generators.
    pub fn round_trip_identities() -> Vec<Relation> {
        let phi: BTreeMap<String, Expr> = PHI
            .iter()
            .map(|(k, v)| (k.to_string(), parse(v).expect("built-in map parses")))
            .collect();
        let mut out = Vec::new();
        for (g, image) in PHI {
            out.push(Relation {
                name: format!("phi~(phi({g})) = {g}"),
                lhs: parse(image).expect("built-in map parses"),
                rhs: parse(g).expect("generator parses"),
            });
        }
        for g in DahaGenerator::ALL {
            let tilde = parse(g.image_text()).expect("built-in image parses");
            out.push(Relation {
                name: format!("phi(phi~({0})) = {0}", g.name()),
                lhs: tilde.substitute(&phi),
                rhs: Expr::sym(g.name()),
            });
        }
        out
    }

    pub fn check(&self, rel: &Relation) -> RelationRecord {
        let ev = self.evaluator();
        let inst = &self.instance;
        match (ev.eval(&rel.lhs), ev.eval(&rel.rhs)) {
            (Ok(l), Ok(r)) => RelationRecord {
                name: rel.name.clone(),
                passed: l == r,
                lhs: inst.format(&l),
                rhs: inst.format(&r),
            },
            (l, r) => RelationRecord {
                name: rel.name.clone(),
                passed: false,
                lhs: l.map_or_else(|e| format!("error: {e}"), |v| inst.format(&v)),
                rhs: r.map_or_else(|e| format!("error: {e}"), |v| inst.format(&v)),
            },
        }
    }

    pub fn check_all(&self, relations: &[Relation], mode: Execution) -> RelationReport {
        RelationReport {
            records: mode.map(relations, |r| self.check(r)),
        }
    }

    /// All ten relations followed by the ten round-trip identities.
    pub fn verify_isomorphism(&self, mode: Execution) -> RelationReport {
        let mut rels = Daha::defining_relations();
        rels.extend(Daha::round_trip_identities());
        self.check_all(&rels, mode)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::amalgam::AltWord;
    use crate::scalar::ParamScalar;

    fn nf(d: &Daha, s: &str) -> DahaElement {
        d.normal_form(&parse(s).unwrap()).unwrap()
    }

    #[test]
    fn pinned_identities() {
        let d = Daha::generic().unwrap();
        let q = d.instance();
        let r = q.ring();
        assert_eq!(nf(&d, "y*y"), q.constant(r.mono([0, 0, -1])));
        let beta = r.scalars().beta();
        assert_eq!(nf(&d, "x^2"), q.constant(r.scalar(&beta * &beta)));
        assert_eq!(nf(&d, "Y1*Y2"), q.constant(r.z(3)));
        assert_eq!(nf(&d, "T^-1"), nf(&d, "T - (h - h^-1)"));
        assert_eq!(nf(&d, "T*T^-1"), q.one());
        assert_eq!(nf(&d, "X1*z1^-1"), q.one());
        assert_eq!(
            nf(&d, "Y1*Y2*X1*(X1*Y1*Y2)^-1"),
            q.constant(r.scalar(r.scalars().q().clone()))
        );
        assert_eq!(nf(&d, "T*(T - 2*(h - h^-1)/2)"), q.one());
    }

    #[test]
    fn full_report_passes() {
        let d = Daha::generic().unwrap();
        let report = d.verify_isomorphism(Execution::Sequential);
        assert_eq!(report.records.len(), 20);
        for rec in &report.records {
            assert!(rec.passed, "{}: {} vs {}", rec.name, rec.lhs, rec.rhs);
        }
    }

    #[test]
    fn wrong_relation_fails() {
        let d = Daha::generic().unwrap();
        let rel = Relation::parse_line("T*X1*T = X1").unwrap();
        assert!(!d.check(&rel).passed);
    }

    #[test]
    fn specializations() {
        let one = ParamScalar::from_i64(crate::scalar::Flavor::Rational, 1);
        let d = Daha::new(ScalarContext::specialized(one.clone(), one.clone()).unwrap()).unwrap();
        assert!(d.instance().ring().scalars().alpha().is_zero());
        assert!(d.verify_isomorphism(Execution::Sequential).passed());
        let zero = ParamScalar::from_i64(crate::scalar::Flavor::Rational, 0);
        assert!(ScalarContext::specialized(one, zero).is_err());
    }

    #[test]
    fn y_commutes_by_tau2() {
        let d = Daha::generic().unwrap();
        let q = d.instance();
        let r = q.ring();
        let z = r.add(&r.z(1), &r.mono([2, -1, 1]));
        let lhs = q.mul(&q.y(), &q.constant(z.clone()));
        let rhs = q.term(r.tau(crate::ring::Twist::Two, &z), AltWord::starting(1, Letter::Y));
        assert_eq!(lhs, rhs);
    }
}
