use super::*;
use crate::expr::parse;
use crate::presets::{f1, f2, f2_zero, field_evaluator, FieldAmalgam, FieldElement};
use crate::ring::QuantumTorus;

fn el(inst: &FieldAmalgam, text: &str) -> FieldElement {
    field_evaluator(inst).eval(&parse(text).unwrap()).unwrap()
}

fn set(inst: &FieldAmalgam, side: Side, texts: &[&str]) -> GeneratorSet<crate::scalar::ParamScalar> {
    GeneratorSet::new(side, texts.iter().map(|t| el(inst, t)).collect()).unwrap()
}

#[test]
fn self_reduction() {
    let inst = f1();
    let g = set(&inst, Side::Left, &["x"]);
    let red = reduce_mod(&inst, &inst.x(), &g).unwrap();
    assert!(red.remainder.is_zero());
    assert_eq!(red.cofactors.evaluate(&inst, g.elements()), inst.x());
}

#[test]
fn degree_zero_is_not_reached_by_division() {
    let inst = f1();
    let g = set(&inst, Side::Left, &["x"]);
    let one = inst.one();
    let red = reduce_mod(&inst, &one, &g).unwrap();
    assert_eq!(red.remainder, one);
    assert!(red.cofactors.terms().is_empty());
    // s² sits below the generator's degree too, even though x·x = s².
    let s2 = el(&inst, "s^2");
    assert_eq!(reduce_mod(&inst, &s2, &g).unwrap().remainder, s2);
}

#[test]
fn reduction_identity_holds() {
    let inst = f1();
    for side in [Side::Left, Side::Right, Side::TwoSided] {
        let g = set(&inst, side, &["x*y + s", "y - 2*s"]);
        let f = el(&inst, "(3*s + 1)*y*x*y + s^2*x*y + y + 7");
        let red = reduce_mod(&inst, &f, &g).unwrap();
        let back = inst.add(&red.cofactors.evaluate(&inst, g.elements()), &red.remainder);
        assert_eq!(back, f, "{side}");
        assert!(red.remainder.degree().unwrap_or(0) <= 2);
    }
}

#[test]
fn membership_oracle() {
    let inst = f1();
    let g = set(&inst, Side::Left, &["x"]);
    assert!(is_member(&inst, &inst.zero(), &g, 0).unwrap());
    assert!(is_member(&inst, &el(&inst, "s^2"), &g, 2).unwrap());
    // s² is a unit, so 1 = s^-2·x·x lies in Q·x.
    assert!(is_member(&inst, &inst.one(), &g, 1).unwrap());
    assert!(!is_member(&inst, &inst.one(), &g, 0).unwrap());
    assert!(is_member(&inst, &inst.one(), &g, -1).is_err());
}

#[test]
fn one_sided_examples() {
    let inst = f1();
    for texts in [&["x"][..], &["x", "y"], &["x + y", "x - y"]] {
        for side in [Side::Left, Side::Right] {
            let cert = minimize_one_sided(&inst, &set(&inst, side, texts)).unwrap();
            assert!(cert.verified);
            assert_eq!(cert.case, SelectionCase::Unit);
            assert_eq!(cert.outputs, vec![inst.one()], "{texts:?} {side}");
        }
    }
}

#[test]
fn proper_left_ideal() {
    let inst = f1();
    let g = set(&inst, Side::Left, &["x - s"]);
    let cert = minimize_one_sided(&inst, &g).unwrap();
    assert!(cert.verified);
    assert!(cert.outputs.len() <= 2);
    for o in &cert.outputs {
        assert!(is_member(&inst, o, &g, 6).unwrap());
    }
}

#[test]
fn two_sided_unit_and_refusals() {
    let inst = f2();
    let cert = minimize_two_sided(&inst, &set(&inst, Side::TwoSided, &["x"])).unwrap();
    assert_eq!(cert.outputs, vec![inst.one()]);
    assert!(cert.verified);
    let cert = minimize_two_sided(&inst, &set(&inst, Side::TwoSided, &["1"])).unwrap();
    assert_eq!(cert.outputs, vec![inst.one()]);
    for bad in [f2_zero(), f1()] {
        let g = set(&bad, Side::TwoSided, &["x"]);
        assert!(matches!(minimize_two_sided(&bad, &g), Err(Error::Hypothesis(_))));
    }
}

#[test]
fn two_sided_degree_two() {
    let inst = f2();
    let g = set(&inst, Side::TwoSided, &["x*y + s*x + s^3"]);
    let cert = minimize_two_sided(&inst, &g).unwrap();
    assert_eq!(cert.outputs.len(), 1);
    assert!(cert.verify(&inst));
}

#[test]
fn input_validation() {
    let inst = f1();
    assert!(GeneratorSet::new(Side::Left, Vec::<FieldElement>::new()).is_err());
    assert!(GeneratorSet::new(Side::Left, vec![inst.zero()]).is_err());
    let g = set(&inst, Side::Left, &["x"]);
    assert!(minimize_two_sided(&inst, &g).is_err());
    let t = QuantumTorus::generic();
    let beta = t.scalars().beta();
    let b = t.scalar(&beta * &beta);
    let d = t.mono([0, 0, -1]);
    let daha = AmalgamInstance::new("daha", t.clone(), t.zero(), b, t.zero(), d).unwrap();
    let g = GeneratorSet::new(Side::Left, vec![daha.x()]).unwrap();
    assert!(matches!(reduce_mod(&daha, &daha.y(), &g), Err(Error::NotDivisionRing(_))));
}

#[test]
fn minimizing_twice_is_stable() {
    let inst = f1();
    let g = set(&inst, Side::Right, &["x*y - s", "y*x*y + s^2*y"]);
    let once = minimize_one_sided(&inst, &g).unwrap();
    let again = minimize_one_sided(&inst, &GeneratorSet::new(Side::Right, once.outputs.clone()).unwrap()).unwrap();
    let view = View::new(&inst, Side::Right).unwrap();
    for f in &once.outputs {
        assert!(reduce_in_view(&view, f, &again.outputs).unwrap().remainder.is_zero());
    }
    for f in &again.outputs {
        assert!(reduce_in_view(&view, f, &once.outputs).unwrap().remainder.is_zero());
    }
}
