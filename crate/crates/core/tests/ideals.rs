use proptest::prelude::*;
use skewalg::checks::random_generators;
use skewalg::expr::parse;
use skewalg::ideal::{is_member, minimize_one_sided, minimize_two_sided, reduce_mod, GeneratorSet, SelectionCase, Side};
use skewalg::presets::{f1, f2, f2_zero, field_evaluator, FieldAmalgam, FieldElement};
use skewalg::random::Sampler;
use skewalg::Error;

fn el(inst: &FieldAmalgam, text: &str) -> FieldElement {
    field_evaluator(inst).eval(&parse(text).unwrap()).unwrap()
}

fn set(inst: &FieldAmalgam, side: Side, texts: &[&str]) -> GeneratorSet<skewalg::scalar::ParamScalar> {
    GeneratorSet::new(side, texts.iter().map(|t| el(inst, t)).collect()).unwrap()
}

#[test]
fn letters_generate_the_unit_ideal_in_f1() {
    let inst = f1();
    for side in [Side::Left, Side::Right] {
        let cert = minimize_one_sided(&inst, &set(&inst, side, &["x", "y"])).unwrap();
        assert_eq!(cert.case, SelectionCase::Unit);
        assert_eq!(cert.outputs, vec![inst.one()]);
        assert!(cert.verified && cert.verify(&inst));
    }
}

#[test]
fn proper_left_ideal_stays_proper() {
    let inst = f1();
    // x·y − 1 = x·(y − x⁻¹), so the ideal is generated in degree one.
    let gens = set(&inst, Side::Left, &["x*y - 1"]);
    let cert = minimize_one_sided(&inst, &gens).unwrap();
    assert_eq!(cert.case, SelectionCase::BothLeading);
    assert_eq!(cert.outputs, vec![el(&inst, "y - s^-2*x")]);
    assert!(!is_member(&inst, &inst.one(), &gens, 4).unwrap());
    let multiple = el(&inst, "(y + s)*(x*y - 1)");
    assert!(is_member(&inst, &multiple, &gens, 1).unwrap());
    assert!(reduce_mod(&inst, &multiple, &gens).unwrap().remainder.is_zero());
}

#[test]
fn reduction_remainder_differs_by_a_combination() {
    let inst = f1();
    let gens = set(&inst, Side::Left, &["x*y - s", "y + 1"]);
    let f = el(&inst, "s*x*y*x + y*x - 3");
    let red = reduce_mod(&inst, &f, &gens).unwrap();
    let combo = red.cofactors.evaluate(&inst, gens.elements());
    assert_eq!(inst.add(&red.remainder, &combo), f);
}

#[test]
fn two_sided_refusal_and_success() {
    let inst = f2();
    let cert = minimize_two_sided(&inst, &set(&inst, Side::TwoSided, &["x"])).unwrap();
    assert_eq!(cert.outputs.len(), 1);
    let zero = f2_zero();
    let refused = minimize_two_sided(&zero, &set(&zero, Side::TwoSided, &["x"]));
    assert!(matches!(refused, Err(Error::Hypothesis(_))));
}

#[test]
fn empty_and_zero_generator_sets_are_rejected() {
    let inst = f1();
    assert!(GeneratorSet::<skewalg::scalar::ParamScalar>::new(Side::Left, vec![]).is_err());
    assert!(GeneratorSet::new(Side::Left, vec![inst.zero()]).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn one_sided_outputs_are_certified(seed in any::<u64>(), right in any::<bool>()) {
        let inst = f1();
        let side = if right { Side::Right } else { Side::Left };
        let gens = random_generators(&mut Sampler::new(seed), &inst, 2, 2);
        let gens = GeneratorSet::new(side, gens).unwrap();
        let cert = minimize_one_sided(&inst, &gens).unwrap();
        prop_assert!(cert.outputs.len() <= 2);
        prop_assert!(cert.verify(&inst));
        for g in gens.elements() {
            prop_assert!(reduce_mod(&inst, g, &GeneratorSet::new(side, cert.outputs.clone()).unwrap()).unwrap().remainder.is_zero());
        }
    }

    #[test]
    fn two_sided_outputs_are_single(seed in any::<u64>()) {
        let inst = f2();
        let gens = random_generators(&mut Sampler::new(seed), &inst, 2, 2);
        let cert = minimize_two_sided(&inst, &GeneratorSet::new(Side::TwoSided, gens).unwrap()).unwrap();
        prop_assert_eq!(cert.outputs.len(), 1);
        prop_assert!(cert.verify(&inst));
    }
}
