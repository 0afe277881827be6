use proptest::prelude::*;
use skewalg::daha::Daha;
use skewalg::expr::parse;
use skewalg::presets::{f1, f2, field_evaluator, torus_evaluator};
use skewalg::random::Sampler;
use skewalg::ring::{BaseRing, QuantumTorus};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn torus_print_parse(seed in any::<u64>()) {
        let r = QuantumTorus::generic();
        let t = Sampler::new(seed).torus_element(&r, 3);
        let text = r.format(&t);
        let back = torus_evaluator(&r).eval(&parse(&text).unwrap()).unwrap();
        prop_assert_eq!(back, t, "{}", text);
    }

    #[test]
    fn field_amalgam_print_parse(seed in any::<u64>(), second in any::<bool>()) {
        let inst = if second { f2() } else { f1() };
        let fl = inst.ring().flavor();
        let f = Sampler::new(seed).amalgam_element(&inst, 3, 3, |s| s.scalar(fl));
        let text = inst.format(&f);
        let back = field_evaluator(&inst).eval(&parse(&text).unwrap()).unwrap();
        prop_assert_eq!(back, f, "{}", text);
    }

    #[test]
    fn daha_print_parse(seed in any::<u64>()) {
        let daha = Daha::generic().unwrap();
        let inst = daha.instance();
        let f = Sampler::new(seed).amalgam_element(inst, 3, 2, |s| s.torus_element(inst.ring(), 2));
        let text = inst.format(&f);
        let back = daha.evaluator().eval(&parse(&text).unwrap()).unwrap();
        prop_assert_eq!(back, f, "{}", text);
    }

    #[test]
    fn expression_display_reparses(seed in any::<u64>()) {
        let inst = f1();
        let fl = inst.ring().flavor();
        let f = Sampler::new(seed).amalgam_element(&inst, 2, 3, |s| s.scalar(fl));
        let e = parse(&inst.format(&f)).unwrap();
        prop_assert_eq!(parse(&e.to_string()).unwrap(), e);
    }
}

#[test]
fn implicit_multiplication_is_rejected() {
    assert!(parse("z1z3").is_ok_and(|e| e.symbols() == ["z1z3"]) || parse("z1z3").is_err());
    let r = QuantumTorus::generic();
    assert!(torus_evaluator(&r).eval(&parse("z1z3").unwrap()).is_err());
    assert!(parse("z1 z3").is_err());
}

#[test]
fn exponents_must_be_integers() {
    assert!(parse("x^y").is_err());
    assert!(parse("x^1.5").is_err());
}

#[test]
fn only_atoms_invert() {
    let inst = f1();
    let ev = field_evaluator(&inst);
    assert!(ev.eval(&parse("x^-1").unwrap()).is_ok());
    assert!(ev.eval(&parse("(x*y+1)^-1").unwrap()).is_err());
}
