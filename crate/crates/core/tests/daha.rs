use skewalg::checks::daha_suite;
use skewalg::daha::{Daha, DahaGenerator, Relation};
use skewalg::expr::parse;
use skewalg::par::Execution;

#[test]
fn generic_isomorphism_report() {
    let daha = Daha::generic().unwrap();
    let report = daha.verify_isomorphism(Execution::Sequential);
    assert_eq!(report.records.len(), 20);
    assert!(report.passed(), "{:#?}", report.records.iter().filter(|r| !r.passed).collect::<Vec<_>>());
    assert_eq!(report, daha.verify_isomorphism(Execution::Parallel));
}

#[test]
fn specializations_pass() {
    let r = daha_suite(5, 5, Execution::default());
    assert!(r.passed(), "{:?}", r.failures);
    assert_eq!(r.cases, 220);
}

#[test]
fn wrong_relation_is_caught() {
    let daha = Daha::generic().unwrap();
    let rec = daha.check(&Relation::parse_line("Y1*Y2*X1 = X1*Y1*Y2").unwrap());
    assert!(!rec.passed);
    assert_ne!(rec.lhs, rec.rhs);
}

#[test]
fn images_have_certified_inverses() {
    let daha = Daha::generic().unwrap();
    let inst = daha.instance();
    for g in DahaGenerator::ALL {
        let (a, b) = (daha.images().image(g), daha.images().inverse(g));
        assert_eq!(inst.mul(a, b), inst.one(), "{}", g.name());
        assert_eq!(inst.mul(b, a), inst.one(), "{}", g.name());
    }
}

#[test]
fn pinned_normal_forms() {
    let daha = Daha::generic().unwrap();
    let nf = |s: &str| daha.instance().format(&daha.normal_form(&parse(s).unwrap()).unwrap());
    assert_eq!(nf("Y1*Y2"), "z3");
    assert_eq!(nf("T*T^-1"), "1");
    assert_eq!(nf("Y1*Y2*X1*(X1*Y1*Y2)^-1"), "q");
    assert_eq!(nf("z3*z1"), "q*z1*z3");
}
