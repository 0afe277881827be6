//! Seeded property suites. Every case draws from its own seed, so a suite gives
//! the same verdicts whether its cases run sequentially or in parallel.

use std::collections::BTreeMap;

use crate::amalgam::{AmalgamElement, AmalgamInstance};
use crate::daha::{build_daha_instance, Daha};
use crate::error::Error;
use crate::expr::parse;
use crate::ideal::{is_member, minimize_one_sided, minimize_two_sided, reduce_mod, GeneratorSet, Side};
use crate::ore::{quadratic_compat_check, QuadraticData};
use crate::par::Execution;
use crate::presets::{f1, f2, f2_zero, FieldAmalgam, FieldElement};
use crate::random::Sampler;
use crate::ring::{BaseRing, FieldPreset, QuantumTorus, Twist};
use crate::scalar::{Flavor, ParamScalar, ScalarContext};
use crate::word::WordAlgebra;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn collect(name: &str, results: Vec<Option<String>>) -> SuiteReport {
        SuiteReport {
            name: name.to_string(),
            cases: results.len(),
            failures: results.into_iter().flatten().collect(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn case_seed(seed: u64, i: usize) -> u64 {
    seed ^ (i as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

fn cases(count: usize) -> Vec<usize> {
    (0..count).collect()
}

/// The ten relations and ten round trips, generically and under random
/// nonzero specializations over `ℚ` and `𝔽₇`.
pub fn daha_suite(seed: u64, specializations: usize, mode: Execution) -> SuiteReport {
    let mut s = Sampler::new(seed);
    let mut contexts = vec![("generic".to_string(), ScalarContext::generic())];
    for flavor in [Flavor::Rational, Flavor::Prime(7)] {
        let mut made = 0;
        while made < specializations {
            let (q, h) = s.parameters(flavor);
            if let Ok(ctx) = ScalarContext::specialized(q.clone(), h.clone()) {
                contexts.push((format!("q={q}, h={h}"), ctx));
                made += 1;
            }
        }
    }
    let results = mode.map(&contexts, |(label, ctx)| match Daha::new(ctx.clone()) {
        Err(e) => vec![Some(format!("{label}: {e}"))],
        Ok(d) => d
            .verify_isomorphism(Execution::Sequential)
            .records
            .into_iter()
            .map(|r| (!r.passed).then(|| format!("{label}: {}: {} != {}", r.name, r.lhs, r.rhs)))
            .collect(),
    });
    SuiteReport::collect("daha-relations", results.into_iter().flatten().collect())
}

/// Normality of both torus quadratics and both field presets, and failure of
/// the crafted `y² - z1`.
pub fn compat_suite() -> SuiteReport {
    let r = QuantumTorus::generic();
    let beta = r.scalars().beta();
    let mut results = Vec::new();
    let mut expect = |name: &str, passed: bool, want: bool| {
        results.push((passed != want).then(|| format!("{name}: expected {}", if want { "pass" } else { "failure" })));
    };
    let q1 = QuadraticData::new(r.zero(), r.scalar(&beta * &beta), Twist::One);
    let q2 = QuadraticData::new(r.zero(), r.mono([0, 0, -1]), Twist::Two);
    expect("daha x", quadratic_compat_check(&r, &q1).passed(), true);
    expect("daha y", quadratic_compat_check(&r, &q2).passed(), true);
    for (name, k) in [("F1", FieldPreset::qs_order2()), ("F2", FieldPreset::f2s_dds())] {
        let s = k.s();
        let b = k.mul(&s, &s);
        let d = k.add(&b, &k.one());
        let ok = quadratic_compat_check(&k, &QuadraticData::new(k.zero(), b, Twist::One)).passed()
            && quadratic_compat_check(&k, &QuadraticData::new(k.zero(), d, Twist::Two)).passed();
        expect(name, ok, true);
    }
    let bad = QuadraticData::new(r.zero(), r.z(1), Twist::Two);
    expect("crafted y^2 - z1", quadratic_compat_check(&r, &bad).passed(), false);
    SuiteReport::collect("compat", results)
}

/// `δ₁(ab) = τ₁(a)δ₁(b) + δ₁(a)b` on random torus pairs.
pub fn leibniz_suite(seed: u64, count: usize, mode: Execution) -> SuiteReport {
    let r = QuantumTorus::generic();
    let results = mode.map(&cases(count), |&i| {
        let mut s = Sampler::new(case_seed(seed, i));
        let (a, b) = (s.torus_element(&r, 2), s.torus_element(&r, 2));
        let t = Twist::One;
        let lhs = r.delta(t, &r.mul(&a, &b));
        let rhs = r.add(&r.mul(&r.tau(t, &a), &r.delta(t, &b)), &r.mul(&r.delta(t, &a), &b));
        (lhs != rhs).then(|| format!("case {i}: a = {}, b = {}", r.format(&a), r.format(&b)))
    });
    SuiteReport::collect("twisted-leibniz", results)
}

/// Leading coefficient of a word product is `r_I·τ^𝐣(r_J)` and nonzero.
pub fn leading_term_suite(seed: u64, count: usize, mode: Execution) -> SuiteReport {
    let r = QuantumTorus::generic();
    let alg = WordAlgebra::new(&r);
    let results = mode.map(&cases(count), |&i| {
        let mut s = Sampler::new(case_seed(seed, i));
        let coeff = |s: &mut Sampler| s.torus_element(&r, 2);
        let f = s.word_element(&alg, 3, 3, coeff);
        let g = s.word_element(&alg, 3, 3, coeff);
        if f.is_zero() || g.is_zero() {
            return None;
        }
        let got = alg.mul(&f, &g);
        let want = alg.predicted_leading(&f, &g).ok()?;
        match got.leading() {
            Ok((c, w)) if *c == want.0 && *w == want.1 && !r.is_zero(c) => None,
            _ => Some(format!("case {i}: f = {}, g = {}", alg.format(&f), alg.format(&g))),
        }
    });
    SuiteReport::collect("leading-term", results)
}

type Coeff<R> = fn(&mut Sampler, &R) -> <R as BaseRing>::Elem;

fn torus_coeff(s: &mut Sampler, r: &QuantumTorus) -> crate::ring::TorusElement {
    let terms = 1 + s.int(0, 1) as usize;
    s.torus_element(r, terms)
}

fn field_coeff(s: &mut Sampler, k: &FieldPreset) -> ParamScalar {
    s.nonzero_scalar(k.flavor())
}

fn random_element<R: BaseRing>(
    s: &mut Sampler,
    inst: &AmalgamInstance<R>,
    coeff: Coeff<R>,
    deg: usize,
    terms: usize,
) -> AmalgamElement<R::Elem> {
    s.amalgam_element(inst, deg, terms, |s| coeff(s, inst.ring()))
}

fn associativity<R: BaseRing>(name: &str, inst: &AmalgamInstance<R>, coeff: Coeff<R>, seed: u64, count: usize, mode: Execution) -> SuiteReport {
    let results = mode.map(&cases(count), |&i| {
        let mut s = Sampler::new(case_seed(seed, i));
        let f = random_element(&mut s, inst, coeff, 3, 2);
        let g = random_element(&mut s, inst, coeff, 3, 2);
        let h = random_element(&mut s, inst, coeff, 3, 2);
        let lhs = inst.mul(&inst.mul(&f, &g), &h);
        let rhs = inst.mul(&f, &inst.mul(&g, &h));
        (lhs != rhs).then(|| format!("case {i}: f = {}", inst.format(&f)))
    });
    SuiteReport::collect(name, results)
}

fn right_round_trip<R: BaseRing>(name: &str, inst: &AmalgamInstance<R>, coeff: Coeff<R>, seed: u64, count: usize, mode: Execution) -> SuiteReport {
    let results = mode.map(&cases(count), |&i| {
        let mut s = Sampler::new(case_seed(seed, i));
        let f = random_element(&mut s, inst, coeff, 4, 3);
        let back = inst.to_left_form(&inst.to_right_form(&f));
        (back != f).then(|| format!("case {i}: {}", inst.format(&f)))
    });
    SuiteReport::collect(name, results)
}

/// `(fg)h = f(gh)` on random triples in the DAHA amalgam, `F1` and `F2`.
pub fn associativity_suites(seed: u64, count: usize, mode: Execution) -> Vec<SuiteReport> {
    let daha = build_daha_instance(ScalarContext::generic()).expect("generic DAHA instance");
    vec![
        associativity("associativity/daha", &daha, torus_coeff, seed, count, mode),
        associativity("associativity/F1", &f1(), field_coeff, seed, count, mode),
        associativity("associativity/F2", &f2(), field_coeff, seed, count, mode),
    ]
}

/// Left form → right form → left form is the identity.
pub fn right_form_suites(seed: u64, count: usize, mode: Execution) -> Vec<SuiteReport> {
    let daha = build_daha_instance(ScalarContext::generic()).expect("generic DAHA instance");
    vec![
        right_round_trip("right-form/daha", &daha, torus_coeff, seed, count, mode),
        right_round_trip("right-form/F1", &f1(), field_coeff, seed, count, mode),
    ]
}

/// A random generator set: up to `max_gens` elements of degree at most `max_deg`.
pub fn random_generators(s: &mut Sampler, inst: &FieldAmalgam, max_gens: usize, max_deg: usize) -> Vec<FieldElement> {
    let n = s.int(1, max_gens as i64) as usize;
    (0..n)
        .map(|_| {
            let deg = s.int(1, max_deg as i64) as usize;
            let terms = s.int(1, 3) as usize;
            s.amalgam_of_degree(inst, deg, terms, |s| field_coeff(s, inst.ring()))
        })
        .collect()
}

fn one_sided_case(inst: &FieldAmalgam, side: Side, seed: u64) -> Result<(), String> {
    let mut s = Sampler::new(seed);
    let gens = random_generators(&mut s, inst, 3, 3);
    let set = GeneratorSet::new(side, gens).map_err(|e| e.to_string())?;
    let cert = minimize_one_sided(inst, &set).map_err(|e| e.to_string())?;
    if cert.outputs.len() > 2 {
        return Err(format!("{} output generators", cert.outputs.len()));
    }
    if !cert.verify(inst) {
        return Err("certificate does not multiply out".into());
    }
    // Members built from the outputs, and unrelated elements.
    let outputs = GeneratorSet::new(side, cert.outputs.clone()).map_err(|e| e.to_string())?;
    let mut probes = Vec::new();
    for _ in 0..2 {
        let mut f = inst.zero();
        for g in outputs.elements() {
            let c = random_element(&mut s, inst, field_coeff, 2, 2);
            let t = match side {
                Side::Right => inst.mul(g, &c),
                _ => inst.mul(&c, g),
            };
            f = inst.add(&f, &t);
        }
        probes.push(f);
        probes.push(random_element(&mut s, inst, field_coeff, 3, 3));
    }
    for f in probes {
        let rem = reduce_mod(inst, &f, &outputs).map_err(|e| e.to_string())?.remainder;
        let bound = f.degree().unwrap_or(0) as i64 + 4;
        let member = is_member(inst, &f, &outputs, bound).map_err(|e| e.to_string())?;
        if rem.is_zero() != member {
            return Err(format!(
                "reduction and oracle disagree on {} (remainder {}, oracle {member})",
                inst.format(&f),
                inst.format(&rem)
            ));
        }
    }
    Ok(())
}

/// Left ideals of `F1`: at most two generators, verified certificates, and
/// agreement between division and the membership oracle.
pub fn one_sided_suite(seed: u64, count: usize, mode: Execution) -> SuiteReport {
    let inst = f1();
    let results = mode.map(&cases(count), |&i| {
        one_sided_case(&inst, Side::Left, case_seed(seed, i))
            .err()
            .map(|e| format!("case {i}: {e}"))
    });
    SuiteReport::collect("one-sided/F1", results)
}

/// Two-sided ideals of `F2` reduce to one certified generator.
pub fn two_sided_suite(seed: u64, count: usize, mode: Execution) -> SuiteReport {
    let inst = f2();
    let results = mode.map(&cases(count), |&i| {
        let mut s = Sampler::new(case_seed(seed, i));
        let gens = random_generators(&mut s, &inst, 2, 2);
        let set = GeneratorSet::new(Side::TwoSided, gens).ok()?;
        match minimize_two_sided(&inst, &set) {
            Ok(c) if c.outputs.len() == 1 && c.verify(&inst) => None,
            Ok(c) => Some(format!("case {i}: {} generators", c.outputs.len())),
            Err(e) => Some(format!("case {i}: {e}")),
        }
    });
    SuiteReport::collect("two-sided/F2", results)
}

/// The two-sided engine must refuse when a derivation is inner.
pub fn refusal_suite() -> SuiteReport {
    let inst = f2_zero();
    let set = GeneratorSet::new(Side::TwoSided, vec![inst.x()]).expect("nonzero");
    let result = match minimize_two_sided(&inst, &set) {
        Err(Error::Hypothesis(_)) => None,
        Err(e) => Some(format!("wrong error: {e}")),
        Ok(_) => Some("F2S-zero was not refused".into()),
    };
    SuiteReport::collect("two-sided/refusal", vec![result])
}

/// Identities that are cheap enough to pin individually.
pub fn pinned_suite() -> SuiteReport {
    let daha = Daha::generic().expect("generic DAHA");
    let ev = daha.evaluator();
    let pinned = [
        ("y^2", "z3^-1"),
        ("x^2", "((h + h^-1)/2)^2"),
        ("Y1*Y2", "z3"),
        ("T^-1", "T - (h - h^-1)"),
        ("((h + h^-1)/2)^2 - ((h - h^-1)/2)^2", "1"),
    ];
    let results = pinned
        .iter()
        .map(|(l, r)| {
            let (a, b) = (ev.eval(&parse(l).ok()?), ev.eval(&parse(r).ok()?));
            match (a, b) {
                (Ok(a), Ok(b)) if a == b => None,
                _ => Some(format!("{l} = {r}")),
            }
        })
        .collect();
    SuiteReport::collect("pinned", results)
}

/// Every suite with its default size, keyed by name.
pub fn all_suites(seed: u64, mode: Execution) -> BTreeMap<String, SuiteReport> {
    let mut out = BTreeMap::new();
    let mut add = |r: SuiteReport| {
        out.insert(r.name.clone(), r);
    };
    add(daha_suite(seed, 5, mode));
    add(compat_suite());
    add(leibniz_suite(seed, 200, mode));
    add(leading_term_suite(seed, 200, mode));
    associativity_suites(seed, 200, mode).into_iter().for_each(&mut add);
    right_form_suites(seed, 200, mode).into_iter().for_each(&mut add);
    add(one_sided_suite(seed, 100, mode));
    add(two_sided_suite(seed, 50, mode));
    add(refusal_suite());
    add(pinned_suite());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass_in_both_modes() {
        for mode in [Execution::Sequential, Execution::Parallel] {
            assert!(compat_suite().passed());
            assert!(leibniz_suite(3, 10, mode).passed());
            assert!(leading_term_suite(3, 10, mode).passed());
            assert!(pinned_suite().passed());
            assert!(refusal_suite().passed());
        }
    }

    #[test]
    fn modes_give_identical_reports() {
        let a = one_sided_suite(11, 6, Execution::Sequential);
        let b = one_sided_suite(11, 6, Execution::Parallel);
        assert_eq!(a, b);
        assert!(a.passed(), "{:?}", a.failures);
    }
}
