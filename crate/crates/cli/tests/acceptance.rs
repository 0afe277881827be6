//! One line per acceptance criterion; exits nonzero if any criterion fails or
//! runs over its time budget.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use skewalg::checks::*;
use skewalg::par::Execution;

type Outcome = Result<String, String>;

fn suites(reports: &[SuiteReport]) -> Outcome {
    let cases: usize = reports.iter().map(|r| r.cases).sum();
    match reports.iter().find(|r| !r.passed()) {
        None => Ok(format!("{cases} cases")),
        Some(r) => Err(format!("{}: {}", r.name, r.failures.first().map_or("", String::as_str))),
    }
}

fn c1(seed: u64) -> Outcome {
    let r = daha_suite(seed, 5, Execution::default());
    if r.cases != 220 {
        return Err(format!("expected 220 records, got {}", r.cases));
    }
    suites(&[r])
}

fn c7(seed: u64) -> Outcome {
    let summary = suites(&[two_sided_suite(seed, 50, Execution::default()), refusal_suite()])?;
    let code = run(&["--context", "F2S-zero", "ideal-reduce", "--side", "2", "x"]).status.code();
    if code != Some(1) {
        return Err(format!("refusal exited with {code:?}"));
    }
    Ok(summary)
}

fn c9() -> Outcome {
    let mut n = 0;
    for ctx in CORPUS_CONTEXTS {
        let lines = corpus(ctx);
        if lines.len() < 50 {
            return Err(format!("{ctx} corpus has {} expressions", lines.len()));
        }
        for l in &lines {
            round_trip(ctx, l)?;
            n += 1;
        }
    }
    let code = run(&["daha-verify"]).status.code();
    if code != Some(0) {
        return Err(format!("daha-verify exited with {code:?}"));
    }
    let wrong = fixture("wrong_relation.txt").display().to_string();
    let code = run(&["daha-verify", "--relations", &wrong]).status.code();
    if code != Some(1) {
        return Err(format!("wrong-relation fixture exited with {code:?}"));
    }
    let v = schema_validator();
    let invocations = json_invocations();
    for args in &invocations {
        let argv: Vec<&str> = args.iter().map(String::as_str).collect();
        let value: serde_json::Value =
            serde_json::from_slice(&run(&argv).stdout).map_err(|e| format!("{args:?}: {e}"))?;
        let first = v.iter_errors(&value).next().map(|e| e.to_string());
        if let Some(e) = first {
            return Err(format!("{args:?}: {e}"));
        }
    }
    Ok(format!("{n} round trips, {} JSON documents", invocations.len()))
}

fn main() -> ExitCode {
    let seed = std::env::var("SKEWALG_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(2024);
    let mode = Execution::default();
    let criteria: Vec<(&str, u64, Box<dyn Fn() -> Outcome>)> = vec![
        ("DAHA relations and round trips, generic and specialized", 60, Box::new(move || c1(seed))),
        ("normality of the quadratic relators", 5, Box::new(|| suites(&[compat_suite()]))),
        ("twisted Leibniz rule", 30, Box::new(move || suites(&[leibniz_suite(seed, 200, mode)]))),
        (
            "associativity and left/right round trip",
            120,
            Box::new(move || {
                let mut r = associativity_suites(seed, 200, mode);
                r.extend(right_form_suites(seed, 200, mode));
                suites(&r)
            }),
        ),
        ("leading-term law", 30, Box::new(move || suites(&[leading_term_suite(seed, 200, mode)]))),
        ("one-sided ideal reduction", 600, Box::new(move || suites(&[one_sided_suite(seed, 100, mode)]))),
        ("two-sided principality and refusal", 600, Box::new(move || c7(seed))),
        ("pinned identities", 1, Box::new(|| suites(&[pinned_suite()]))),
        ("command-line contract", 30, Box::new(c9)),
    ];
    println!("acceptance (seed {seed})");
    let mut ok = true;
    for (i, (name, budget, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = f();
        let took = t.elapsed();
        let over = took > Duration::from_secs(*budget);
        let (status, note) = match (&outcome, over) {
            (Ok(n), false) => ("PASS", n.clone()),
            (Ok(n), true) => ("FAIL", format!("{n}, over the {budget} s budget")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        ok &= status == "PASS";
        println!("criterion {}: {status} {name} ({note}; {:.2} s)", i + 1, took.as_secs_f64());
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
