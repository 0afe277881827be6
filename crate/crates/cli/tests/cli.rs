mod common;

use common::*;

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

fn golden(name: &str, args: &[&str]) {
    let want = std::fs::read_to_string(root().join("tests/golden").join(name)).unwrap();
    let out = run(args);
    assert_eq!(stdout(&out), want, "{name}");
}

#[test]
fn documented_examples() {
    assert_eq!(stdout(&run(&["nf", "Y1*Y2"])).trim(), "z3");
    assert_eq!(stdout(&run(&["nf", "T*T^-1"])).trim(), "1");
    assert_eq!(stdout(&run(&["--context", "torus3", "nf", "z3*z1"])).trim(), "q*z1*z3");
    assert_eq!(stdout(&run(&["--context", "F1", "nf", "0*x"])).trim(), "0");
    let out = run(&["--context", "F1", "ideal-reduce", "--side", "L", "x", "y"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().next(), Some("[1]"));
}

#[test]
fn golden_outputs() {
    golden("nf_Y1.txt", &["nf", "Y1"]);
    golden("nf_Y2.txt", &["nf", "Y2"]);
    golden("daha_verify.txt", &["daha-verify", "--sequential"]);
    golden("ideal_reduce_proper.txt", &["--context", "F1", "ideal-reduce", "--side", "L", "x*y - 1"]);
    golden("compat_crafted.txt", &["compat-check", "crafted"]);
}

#[test]
fn exit_status_contract() {
    let wrong = fixture("wrong_relation.txt").display().to_string();
    let ok = fixture("relations_ok.txt").display().to_string();
    assert_eq!(code(&["daha-verify"]), 0);
    assert_eq!(code(&["daha-verify", "--relations", &ok]), 0);
    assert_eq!(code(&["daha-verify", "--relations", &wrong]), 1);
    assert_eq!(code(&["--params", "q=2,h=3", "daha-verify"]), 0);
    assert_eq!(code(&["--params", "q=2,h=3,p=7", "daha-verify"]), 0);
    assert_eq!(code(&["--params", "q=2,h=1,p=2", "daha-verify"]), 2);
    assert_eq!(code(&["--params", "q=0,h=1", "daha-verify"]), 2);
    assert_eq!(code(&["--context", "F2S-zero", "ideal-reduce", "--side", "2", "x"]), 1);
    assert_eq!(code(&["--context", "F1", "ideal-reduce", "--side", "2", "x"]), 1);
    assert_eq!(code(&["compat-check", "crafted"]), 1);
    assert_eq!(code(&["compat-check", "F2"]), 0);
    assert_eq!(code(&["nf", "z1z3"]), 2);
    assert_eq!(code(&["nf", "x^1.5"]), 2);
    assert_eq!(code(&["--context", "F1", "nf", "(x+1)^-1"]), 2);
    assert_eq!(code(&["--context", "daha", "ideal-reduce", "--side", "L", "x"]), 2);
    assert_eq!(code(&["ideal-reduce", "--side", "Q", "x"]), 2);
    assert_eq!(code(&["compat-check", "nowhere"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["daha-verify", "--relations", "/nonexistent/file"]), 2);
}

#[test]
fn seed_comes_from_the_environment() {
    let help = stdout(&run(&["selftest", "--help"]));
    assert!(help.contains("SKEWALG_SEED"), "{help}");
}

#[test]
fn corpus_round_trips() {
    for ctx in CORPUS_CONTEXTS {
        let lines = corpus(ctx);
        assert!(lines.len() >= 50, "{ctx}: {} expressions", lines.len());
        for l in &lines {
            round_trip(ctx, l).unwrap();
        }
    }
}

#[test]
fn json_outputs_match_the_schema() {
    let v = schema_validator();
    for args in json_invocations() {
        let argv: Vec<&str> = args.iter().map(String::as_str).collect();
        let out = run(&argv);
        let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}"));
        let errors: Vec<String> = v.iter_errors(&value).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{args:?}: {errors:?}");
        let verdict = value["verdict"].as_str().unwrap();
        let expected = match out.status.code() {
            Some(0) => "pass",
            Some(1) => "fail",
            _ => "error",
        };
        assert_eq!(verdict, expected, "{args:?}");
    }
}
