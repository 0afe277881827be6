#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use skewalg::daha::Daha;
use skewalg::expr::parse;
use skewalg::presets::{field_evaluator, torus_evaluator, ContextName};
use skewalg::ring::{BaseRing, QuantumTorus};

pub fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).to_path_buf()
}

pub fn fixture(name: &str) -> PathBuf {
    root().join("tests/fixtures").join(name)
}

pub fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skewalg"))
        .args(args)
        .env_remove("SKEWALG_SEED")
        .output()
        .expect("binary runs")
}

pub fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

pub const CORPUS_CONTEXTS: [ContextName; 4] = [ContextName::Torus3, ContextName::F1, ContextName::F2, ContextName::Daha];

pub fn corpus(ctx: ContextName) -> Vec<String> {
    let text = std::fs::read_to_string(fixture(&format!("corpus/{}.txt", ctx.name()))).expect("corpus file");
    text.lines().filter(|l| !l.trim().is_empty()).map(str::to_string).collect()
}

/// Checks `parse ∘ print ∘ parse = parse` for one expression, on the syntax tree
/// and on the evaluated element. Returns a description of the first mismatch.
pub fn round_trip(ctx: ContextName, text: &str) -> Result<(), String> {
    let e = parse(text).map_err(|err| format!("{text}: {err}"))?;
    if parse(&e.to_string()).as_ref() != Ok(&e) {
        return Err(format!("{text}: tree printed as {e} reparses differently"));
    }
    let check = |printed: String, again: Result<bool, String>| match again {
        Ok(true) => Ok(()),
        Ok(false) => Err(format!("{text}: printed as {printed}, which evaluates differently")),
        Err(err) => Err(format!("{text}: printed as {printed}: {err}")),
    };
    match ctx {
        ContextName::Torus3 => {
            let r = QuantumTorus::generic();
            let ev = torus_evaluator(&r);
            let v = ev.eval(&e).map_err(|err| err.to_string())?;
            let p = r.format(&v);
            let again = parse(&p).and_then(|x| ev.eval(&x)).map(|w| w == v).map_err(|err| err.to_string());
            check(p, again)
        }
        ContextName::Daha => {
            let d = Daha::generic().expect("generic DAHA");
            let v = d.normal_form(&e).map_err(|err| err.to_string())?;
            let p = d.instance().format(&v);
            let again = parse(&p).and_then(|x| d.normal_form(&x)).map(|w| w == v).map_err(|err| err.to_string());
            check(p, again)
        }
        field => {
            let inst = field.field_amalgam().expect("field context");
            let ev = field_evaluator(&inst);
            let v = ev.eval(&e).map_err(|err| err.to_string())?;
            let p = inst.format(&v);
            let again = parse(&p).and_then(|x| ev.eval(&x)).map(|w| w == v).map_err(|err| err.to_string());
            check(p, again)
        }
    }
}

pub fn schema_validator() -> jsonschema::Validator {
    let text = std::fs::read_to_string(root().join("../../docs/output.schema.json")).expect("schema file");
    let schema: serde_json::Value = serde_json::from_str(&text).expect("schema is JSON");
    jsonschema::validator_for(&schema).expect("schema compiles")
}

/// Invocations covering every command and verdict in JSON mode.
pub fn json_invocations() -> Vec<Vec<String>> {
    let wrong = fixture("wrong_relation.txt").display().to_string();
    let cmds: Vec<Vec<&str>> = vec![
        vec!["nf", "Y1*Y2"],
        vec!["--context", "torus3", "nf", "z3*z1"],
        vec!["--context", "F1", "nf", "z1z3"],
        vec!["daha-verify"],
        vec!["daha-verify", "--relations", &wrong],
        vec!["ideal-reduce", "--side", "L", "x", "y"],
        vec!["ideal-reduce", "--side", "R", "x*y - 1"],
        vec!["ideal-reduce", "--side", "2", "x"],
        vec!["--context", "F2S-zero", "ideal-reduce", "--side", "2", "x"],
        vec!["compat-check", "daha"],
        vec!["compat-check", "crafted"],
    ];
    cmds.into_iter()
        .map(|c| {
            let mut v: Vec<String> = c.into_iter().map(str::to_string).collect();
            v.extend(["--format".to_string(), "json".to_string()]);
            v
        })
        .collect()
}
