mod context;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use skewalg::checks::all_suites;
use skewalg::daha::{Daha, Relation};
use skewalg::ideal::{minimize_one_sided, minimize_two_sided, GeneratorSet, ReductionCertificate, SelectionCase, Side};
use skewalg::ore::{quadratic_compat_check, CompatReport, QuadraticData};
use skewalg::par::Execution;
use skewalg::presets::{field_evaluator, ContextName, FieldAmalgam};
use skewalg::ring::{BaseRing, QuantumTorus, Twist};
use skewalg::word::Letter;
use skewalg::Error;

use context::{Context, Params};
use report::{Report, Verdict};

#[derive(Parser, Debug)]
#[command(name = "skewalg", version, about = "Normal forms, DAHA checks and ideal reduction in amalgamated quadratic extensions")]
struct Cli {
    /// torus3, F1, F2, F2S-zero or daha (each command has its own default)
    #[arg(long, global = true)]
    context: Option<ContextName>,

    /// `generic` or `q=..,h=..[,p=..]`; applies to torus3 and daha
    #[arg(long, global = true, default_value = "generic")]
    params: Params,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Normal form of an expression (default context: daha)
    Nf { expr: String },
    /// The ten defining relations and ten round trips, or the relations in FILE
    DahaVerify {
        /// One `lhs = rhs` per line; `#` starts a comment
        #[arg(long)]
        relations: Option<PathBuf>,
        /// Run the checks one after another instead of in parallel
        #[arg(long)]
        sequential: bool,
    },
    /// Minimal generators of an ideal, with a certificate (default context: F1, or F2 for side 2)
    IdealReduce {
        /// L, R or 2
        #[arg(long)]
        side: Side,
        #[arg(required = true)]
        gens: Vec<String>,
    },
    /// Normality of the quadratic relators of a preset (or `crafted`, which must fail)
    CompatCheck { preset: String },
    /// Every property suite
    Selftest {
        #[arg(long, env = "SKEWALG_SEED", default_value_t = 2024)]
        seed: u64,
        #[arg(long)]
        sequential: bool,
    },
}

/// Failures of the mathematics exit 1; everything else the caller got wrong exits 2.
fn verdict_for(e: &Error) -> Verdict {
    match e {
        Error::Hypothesis(_) | Error::Incomplete(_) | Error::Internal(_) | Error::Incompatible(_) => Verdict::Fail,
        _ => Verdict::Error,
    }
}

fn mode(sequential: bool) -> Execution {
    if sequential {
        Execution::Sequential
    } else {
        Execution::default()
    }
}

fn nf(cli: &Cli, expr: &str) -> Report {
    let name = cli.context.unwrap_or(ContextName::Daha);
    let mut r = Report::new("nf", name.name(), vec![expr.to_string()]);
    match Context::build(name, &cli.params).and_then(|c| c.normal_form(expr)) {
        Ok(text) => {
            r.line(text.clone());
            r.outputs.push(json!(text));
            r
        }
        Err(e) => r.fail(verdict_for(&e), e.to_string()),
    }
}

fn daha_verify(cli: &Cli, relations: Option<&PathBuf>, sequential: bool) -> Report {
    let inputs = relations.map(|p| vec![p.display().to_string()]).unwrap_or_default();
    let mut r = Report::new("daha-verify", "daha", inputs);
    if cli.context.is_some_and(|c| c != ContextName::Daha) {
        return r.fail(Verdict::Error, "daha-verify only runs in the daha context".into());
    }
    let rels = match relations {
        None => None,
        Some(path) => match read_relations(path) {
            Ok(v) => Some(v),
            Err(msg) => return r.fail(Verdict::Error, msg),
        },
    };
    let daha = match cli.params.scalars().and_then(Daha::new) {
        Ok(d) => d,
        Err(e) => return r.fail(verdict_for(&e), e.to_string()),
    };
    let report = match rels {
        None => daha.verify_isomorphism(mode(sequential)),
        Some(rels) => daha.check_all(&rels, mode(sequential)),
    };
    let passed = report.records.iter().filter(|x| x.passed).count();
    for rec in &report.records {
        r.line(format!("{} {}", if rec.passed { "PASS" } else { "FAIL" }, rec.name));
        r.line(format!("  lhs: {}", rec.lhs));
        r.line(format!("  rhs: {}", rec.rhs));
        r.outputs.push(json!({"name": rec.name, "lhs": rec.lhs, "rhs": rec.rhs, "passed": rec.passed}));
    }
    r.line(format!("{passed}/{} passed", report.records.len()));
    if !report.passed() {
        r.verdict = Verdict::Fail;
    }
    r
}

fn read_relations(path: &PathBuf) -> Result<Vec<Relation>, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(|l| Relation::parse_line(l).map_err(|e| format!("{l}: {e}")))
        .collect()
}

fn case_name(c: SelectionCase) -> &'static str {
    match c {
        SelectionCase::Unit => "unit",
        SelectionCase::BothLeading => "both-leading",
        SelectionCase::SingleShape => "single-shape",
        SelectionCase::SecondShape => "second-shape",
        SelectionCase::TwoAtMinimal => "two-at-minimal",
    }
}

fn ideal_reduce(cli: &Cli, side: Side, gens: &[String]) -> Report {
    let default = if side == Side::TwoSided { ContextName::F2 } else { ContextName::F1 };
    let name = cli.context.unwrap_or(default);
    let mut r = Report::new("ideal-reduce", name.name(), gens.to_vec());
    let Some(inst) = name.field_amalgam() else {
        return r.fail(Verdict::Error, format!("ideal reduction needs a field context (F1, F2, F2S-zero), not {name}"));
    };
    match reduce(&inst, side, gens) {
        Ok(cert) => {
            let outs: Vec<String> = cert.outputs.iter().map(|o| inst.format(o)).collect();
            r.line(format!("[{}]", outs.join(", ")));
            r.line(format!("side: {}", side.name()));
            r.line(format!("case: {}", case_name(cert.case)));
            r.line(format!("degree cap: {}", cert.degree_cap));
            r.line(format!("certificate: {}", if cert.verified { "verified" } else { "FAILED" }));
            r.outputs = outs.iter().map(|o| json!(o)).collect();
            r.details = Some(json!({
                "side": side.name(),
                "case": case_name(cert.case),
                "degree_cap": cert.degree_cap,
                "verified": cert.verified,
            }));
            if !cert.verified {
                r.verdict = Verdict::Fail;
            }
            r
        }
        Err(e) => r.fail(verdict_for(&e), e.to_string()),
    }
}

fn reduce(inst: &FieldAmalgam, side: Side, gens: &[String]) -> skewalg::Result<ReductionCertificate<skewalg::scalar::ParamScalar>> {
    let ev = field_evaluator(inst);
    let elements = gens
        .iter()
        .map(|g| ev.eval(&skewalg::expr::parse(g)?))
        .collect::<skewalg::Result<Vec<_>>>()?;
    let set = GeneratorSet::new(side, elements)?;
    if side == Side::TwoSided {
        minimize_two_sided(inst, &set)
    } else {
        minimize_one_sided(inst, &set)
    }
}

fn compat_line<R: BaseRing>(r: &mut Report, ring: &R, label: &str, qd: &QuadraticData<R::Elem>) -> bool {
    let rep: CompatReport = quadratic_compat_check(ring, qd);
    match &rep.failure {
        None => {
            r.line(format!("PASS {label} ({} identities)", rep.checks));
            r.outputs.push(json!({"quadratic": label, "passed": true, "checks": rep.checks}));
        }
        Some(f) => {
            r.line(format!("FAIL {label}: {}", f.identity));
            r.line(format!("  lhs: {}", f.lhs));
            r.line(format!("  rhs: {}", f.rhs));
            r.outputs.push(json!({
                "quadratic": label, "passed": false, "checks": rep.checks,
                "identity": f.identity, "lhs": f.lhs, "rhs": f.rhs,
            }));
        }
    }
    rep.passed()
}

fn compat_check(cli: &Cli, preset: &str) -> Report {
    let mut r = Report::new("compat-check", preset, vec![preset.to_string()]);
    let scalars = match cli.params.scalars() {
        Ok(s) => s,
        Err(e) => return r.fail(verdict_for(&e), e.to_string()),
    };
    let ok = if preset == "crafted" {
        // y² − z1 with τ₂: z1 is not τ₂-fixed, so the relator cannot be normal.
        let t = QuantumTorus::new(scalars);
        let qd = QuadraticData::new(t.zero(), t.z(1), Twist::Two);
        compat_line(&mut r, &t, "y^2 - z1", &qd)
    } else {
        let name: ContextName = match preset.parse() {
            Ok(n) => n,
            Err(e) => return r.fail(Verdict::Error, format!("{e}; `crafted` is also accepted")),
        };
        match name.field_amalgam() {
            Some(inst) => both_quadratics(&mut r, &inst),
            None => match skewalg::daha::build_daha_instance(scalars) {
                Ok(inst) => both_quadratics(&mut r, &inst),
                Err(e) => return r.fail(verdict_for(&e), e.to_string()),
            },
        }
    };
    if !ok {
        r.verdict = Verdict::Fail;
    }
    r
}

fn both_quadratics<R: BaseRing>(r: &mut Report, inst: &skewalg::amalgam::AmalgamInstance<R>) -> bool {
    let x = compat_line(r, inst.ring(), "x", inst.quadratic(Letter::X));
    let y = compat_line(r, inst.ring(), "y", inst.quadratic(Letter::Y));
    x && y
}

fn selftest(seed: u64, sequential: bool) -> Report {
    let mut r = Report::new("selftest", "all", vec![seed.to_string()]);
    let suites = all_suites(seed, mode(sequential));
    for s in suites.values() {
        r.line(format!("{} {} ({} case{})", if s.passed() { "PASS" } else { "FAIL" }, s.name, s.cases, if s.cases == 1 { "" } else { "s" }));
        for f in s.failures.iter().take(5) {
            r.line(format!("  {f}"));
        }
        r.outputs.push(json!({"suite": s.name, "cases": s.cases, "failures": s.failures}));
    }
    if !suites.values().all(|s| s.passed()) {
        r.verdict = Verdict::Fail;
    }
    r
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match &cli.command {
        Command::Nf { expr } => nf(&cli, expr),
        Command::DahaVerify { relations, sequential } => daha_verify(&cli, relations.as_ref(), *sequential),
        Command::IdealReduce { side, gens } => ideal_reduce(&cli, *side, gens),
        Command::CompatCheck { preset } => compat_check(&cli, preset),
        Command::Selftest { seed, sequential } => selftest(*seed, *sequential),
    };
    let out = report.render(cli.format == Format::Json);
    if report.verdict != Verdict::Error || cli.format == Format::Json {
        println!("{out}");
    } else {
        eprintln!("{out}");
    }
    ExitCode::from(report.verdict.exit_code())
}
