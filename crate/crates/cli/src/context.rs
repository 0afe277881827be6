//! Named evaluation contexts and the parameter syntax accepted by `--params`.

use std::str::FromStr;

use num_rational::BigRational;
use skewalg::daha::Daha;
use skewalg::expr::parse;
use skewalg::presets::{field_evaluator, torus_evaluator, ContextName, FieldAmalgam};
use skewalg::ring::{BaseRing, QuantumTorus};
use skewalg::scalar::{Flavor, ParamScalar, ScalarContext};
use skewalg::{Error, Result};

/// `generic`, or `q=<rational>,h=<rational>` with an optional `p=<prime>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Params {
    Generic,
    Special { q: BigRational, h: BigRational, p: Option<u64> },
}

impl Params {
    pub fn scalars(&self) -> Result<ScalarContext> {
        match self {
            Params::Generic => Ok(ScalarContext::generic()),
            Params::Special { q, h, p } => {
                let flavor = p.map_or(Flavor::Rational, Flavor::Prime);
                let q = ParamScalar::from_rational(flavor, q)?;
                let h = ParamScalar::from_rational(flavor, h)?;
                ScalarContext::specialized(q, h)
            }
        }
    }
}

impl FromStr for Params {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Params, String> {
        if s == "generic" {
            return Ok(Params::Generic);
        }
        let (mut q, mut h, mut p) = (None, None, None);
        for part in s.split(',') {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| format!("expected key=value, got `{part}`"))?;
            let v = v.trim();
            let rat = || BigRational::from_str(v).map_err(|e| format!("bad value `{v}`: {e}"));
            match k.trim() {
                "q" => q = Some(rat()?),
                "h" => h = Some(rat()?),
                "t" => return Err("give h (the square root of t) instead of t".into()),
                "p" => p = Some(v.parse::<u64>().map_err(|e| format!("bad prime `{v}`: {e}"))?),
                other => return Err(format!("unknown parameter `{other}`")),
            }
        }
        match (q, h) {
            (Some(q), Some(h)) => Ok(Params::Special { q, h, p }),
            _ => Err("both q and h are required".into()),
        }
    }
}

pub enum Context {
    Torus(QuantumTorus),
    Field(FieldAmalgam),
    Daha(Box<Daha>),
}

impl Context {
    pub fn build(name: ContextName, params: &Params) -> Result<Context> {
        if let Some(inst) = name.field_amalgam() {
            if *params != Params::Generic {
                return Err(Error::InvalidArgument(format!("context {name} takes no parameters")));
            }
            return Ok(Context::Field(inst));
        }
        let scalars = params.scalars()?;
        Ok(match name {
            ContextName::Torus3 => Context::Torus(QuantumTorus::new(scalars)),
            _ => Context::Daha(Box::new(Daha::new(scalars)?)),
        })
    }

    /// Canonical text of the normal form of `text`.
    pub fn normal_form(&self, text: &str) -> Result<String> {
        let e = parse(text)?;
        Ok(match self {
            Context::Torus(r) => r.format(&torus_evaluator(r).eval(&e)?),
            Context::Field(inst) => inst.format(&field_evaluator(inst).eval(&e)?),
            Context::Daha(d) => d.instance().format(&d.normal_form(&e)?),
        })
    }
}
