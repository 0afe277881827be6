//! The single output record every command produces, in text or JSON.

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Error,
}

impl Verdict {
    pub fn exit_code(self) -> u8 {
        match self {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::Error => 2,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub context: String,
    pub inputs: Vec<String>,
    pub outputs: Vec<Value>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub details: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
    /// Human-readable rendering; JSON mode ignores it.
    #[serde(skip)]
    pub text: Vec<String>,
}

impl Report {
    pub fn new(command: &str, context: &str, inputs: Vec<String>) -> Report {
        Report {
            command: command.to_string(),
            context: context.to_string(),
            inputs,
            outputs: Vec::new(),
            verdict: Verdict::Pass,
            details: None,
            message: None,
            text: Vec::new(),
        }
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.text.push(s.into());
    }

    pub fn fail(mut self, verdict: Verdict, message: String) -> Report {
        self.verdict = verdict;
        self.text.push(format!("error: {message}"));
        self.message = Some(message);
        self
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            serde_json::to_string_pretty(self).expect("reports serialize")
        } else {
            self.text.join("\n")
        }
    }
}
