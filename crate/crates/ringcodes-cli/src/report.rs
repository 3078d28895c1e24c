//! Command output: a stable JSON report or a plain-text rendering.

use serde::Serialize;

/// What a command produced. The JSON form is schema-stable: `results`
/// holds one of the documented payload schemas (or a small wrapper around
/// them), so output can be fed back in as input.
#[derive(Debug, Serialize)]
pub struct Report {
    pub verb: String,
    pub inputs: serde_json::Value,
    pub warnings: Vec<String>,
    pub results: serde_json::Value,
    #[serde(skip)]
    pub text: String,
}

impl Report {
    pub fn new(verb: &str) -> Self {
        Report {
            verb: verb.to_string(),
            inputs: serde_json::Value::Null,
            warnings: Vec::new(),
            results: serde_json::Value::Null,
            text: String::new(),
        }
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            serde_json::to_string_pretty(self).expect("report serializes")
        } else {
            let mut out = String::new();
            for w in &self.warnings {
                out.push_str(&format!("warning: {w}\n"));
            }
            out.push_str(self.text.trim_end());
            out
        }
    }
}

/// A failure headed for stderr as `code=<NAME> detail=<...>`.
#[derive(Debug)]
pub struct CliError {
    pub code: String,
    pub detail: String,
    /// 1 for validation problems, 2 for computations that cannot proceed.
    pub exit: u8,
}

impl CliError {
    pub fn usage(detail: impl Into<String>) -> Self {
        CliError {
            code: "Usage".to_string(),
            detail: detail.into(),
            exit: 1,
        }
    }

    pub fn io(detail: impl Into<String>) -> Self {
        CliError {
            code: "Io".to_string(),
            detail: detail.into(),
            exit: 1,
        }
    }

    pub fn record(&self) -> String {
        // single-line record; newlines in details would break parsers
        format!(
            "code={} detail={}",
            self.code,
            self.detail.replace('\n', " ")
        )
    }
}

impl From<ringcodes::Error> for CliError {
    fn from(e: ringcodes::Error) -> Self {
        CliError {
            code: e.code().to_string(),
            detail: e.to_string(),
            exit: if e.is_validation() { 1 } else { 2 },
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError {
            code: "Json".to_string(),
            detail: e.to_string(),
            exit: 1,
        }
    }
}
