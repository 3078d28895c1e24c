//! Input payload resolution: file path, `-` for stdin, or inline JSON.

use std::io::Read;

use ringcodes::json::{ComponentBundleJson, CyclicGeneratorsJson, RingMatrixJson};

use crate::report::CliError;

/// A recognized input payload.
pub enum Payload {
    RingMatrix(RingMatrixJson),
    Bundle(ComponentBundleJson),
    Cyclic(CyclicGeneratorsJson),
}

impl Payload {
    pub fn params(&self) -> (u64, u64) {
        match self {
            Payload::RingMatrix(m) => (m.p, m.s),
            Payload::Bundle(b) => (b.p, b.s),
            Payload::Cyclic(c) => (c.p, c.s),
        }
    }
}

/// Reads the raw payload text: `-` is stdin, an existing path is read as
/// a file, anything else is taken inline.
pub fn read_source(arg: &str) -> Result<(String, String), CliError> {
    if arg == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::io(format!("reading standard input: {e}")))?;
        return Ok((buf, "stdin".to_string()));
    }
    let path = std::path::Path::new(arg);
    if path.is_file() {
        let buf = std::fs::read_to_string(path)
            .map_err(|e| CliError::io(format!("reading {arg}: {e}")))?;
        return Ok((buf, format!("file:{arg}")));
    }
    Ok((arg.to_string(), "inline".to_string()))
}

/// Parses and classifies a payload, unwrapping report envelopes so that
/// JSON output of one command feeds the next.
pub fn classify(text: &str) -> Result<Payload, CliError> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    classify_value(value)
}

fn classify_value(value: serde_json::Value) -> Result<Payload, CliError> {
    let Some(obj) = value.as_object() else {
        return Err(CliError::usage("payload must be a JSON object"));
    };
    if obj.contains_key("rows") {
        return Ok(Payload::RingMatrix(serde_json::from_value(value)?));
    }
    if obj.contains_key("generators") {
        return Ok(Payload::Cyclic(serde_json::from_value(value)?));
    }
    if obj.contains_key("components") && obj.contains_key("p") {
        return Ok(Payload::Bundle(serde_json::from_value(value)?));
    }
    // report envelopes: descend into the results
    if let Some(results) = obj.get("results") {
        if let Some(inner) = results.as_object() {
            if let Some(m) = inner.get("ring_matrix") {
                if m.is_object() {
                    return classify_value(m.clone());
                }
            }
            if inner.contains_key("rows")
                || inner.contains_key("generators")
                || (inner.contains_key("components") && inner.contains_key("p"))
            {
                return classify_value(results.clone());
            }
            if let Some(m) = inner.get("components") {
                return classify_value(m.clone());
            }
        }
    }
    Err(CliError::usage(
        "payload is not a ring matrix, component bundle, or cyclic generator set",
    ))
}

/// Checks optional `--p`/`--s` flags against a self-describing payload.
pub fn check_flags(payload: &Payload, p: Option<u64>, s: Option<u64>) -> Result<(), CliError> {
    let (pp, ps) = payload.params();
    if let Some(p) = p {
        if p != pp {
            return Err(CliError::usage(format!(
                "--p {p} conflicts with payload p={pp}"
            )));
        }
    }
    if let Some(s) = s {
        if s != ps {
            return Err(CliError::usage(format!(
                "--s {s} conflicts with payload s={ps}"
            )));
        }
    }
    Ok(())
}
