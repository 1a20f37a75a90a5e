//! The versioned result record every command emits, and its two renderings.

use std::fmt::{Display, Write as _};
use std::io::Write as _;
use std::path::Path;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Map, Number, Value};

use dissect_core::ComplexParams;

use crate::document::FaceDocument;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub tool: Value,
    pub command: String,
    pub params: Value,
    pub status: Status,
    pub results: Map<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl ReportDocument {
    pub fn new(command: &str, params: Option<&ComplexParams>) -> Self {
        ReportDocument {
            schema_version: SCHEMA_VERSION,
            tool: json!({ "name": "dissect", "version": dissect_core::VERSION }),
            command: command.to_string(),
            params: params.map_or(Value::Null, params_value),
            status: Status::Pass,
            results: Map::new(),
            counterexample: None,
            elapsed_ms: None,
        }
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.results.insert(key.to_string(), value.into());
    }

    /// Marks the report failed, keeping the first counterexample offered.
    pub fn fail(&mut self, counterexample: Option<Value>) {
        self.status = Status::Fail;
        if self.counterexample.is_none() {
            self.counterexample = counterexample;
        }
    }

    pub fn fail_with_face(&mut self, doc: FaceDocument) {
        self.fail(Some(serde_json::to_value(doc).expect("serializable")));
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        if let Value::Object(p) = &self.params {
            let _ = writeln!(out, "complex: {}", p.get("complex").and_then(Value::as_str).unwrap_or("?"));
        }
        let _ = writeln!(out, "status: {}", if self.status == Status::Pass { "pass" } else { "fail" });
        for (k, v) in &self.results {
            write_entry(&mut out, k, v, 0);
        }
        if let Some(c) = &self.counterexample {
            write_entry(&mut out, "counterexample", c, 0);
        }
        if let Some(ms) = self.elapsed_ms {
            let _ = writeln!(out, "elapsed_ms: {ms}");
        }
        out
    }
}

pub fn params_value(p: &ComplexParams) -> Value {
    json!({
        "family": p.family().to_string(),
        "m": p.m(),
        "n": p.n(),
        "rank": p.rank(),
        "complex": p.to_string(),
    })
}

/// An exact JSON integer, however large.
pub fn big(x: impl Display) -> Value {
    Value::Number(Number::from_str(&x.to_string()).expect("integer literal"))
}

pub fn bigs<T: Display>(xs: impl IntoIterator<Item = T>) -> Value {
    Value::Array(xs.into_iter().map(big).collect())
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) => {
            let parts: Option<Vec<String>> = items.iter().map(scalar).collect();
            parts.map(|p| format!("({})", p.join(", ")))
        }
        Value::Object(_) => None,
    }
}

fn write_entry(out: &mut String, key: &str, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    if let Some(s) = scalar(v) {
        let _ = writeln!(out, "{pad}{key}: {s}");
        return;
    }
    let _ = writeln!(out, "{pad}{key}:");
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                write_entry(out, k, x, depth + 1);
            }
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                write_entry(out, &i.to_string(), x, depth + 1);
            }
        }
        _ => unreachable!(),
    }
}

/// Writes `text` to `path` through a temporary file in the same directory,
/// or to stdout when no path is given.
pub fn emit(text: &str, path: Option<&Path>) -> std::io::Result<()> {
    match path {
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()
        }
        Some(path) => {
            let dir = path.parent().filter(|d| !d.as_os_str().is_empty()).unwrap_or(Path::new("."));
            let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
            tmp.write_all(text.as_bytes())?;
            tmp.persist(path).map_err(|e| e.error)?;
            Ok(())
        }
    }
}
