use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;
use serde_json::{json, Value};
use supergrade::superalg::Witness;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Error => 2,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub verb: String,
    pub status: Status,
    pub witnesses: Vec<Witness>,
    pub result: Value,
    /// Check name to duration, e.g. `"1834us"`.
    pub timings: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
}

pub fn micros(d: Duration) -> String {
    format!("{}us", d.as_micros())
}

impl Report {
    /// A fail without witnesses gets a generic one, so a fail always carries one.
    pub fn new(verb: &str, status: Status, witnesses: Vec<Witness>, result: Value) -> Self {
        let mut witnesses = witnesses;
        if status == Status::Fail && witnesses.is_empty() {
            witnesses.push(Witness::new("result", vec![], "check returned false"));
        }
        Report { verb: verb.to_string(), status, witnesses, result, timings: BTreeMap::new(), message: None }
    }

    pub fn error(verb: &str, message: impl Into<String>) -> Self {
        let mut r = Report::new(verb, Status::Error, Vec::new(), Value::Null);
        r.message = Some(message.into());
        r
    }

    pub fn timed(mut self, check: &str, d: Duration) -> Self {
        self.timings.insert(check.to_string(), micros(d));
        self
    }

    pub fn to_json(&self) -> Value {
        // serde_json's map is ordered by key, so the rendering is deterministic
        serde_json::to_value(self).unwrap_or_else(|e| json!({ "status": "error", "message": e.to_string() }))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        render(&self.to_json(), 0, &mut out);
        out
    }
}

fn scalar_text(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("null".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| matches!(x, Value::Number(_) | Value::String(_) | Value::Bool(_))) => {
            Some(format!("[{}]", a.iter().map(|x| scalar_text(x).unwrap_or_default()).collect::<Vec<_>>().join(", ")))
        }
        _ => None,
    }
}

fn render(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match scalar_text(x) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}{k}: {s}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}{k}:");
                        render(x, depth + 1, out);
                    }
                }
            }
        }
        Value::Array(a) => {
            for x in a {
                match scalar_text(x) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}- {s}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}-");
                        render(x, depth + 1, out);
                    }
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", scalar_text(other).unwrap_or_default());
        }
    }
}
