use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Duration;

use liegeo_core::{format_scalar, Scalar, Subspace, Vector};
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

/// Output of one command. Exact values are rational strings, numeric
/// residuals are decimal strings.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdict: Option<Verdict>,
    #[serde(default)]
    pub details: BTreeMap<String, Value>,
    pub elapsed_seconds: String,
}

pub fn scalar(x: &Scalar) -> Value {
    Value::String(format_scalar(x))
}

pub fn vector(v: &Vector) -> Value {
    Value::Array(v.coords().iter().map(scalar).collect())
}

pub fn vectors<'a>(vs: impl IntoIterator<Item = &'a Vector>) -> Value {
    Value::Array(vs.into_iter().map(vector).collect())
}

pub fn subspace(s: &Subspace) -> Value {
    vectors(s.basis())
}

pub fn decimal(x: f64) -> Value {
    Value::String(format!("{x:e}"))
}

impl Report {
    pub fn new(command: &[String]) -> Self {
        Report { command: command.to_vec(), verdict: None, details: BTreeMap::new(), elapsed_seconds: "0".into() }
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.details.insert(key.to_string(), value.into());
        self
    }

    pub fn with_elapsed(mut self, d: Duration) -> Self {
        self.elapsed_seconds = format!("{:.6}", d.as_secs_f64());
        self
    }

    /// Pretty JSON with sorted keys.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("serializable");
        serde_json::to_string_pretty(&value).expect("serializable") + "\n"
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(v) = self.verdict {
            let _ = writeln!(out, "verdict: {}", if v == Verdict::Pass { "pass" } else { "fail" });
        }
        for (k, v) in &self.details {
            render(&mut out, k, v, 0);
        }
        let _ = writeln!(out, "elapsed: {}s", self.elapsed_seconds);
        out
    }
}

fn inline(v: &Value) -> Option<String> {
    match v {
        Value::String(s) => Some(s.clone()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::Null => Some("-".into()),
        Value::Array(items) if items.iter().all(|i| matches!(i, Value::String(_) | Value::Number(_))) => {
            Some(format!("({})", items.iter().filter_map(inline).collect::<Vec<_>>().join(", ")))
        }
        _ => None,
    }
}

fn render(out: &mut String, key: &str, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    if let Some(s) = inline(v) {
        let _ = writeln!(out, "{pad}{key}: {s}");
        return;
    }
    let _ = writeln!(out, "{pad}{key}:");
    match v {
        Value::Array(items) => {
            for (i, item) in items.iter().enumerate() {
                render(out, &format!("[{}]", i + 1), item, depth + 1);
            }
        }
        Value::Object(map) => {
            for (k, item) in map {
                render(out, k, item, depth + 1);
            }
        }
        _ => unreachable!("scalars are rendered inline"),
    }
}
