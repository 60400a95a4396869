//! Deterministic reports. JSON objects use sorted keys (serde_json's default
//! map), so identical inputs give byte-identical output in both formats.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use edge_expand::Dist;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
}

pub struct Report {
    pub command: &'static str,
    pub inputs: BTreeMap<String, String>,
    pub result: Value,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Report {
            command,
            inputs: BTreeMap::new(),
            result: Value::Null,
        }
    }

    pub fn input(&mut self, name: &str, bytes: &[u8]) {
        self.inputs.insert(name.to_string(), digest(bytes));
    }

    fn to_value(&self) -> Value {
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "result": self.result,
            "version": VERSION,
        })
    }

    pub fn render(&self, format: Format) -> String {
        let value = self.to_value();
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&value).expect("values serialize");
                s.push('\n');
                s
            }
            Format::Text => {
                let mut out = String::new();
                render_text(&mut out, "", &value);
                out
            }
        }
    }
}

pub fn digest(bytes: &[u8]) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(bytes)))
}

pub fn dist(d: Dist) -> Value {
    match d.finite() {
        Some(x) => json!(x),
        None => json!("inf"),
    }
}

fn render_text(out: &mut String, path: &str, value: &Value) {
    let join = |key: &str| {
        if path.is_empty() {
            key.to_string()
        } else {
            format!("{path}.{key}")
        }
    };
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                render_text(out, &join(k), v);
            }
        }
        Value::Array(items) if items.iter().any(|v| v.is_object()) => {
            for (i, v) in items.iter().enumerate() {
                render_text(out, &join(&i.to_string()), v);
            }
        }
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(scalar_text).collect();
            writeln!(out, "{path}: [{}]", parts.join(", ")).unwrap();
        }
        other => writeln!(out, "{path}: {}", scalar_text(other)).unwrap(),
    }
}

fn scalar_text(value: &Value) -> String {
    match value {
        Value::String(s) if s == "inf" => "∞".to_string(),
        Value::String(s) => s.clone(),
        Value::Null => "none".to_string(),
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(scalar_text).collect();
            format!("[{}]", parts.join(" "))
        }
        other => other.to_string(),
    }
}
