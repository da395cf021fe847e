//! Run documents and their CSV, JSON and text renderings.
//!
//! JSON is one object: command, version, params, the typed report (when
//! the command has one), and a `data` array with one object per record.
//! CSV is a header row followed by the `data` records.

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::config::Format;
use crate::error::CliError;

pub const OUTPUT_DIR_ENV: &str = "MEXPART_OUTPUT_DIR";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Document {
    pub command: String,
    pub version: String,
    pub params: Map<String, Value>,
    #[serde(default, skip_serializing_if = "Value::is_null")]
    pub report: Value,
    /// Free-form notes for the text rendering.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub columns: Vec<String>,
    pub data: Vec<Map<String, Value>>,
}

impl Document {
    pub fn new(command: &str, columns: &[&str]) -> Self {
        Document {
            command: command.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            params: Map::new(),
            report: Value::Null,
            notes: Vec::new(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            data: Vec::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn with_report<T: Serialize>(mut self, report: &T) -> Self {
        self.report = serde_json::to_value(report).expect("reports serialize");
        self
    }

    pub fn note(&mut self, line: impl Into<String>) {
        self.notes.push(line.into());
    }

    /// Appends a record; `values` follow `columns`.
    pub fn push(&mut self, values: Vec<Value>) {
        assert_eq!(values.len(), self.columns.len(), "record width");
        let row = self.columns.iter().cloned().zip(values).collect();
        self.data.push(row);
    }

    pub fn render(&self, format: Format) -> Result<String, CliError> {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).map_err(CliError::Json)?;
                s.push('\n');
                Ok(s)
            }
            Format::Csv => self.to_csv(),
            Format::Text => Ok(self.to_text()),
        }
    }

    pub fn to_csv(&self) -> Result<String, CliError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.columns).map_err(CliError::Csv)?;
        for row in &self.data {
            w.write_record(self.columns.iter().map(|c| cell(&row[c])))
                .map_err(CliError::Csv)?;
        }
        let bytes = w
            .into_inner()
            .map_err(|e| CliError::Csv(e.into_error().into()))?;
        Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let params: Vec<String> = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={}", cell(v)))
            .collect();
        let _ = writeln!(s, "{} {}", self.command, params.join(" "));
        for n in &self.notes {
            let _ = writeln!(s, "{n}");
        }
        if !self.data.is_empty() {
            let _ = writeln!(s, "{}", self.columns.join("\t"));
            for row in &self.data {
                let cells: Vec<String> = self.columns.iter().map(|c| cell(&row[c])).collect();
                let _ = writeln!(s, "{}", cells.join("\t"));
            }
        }
        s
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Resolves `path` against `$MEXPART_OUTPUT_DIR` when it is relative.
pub fn resolve_output(path: &Path) -> PathBuf {
    match std::env::var_os(OUTPUT_DIR_ENV) {
        Some(dir) if path.is_relative() => Path::new(&dir).join(path),
        _ => path.to_path_buf(),
    }
}

pub fn emit(text: &str, path: Option<&Path>) -> Result<(), CliError> {
    match path {
        Some(p) => {
            let p = resolve_output(p);
            fs::write(&p, text).map_err(|e| CliError::Io(p.display().to_string(), e))
        }
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| CliError::Io("stdout".into(), e))
        }
    }
}
