//! Rendering of command results in the three output formats.

use serde_json::{Map, Value};
use thiserror::Error;

use crate::cli::OutputFormat;
use crate::formats::FormatError;

pub const SCHEMA_VERSION: u64 = 1;

/// Failure of a command. Usage errors exit with 2, runtime failures with 1.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Runtime(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Runtime(_) => 1,
        }
    }
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<ordram_core::Error> for CliError {
    fn from(e: ordram_core::Error) -> Self {
        use ordram_core::Error as E;
        match e {
            E::BudgetExceeded { .. } | E::NumericInstability(_) => CliError::Runtime(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

pub fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// The result of a command, renderable in every format.
pub struct Report {
    /// JSON object; `schema` is added on rendering.
    pub json: Value,
    pub text: String,
    /// Table rows with a header. `None` flattens the JSON into `field,value`.
    pub table: Option<(Vec<String>, Vec<Vec<String>>)>,
    /// A checked property failed.
    pub violation: bool,
}

impl Report {
    pub fn new(json: Value, text: String) -> Self {
        Report {
            json,
            text,
            table: None,
            violation: false,
        }
    }

    pub fn with_table(mut self, header: &[&str], rows: Vec<Vec<String>>) -> Self {
        self.table = Some((header.iter().map(|s| s.to_string()).collect(), rows));
        self
    }

    pub fn violated(mut self, violation: bool) -> Self {
        self.violation = violation;
        self
    }

    pub fn render(&self, format: OutputFormat) -> Result<String, CliError> {
        match format {
            OutputFormat::Text => {
                let mut s = self.text.clone();
                if !s.ends_with('\n') {
                    s.push('\n');
                }
                Ok(s)
            }
            OutputFormat::Json => {
                let mut obj = Map::new();
                obj.insert("schema".into(), Value::from(SCHEMA_VERSION));
                match &self.json {
                    Value::Object(m) => obj.extend(m.clone()),
                    other => {
                        obj.insert("value".into(), other.clone());
                    }
                }
                let mut s = serde_json::to_string_pretty(&Value::Object(obj))
                    .map_err(|e| CliError::Runtime(e.to_string()))?;
                s.push('\n');
                Ok(s)
            }
            OutputFormat::Csv => {
                let (header, rows) = match &self.table {
                    Some((h, r)) => (h.clone(), r.clone()),
                    None => {
                        let mut rows = Vec::new();
                        flatten("", &self.json, &mut rows);
                        (vec!["field".into(), "value".into()], rows)
                    }
                };
                let mut w = csv::Writer::from_writer(Vec::new());
                let io = |e: csv::Error| CliError::Runtime(e.to_string());
                w.write_record(&header).map_err(io)?;
                for r in &rows {
                    w.write_record(r).map_err(io)?;
                }
                let bytes = w.into_inner().map_err(|e| CliError::Runtime(e.to_string()))?;
                String::from_utf8(bytes).map_err(|e| CliError::Runtime(e.to_string()))
            }
        }
    }
}

/// Dotted paths to every scalar leaf, in key order.
fn flatten(prefix: &str, v: &Value, out: &mut Vec<Vec<String>>) {
    let join = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                flatten(&join(k), x, out);
            }
        }
        Value::Array(a) => {
            for (i, x) in a.iter().enumerate() {
                flatten(&join(&i.to_string()), x, out);
            }
        }
        Value::String(s) => out.push(vec![prefix.to_string(), s.clone()]),
        Value::Null => out.push(vec![prefix.to_string(), String::new()]),
        other => out.push(vec![prefix.to_string(), other.to_string()]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn csv_flattens_nested_objects() {
        let r = Report::new(json!({"b": {"x": 1, "y": [true, null]}, "a": "s"}), "t".into());
        assert_eq!(r.render(OutputFormat::Csv).unwrap(), "field,value\na,s\nb.x,1\nb.y.0,true\nb.y.1,\n");
        assert_eq!(r.render(OutputFormat::Text).unwrap(), "t\n");
        let j = r.render(OutputFormat::Json).unwrap();
        assert!(j.starts_with("{\n  \"a\": \"s\""));
        assert!(j.contains("\"schema\": 1"));
    }
}
