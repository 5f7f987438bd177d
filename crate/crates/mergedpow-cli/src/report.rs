//! Tabular command output, rendered as CSV (default) or JSON.
//!
//! CSV carries the header plus data rows only, so identical invocations are
//! byte-identical. Floats use Rust's shortest round-trip formatting; parsing
//! a cell back recovers the exact value. JSON additionally embeds the fully
//! resolved command configuration, plus a `generated_at` unix timestamp
//! unless suppressed.

use std::fmt::Write as _;

use serde_json::{json, Map, Value};

#[derive(Debug, Clone)]
pub enum Cell {
    Int(u64),
    Float(f64),
    Text(String),
    Empty,
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Float(v) => v.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(v) => json!(v),
            Cell::Float(v) => json!(v),
            Cell::Text(s) => json!(s),
            Cell::Empty => Value::Null,
        }
    }
}

pub struct Report {
    command: &'static str,
    config: Vec<(String, Value)>,
    columns: Vec<String>,
    rows: Vec<Vec<Cell>>,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Report {
            command,
            config: Vec::new(),
            columns: Vec::new(),
            rows: Vec::new(),
        }
    }

    pub fn config(&mut self, key: &str, value: Value) -> &mut Self {
        self.config.push((key.to_string(), value));
        self
    }

    pub fn columns<S: Into<String>>(&mut self, cols: impl IntoIterator<Item = S>) -> &mut Self {
        self.columns = cols.into_iter().map(Into::into).collect();
        self
    }

    pub fn row(&mut self, cells: Vec<Cell>) -> &mut Self {
        debug_assert_eq!(cells.len(), self.columns.len());
        self.rows.push(cells);
        self
    }

    pub fn render_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(Cell::csv).collect();
            let _ = writeln!(out, "{}", line.join(","));
        }
        out
    }

    pub fn render_json(&self, generated_at: Option<u64>) -> String {
        let mut config = Map::new();
        for (k, v) in &self.config {
            config.insert(k.clone(), v.clone());
        }
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| Value::Array(row.iter().map(Cell::json).collect()))
            .collect();
        let mut doc = Map::new();
        doc.insert("command".into(), json!(self.command));
        doc.insert("config".into(), Value::Object(config));
        doc.insert("columns".into(), json!(self.columns));
        doc.insert("rows".into(), Value::Array(rows));
        if let Some(ts) = generated_at {
            doc.insert("generated_at".into(), json!(ts));
        }
        let mut s = serde_json::to_string_pretty(&Value::Object(doc)).expect("serializable report");
        s.push('\n');
        s
    }
}
