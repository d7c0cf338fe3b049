//! Sweep-table carrier and its CSV/JSON serializations.
//!
//! The CSV dialect is deliberately plain: `#`-prefixed `key=value` metadata
//! lines, one header row of column names, comma separators, decimal point.
//! Values are printed with 17 significant digits so that re-parsing
//! reproduces every `f64` bit-exactly, and nothing time- or host-dependent
//! is ever written, making output byte-deterministic for identical inputs.

use std::fmt::Write as _;

/// A rectangular numeric table with ordered run metadata.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepTable {
    meta: Vec<(String, String)>,
    columns: Vec<String>,
    rows: Vec<Vec<f64>>,
}

/// Formats a float with 17 significant digits, enough to round-trip f64.
pub fn format_value(v: f64) -> String {
    format!("{v:.16e}")
}

impl SweepTable {
    pub fn new(columns: &[&str]) -> Self {
        Self {
            meta: Vec::new(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    /// Appends a metadata entry; emission preserves insertion order.
    pub fn push_meta(&mut self, key: &str, value: impl Into<String>) {
        self.meta.push((key.to_string(), value.into()));
    }

    /// Appends a float metadata entry in round-trippable form.
    pub fn push_meta_value(&mut self, key: &str, value: f64) {
        self.push_meta(key, format_value(value));
    }

    /// Appends a data row.
    ///
    /// # Panics
    /// Panics if the row width differs from the number of columns.
    pub fn push_row(&mut self, row: Vec<f64>) {
        assert_eq!(row.len(), self.columns.len(), "row width mismatch");
        self.rows.push(row);
    }

    pub fn meta(&self) -> &[(String, String)] {
        &self.meta
    }

    pub fn meta_value(&self, key: &str) -> Option<&str> {
        self.meta
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn columns(&self) -> &[String] {
        &self.columns
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.rows
    }

    /// Index of a named column.
    pub fn column_index(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c == name)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.meta {
            let _ = writeln!(out, "# {k}={v}");
        }
        let _ = writeln!(out, "{}", self.columns.join(","));
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(|v| format_value(*v)).collect();
            let _ = writeln!(out, "{}", line.join(","));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let meta: serde_json::Map<String, serde_json::Value> = self
            .meta
            .iter()
            .map(|(k, v)| (k.clone(), serde_json::Value::String(v.clone())))
            .collect();
        serde_json::json!({
            "meta": meta,
            "columns": self.columns,
            "rows": self.rows,
        })
    }

    /// Parses the CSV dialect produced by [`SweepTable::to_csv`].
    pub fn from_csv(text: &str) -> Result<Self, String> {
        let mut meta = Vec::new();
        let mut columns: Option<Vec<String>> = None;
        let mut rows = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim_end();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix('#') {
                let rest = rest.trim_start();
                let (k, v) = rest
                    .split_once('=')
                    .ok_or_else(|| format!("line {}: malformed metadata", lineno + 1))?;
                meta.push((k.to_string(), v.to_string()));
                continue;
            }
            match &columns {
                None => {
                    columns = Some(line.split(',').map(|c| c.to_string()).collect());
                }
                Some(cols) => {
                    let row: Result<Vec<f64>, _> =
                        line.split(',').map(|v| v.parse::<f64>()).collect();
                    let row = row.map_err(|e| format!("line {}: {e}", lineno + 1))?;
                    if row.len() != cols.len() {
                        return Err(format!("line {}: row width mismatch", lineno + 1));
                    }
                    rows.push(row);
                }
            }
        }
        Ok(Self {
            meta,
            columns: columns.ok_or("missing header row")?,
            rows,
        })
    }
}
