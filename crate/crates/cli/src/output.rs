//! Output envelope and the two serializations.

use std::collections::BTreeMap;

use angspec_core::report::DiscrepancyReport;
use serde::Serialize;
use serde_json::{Map, Value};

use crate::args::Format;
use crate::CliError;

/// Bumped on any change to a payload schema.
pub const SCHEMA_VERSION: &str = "1";

/// One table cell. Floats keep full precision in both formats.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Float(f64),
    Text(String),
    Bool(bool),
    Empty,
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Float(v)
    }
}

impl From<u32> for Cell {
    fn from(v: u32) -> Self {
        Cell::Int(i64::from(v))
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

impl<T: Into<Cell>> From<Option<T>> for Cell {
    fn from(v: Option<T>) -> Self {
        v.map_or(Cell::Empty, Into::into)
    }
}

impl Cell {
    /// 17 significant digits, which round-trips every finite double.
    fn csv_text(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Float(v) => format!("{v:.16e}"),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(v) => Value::from(*v),
            Cell::Float(v) => Value::from(*v),
            Cell::Text(s) => Value::from(s.as_str()),
            Cell::Bool(b) => Value::from(*b),
            Cell::Empty => Value::Null,
        }
    }
}

/// Column names fixed per command, rows in output order.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: &'static [&'static str],
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &'static [&'static str]) -> Self {
        Self {
            columns,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

/// Report header without its entries, which go into the table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportSummary {
    pub subject: String,
    pub tolerance: f64,
    pub max_relative_deviation: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fitted_factor: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub winner: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub skipped: Vec<f64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl From<&DiscrepancyReport> for ReportSummary {
    fn from(r: &DiscrepancyReport) -> Self {
        Self {
            subject: r.subject.clone(),
            tolerance: r.tolerance,
            max_relative_deviation: r.max_relative_deviation,
            fitted_factor: r.fitted_factor,
            winner: r.winner.clone(),
            skipped: r.skipped.clone(),
            notes: r.notes.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Envelope {
    pub command: &'static str,
    pub params: BTreeMap<&'static str, Value>,
    pub generated_at: Option<String>,
    pub reports: Vec<ReportSummary>,
    pub payload: Table,
}

#[derive(Serialize)]
struct JsonEnvelope<'a> {
    schema_version: &'static str,
    command: &'static str,
    params: &'a BTreeMap<&'static str, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    generated_at: &'a Option<String>,
    #[serde(skip_serializing_if = "no_reports")]
    reports: &'a [ReportSummary],
    payload: Vec<Map<String, Value>>,
}

fn no_reports(r: &&[ReportSummary]) -> bool {
    r.is_empty()
}

impl Envelope {
    pub fn render(&self, format: Format) -> Result<String, CliError> {
        match format {
            Format::Json => self.render_json(),
            Format::Csv => self.render_csv(),
        }
    }

    fn render_json(&self) -> Result<String, CliError> {
        let payload = self
            .payload
            .rows
            .iter()
            .map(|row| {
                self.payload
                    .columns
                    .iter()
                    .map(|c| c.to_string())
                    .zip(row.iter().map(Cell::json))
                    .collect()
            })
            .collect();
        let doc = JsonEnvelope {
            schema_version: SCHEMA_VERSION,
            command: self.command,
            params: &self.params,
            generated_at: &self.generated_at,
            reports: &self.reports,
            payload,
        };
        let mut text =
            serde_json::to_string_pretty(&doc).map_err(|e| CliError::Output(e.to_string()))?;
        text.push('\n');
        Ok(text)
    }

    fn render_csv(&self) -> Result<String, CliError> {
        let mut text = format!(
            "# schema_version: {SCHEMA_VERSION}\n# command: {}\n",
            self.command
        );
        for (key, value) in &self.params {
            let shown = match value {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            text.push_str(&format!("# param.{key}: {shown}\n"));
        }
        if let Some(ts) = &self.generated_at {
            text.push_str(&format!("# generated_at: {ts}\n"));
        }
        for (i, r) in self.reports.iter().enumerate() {
            let json = serde_json::to_value(r).map_err(|e| CliError::Output(e.to_string()))?;
            if let Value::Object(fields) = json {
                for (key, value) in fields {
                    text.push_str(&format!("# report.{i}.{key}: {value}\n"));
                }
            }
        }
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer
            .write_record(self.payload.columns)
            .map_err(|e| CliError::Output(e.to_string()))?;
        for row in &self.payload.rows {
            writer
                .write_record(row.iter().map(Cell::csv_text))
                .map_err(|e| CliError::Output(e.to_string()))?;
        }
        let bytes = writer
            .into_inner()
            .map_err(|e| CliError::Output(e.to_string()))?;
        text.push_str(&String::from_utf8(bytes).map_err(|e| CliError::Output(e.to_string()))?);
        Ok(text)
    }
}
