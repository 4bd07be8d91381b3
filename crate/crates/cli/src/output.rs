//! Rendering of command reports as JSON, CSV or aligned text.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    ClaimFailure,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Pass => 0,
            Status::ClaimFailure => 1,
        }
    }
}

/// Output of one command: scalar facts plus an optional table.
#[derive(Debug)]
pub struct Report {
    pub command: &'static str,
    pub summary: Map<String, Value>,
    pub records: Vec<Map<String, Value>>,
    pub status: Status,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Report { command, summary: Map::new(), records: Vec::new(), status: Status::Pass }
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.summary.insert(key.to_string(), value.into());
    }

    pub fn fail_if(&mut self, cond: bool) {
        if cond {
            self.status = Status::ClaimFailure;
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.json(),
            Format::Csv => self.csv(),
            Format::Text => self.text(),
        }
    }

    fn json(&self) -> String {
        let mut obj = Map::new();
        obj.insert("command".into(), self.command.into());
        obj.extend(self.summary.clone());
        if !self.records.is_empty() {
            obj.insert("records".into(), Value::Array(self.records.iter().cloned().map(Value::Object).collect()));
        }
        obj.insert("exit_status".into(), self.status.code().into());
        let mut s = serde_json::to_string_pretty(&Value::Object(obj)).expect("json values serialize");
        s.push('\n');
        s
    }

    fn csv(&self) -> String {
        let rows: Vec<&Map<String, Value>> =
            if self.records.is_empty() { vec![&self.summary] } else { self.records.iter().collect() };
        let mut header: Vec<&String> = Vec::new();
        for r in &rows {
            for k in r.keys() {
                if !header.contains(&k) {
                    header.push(k);
                }
            }
        }
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&header).expect("in-memory csv");
        for r in rows {
            w.write_record(header.iter().map(|k| r.get(*k).map(cell).unwrap_or_default())).expect("in-memory csv");
        }
        String::from_utf8(w.into_inner().expect("in-memory csv")).expect("csv output is utf-8")
    }

    fn text(&self) -> String {
        let mut out = String::new();
        let width = self.summary.keys().map(String::len).max().unwrap_or(0);
        for (k, v) in &self.summary {
            let _ = writeln!(out, "{k:width$}  {}", cell(v));
        }
        if !self.records.is_empty() {
            if !self.summary.is_empty() {
                out.push('\n');
            }
            let header: Vec<&String> = self.records[0].keys().collect();
            let table: Vec<Vec<String>> =
                self.records.iter().map(|r| header.iter().map(|k| r.get(*k).map(cell).unwrap_or_default()).collect()).collect();
            let widths: Vec<usize> = header
                .iter()
                .enumerate()
                .map(|(i, h)| table.iter().map(|row| row[i].chars().count()).chain([h.len()]).max().unwrap_or(0))
                .collect();
            let line = |cells: Vec<&str>| {
                let padded: Vec<String> =
                    cells.iter().zip(&widths).map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count()))).collect();
                padded.join("  ").trim_end().to_string()
            };
            let _ = writeln!(out, "{}", line(header.iter().map(|h| h.as_str()).collect()));
            for row in &table {
                let _ = writeln!(out, "{}", line(row.iter().map(String::as_str).collect()));
            }
        }
        let verdict = match self.status {
            Status::Pass => "ok",
            Status::ClaimFailure => "CLAIM FAILURE",
        };
        let _ = writeln!(out, "status  {verdict}");
        out
    }
}

/// One table cell. Lists are joined with `; `.
fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(cell).collect::<Vec<_>>().join("; "),
        other => other.to_string(),
    }
}
