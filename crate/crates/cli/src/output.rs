//! Rendering of command results as tables, JSON documents or CSV.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

/// One CSV record: `x, lo, hi, pass`. Empty fields are left blank.
#[derive(Debug, Clone, Default)]
pub struct Row {
    pub x: String,
    pub lo: String,
    pub hi: String,
    pub pass: Option<bool>,
}

impl Row {
    pub fn new(x: impl ToString, lo: f64, hi: f64, pass: Option<bool>) -> Self {
        Row {
            x: x.to_string(),
            lo: number(lo),
            hi: number(hi),
            pass,
        }
    }
}

/// Integers in plain form, everything else in scientific notation.
pub fn number(v: f64) -> String {
    if v.fract() == 0.0 && v.abs() < 9e15 {
        format!("{}", v as i64)
    } else {
        format!("{v:e}")
    }
}

/// Result of one command.
pub struct Report {
    pub command: String,
    /// Human-readable lines for the table format.
    pub lines: Vec<String>,
    pub rows: Vec<Row>,
    pub body: Value,
    pub passed: bool,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            lines: Vec::new(),
            rows: Vec::new(),
            body: Value::Null,
            passed: true,
        }
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    pub fn require(&mut self, ok: bool) {
        self.passed &= ok;
    }
}

pub struct Header {
    pub version: &'static str,
    pub ledger_sha256: String,
}

pub fn render(report: &Report, header: &Header, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Json => {
            let doc = json!({
                "tool": "mertens",
                "version": header.version,
                "ledger_sha256": header.ledger_sha256,
                "command": report.command,
                "passed": report.passed,
                "result": report.body,
            });
            out.push_str(&serde_json::to_string_pretty(&doc).expect("serializable"));
            out.push('\n');
        }
        Format::Csv => {
            let _ = writeln!(out, "# mertens {} ledger {}", header.version, header.ledger_sha256);
            out.push_str("x,lo,hi,pass\n");
            for r in &report.rows {
                let pass = r.pass.map_or(String::new(), |p| p.to_string());
                let _ = writeln!(out, "{},{},{},{pass}", r.x, r.lo, r.hi);
            }
        }
        Format::Table => {
            let _ = writeln!(out, "# mertens {} ledger {}", header.version, header.ledger_sha256);
            for l in &report.lines {
                out.push_str(l);
                out.push('\n');
            }
            let _ = writeln!(out, "{}", if report.passed { "PASS" } else { "FAIL" });
        }
    }
    out
}
