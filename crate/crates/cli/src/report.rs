use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Num(f64),
    Text(String),
    Bool(bool),
}

impl From<i64> for Cell {
    fn from(v: i64) -> Self {
        Cell::Int(v)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Num(v)
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

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl Cell {
    fn json(&self) -> Value {
        match self {
            Cell::Int(v) => Value::from(*v),
            // NaN and infinities have no JSON form.
            Cell::Num(v) => serde_json::Number::from_f64(*v).map_or(Value::Null, Value::Number),
            Cell::Text(s) => Value::from(s.clone()),
            Cell::Bool(b) => Value::from(*b),
        }
    }

    /// 17 significant digits.
    fn machine(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Num(v) => format!("{v:.16e}"),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
        }
    }

    fn human(&self) -> String {
        match self {
            Cell::Num(v) => sig6(*v),
            other => other.machine(),
        }
    }
}

/// `%g`-style formatting with six significant digits.
pub fn sig6(v: f64) -> String {
    if v == 0.0 {
        return "0".into();
    }
    if !v.is_finite() {
        return v.to_string();
    }
    let exp = v.abs().log10().floor() as i32;
    if (-5..6).contains(&exp) {
        let decimals = (5 - exp).max(0) as usize;
        let s = format!("{v:.decimals$}");
        let s = if s.contains('.') { s.trim_end_matches('0').trim_end_matches('.').to_string() } else { s };
        if s == "-0" { "0".into() } else { s }
    } else {
        let s = format!("{v:.5e}");
        let (mantissa, e) = s.split_once('e').unwrap();
        let mantissa = mantissa.trim_end_matches('0').trim_end_matches('.');
        format!("{mantissa}e{e}")
    }
}

#[derive(Debug, Clone, Default)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(headers: &[&str]) -> Self {
        Table {
            headers: headers.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    /// Rows as JSON objects keyed by header.
    pub fn records(&self) -> Vec<Value> {
        self.rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = self.headers.iter().cloned().zip(row.iter().map(Cell::json)).collect();
                Value::Object(obj)
            })
            .collect()
    }

    fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.headers).expect("in-memory csv");
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::machine)).expect("in-memory csv");
        }
        String::from_utf8(w.into_inner().expect("in-memory csv")).expect("csv is utf-8")
    }

    fn to_text(&self) -> String {
        let cells: Vec<Vec<String>> = self.rows.iter().map(|r| r.iter().map(Cell::human).collect()).collect();
        let mut widths: Vec<usize> = self.headers.iter().map(|h| h.chars().count()).collect();
        for row in &cells {
            for (w, c) in widths.iter_mut().zip(row) {
                *w = (*w).max(c.chars().count());
            }
        }
        let left: Vec<bool> = (0..widths.len())
            .map(|j| !self.rows.is_empty() && self.rows.iter().all(|r| matches!(r[j], Cell::Text(_))))
            .collect();
        let mut out = String::new();
        let line = |out: &mut String, items: &[String]| {
            let padded: Vec<String> = items
                .iter()
                .zip(widths.iter().zip(&left))
                .map(|(s, (&w, &l))| if l { format!("{s:<w$}") } else { format!("{s:>w$}") })
                .collect();
            let _ = writeln!(out, "{}", padded.join("  ").trim_end());
        };
        line(&mut out, &self.headers);
        for row in &cells {
            line(&mut out, row);
        }
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub params: Map<String, Value>,
    pub results: Vec<Value>,
    pub max_residual: f64,
    pub pass: bool,
}

/// Everything a subcommand produces.
#[derive(Debug, Clone)]
pub struct Output {
    pub report: Report,
    pub table: Table,
    /// One-line verdict shown after human tables (and on stderr otherwise).
    pub summary: Option<String>,
    /// Plain table output prints only the values column (used by `eval`).
    pub bare: bool,
}

impl Output {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.report).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Csv => self.table.to_csv(),
            Format::Table if self.bare => {
                let last = self.table.headers.len() - 1;
                self.table.rows.iter().map(|r| r[last].human() + "\n").collect()
            }
            Format::Table => {
                let mut s = self.table.to_text();
                if let Some(line) = &self.summary {
                    s.push_str(line);
                    s.push('\n');
                }
                s
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn six_significant_digits() {
        assert_eq!(sig6(0.25), "0.25");
        assert_eq!(sig6(-0.75), "-0.75");
        assert_eq!(sig6(1.0), "1");
        assert_eq!(sig6(std::f64::consts::PI), "3.14159");
        assert_eq!(sig6(1.772453850905516), "1.77245");
        assert_eq!(sig6(4.2e-15), "4.2e-15");
        assert_eq!(sig6(123456789.0), "1.23457e8");
        assert_eq!(sig6(-1e-20), "-1e-20");
    }

    #[test]
    fn csv_uses_full_precision() {
        let mut t = Table::new(&["n", "value"]);
        t.push(vec![Cell::Int(-1), Cell::Num(0.1)]);
        let csv = t.to_csv();
        assert_eq!(csv, "n,value\n-1,1.0000000000000001e-1\n");
        let back: f64 = csv.lines().nth(1).unwrap().split(',').nth(1).unwrap().parse().unwrap();
        assert_eq!(back, 0.1);
    }
}
