//! Row tables and their CSV / JSON renderings.

use std::fmt::Write as _;

use serde_json::{json, Map, Value};

use crate::config::{Format, SweepConfig};

pub const TOOL: &str = env!("CARGO_PKG_NAME");
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(usize),
    Text(String),
    Flag(bool),
}

impl Cell {
    fn csv(&self, out: &mut String) {
        match self {
            // 17 significant digits round-trip every f64
            Cell::Num(x) => write!(out, "{x:.16e}").unwrap(),
            Cell::Int(i) => write!(out, "{i}").unwrap(),
            Cell::Text(s) => out.push_str(s),
            Cell::Flag(b) => out.push_str(if *b { "pass" } else { "fail" }),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Num(x) => serde_json::Number::from_f64(*x).map_or(Value::Null, Value::Number),
            Cell::Int(i) => json!(i),
            Cell::Text(s) => json!(s),
            Cell::Flag(b) => json!(b),
        }
    }

    pub fn as_f64(&self) -> Option<f64> {
        match self {
            Cell::Num(x) => Some(*x),
            Cell::Int(i) => Some(*i as f64),
            _ => None,
        }
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Num(x)
    }
}

impl From<usize> for Cell {
    fn from(i: usize) -> Self {
        Cell::Int(i)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

impl From<bool> for Cell {
    fn from(b: bool) -> Self {
        Cell::Flag(b)
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: Vec<String>) -> Self {
        Table {
            columns,
            rows: Vec::new(),
        }
    }

    pub fn column(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c == name)
    }

    /// Numeric values of one column.
    pub fn values(&self, name: &str) -> Vec<f64> {
        let i = self.column(name).unwrap_or_else(|| panic!("no column {name}"));
        self.rows.iter().filter_map(|r| r[i].as_f64()).collect()
    }

    pub fn render(&self, cfg: &SweepConfig) -> String {
        match cfg.format {
            Format::Csv => self.to_csv(cfg),
            Format::Json => self.to_json(cfg),
        }
    }

    pub fn to_csv(&self, cfg: &SweepConfig) -> String {
        let mut out = String::new();
        writeln!(out, "# {TOOL} {VERSION}").unwrap();
        for line in cfg.to_toml().lines().filter(|l| !l.is_empty()) {
            writeln!(out, "# {line}").unwrap();
        }
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            for (i, cell) in row.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                cell.csv(&mut out);
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self, cfg: &SweepConfig) -> String {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                let m: Map<String, Value> = self
                    .columns
                    .iter()
                    .cloned()
                    .zip(r.iter().map(Cell::json))
                    .collect();
                Value::Object(m)
            })
            .collect();
        let doc = json!({
            "tool": TOOL,
            "version": VERSION,
            "config": cfg,
            "columns": self.columns,
            "rows": rows,
        });
        let mut s = serde_json::to_string_pretty(&doc).expect("json serializes");
        s.push('\n');
        s
    }
}
