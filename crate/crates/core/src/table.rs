//! Deterministic CSV/JSON table output.
//!
//! CSV: '#'-prefixed metadata header lines, then a mandatory column
//! header, comma separation, '.' decimal point, LF endings. JSON: one
//! object { meta, rows }. Numbers that do not survive a double-precision
//! round trip are emitted as strings.

use crate::hp;
use rug::{Float, Integer};
use serde_json::{json, Map, Value};
use std::io::{self, Write};

#[derive(Debug, Clone)]
pub enum Cell {
    UInt(u64),
    Int(i64),
    Big(Integer),
    Real(Float),
    F64(f64),
    Str(String),
}

impl Cell {
    fn csv_text(&self) -> String {
        match self {
            Cell::UInt(v) => v.to_string(),
            Cell::Int(v) => v.to_string(),
            Cell::Big(v) => v.to_string(),
            Cell::Real(v) => hp::format_float(v),
            Cell::F64(v) => format_f64(*v),
            Cell::Str(s) => {
                if s.contains(',') || s.contains('"') || s.contains('\n') {
                    format!("\"{}\"", s.replace('"', "\"\""))
                } else {
                    s.clone()
                }
            }
        }
    }

    fn json_value(&self) -> Value {
        const SAFE: u64 = 1 << 53;
        match self {
            Cell::UInt(v) => {
                if *v < SAFE {
                    json!(v)
                } else {
                    json!(v.to_string())
                }
            }
            Cell::Int(v) => {
                if v.unsigned_abs() < SAFE {
                    json!(v)
                } else {
                    json!(v.to_string())
                }
            }
            Cell::Big(v) => {
                if v.clone().abs() < SAFE {
                    json!(v.to_i64())
                } else {
                    json!(v.to_string())
                }
            }
            Cell::Real(v) => json!(hp::format_float(v)),
            Cell::F64(v) => json!(v),
            Cell::Str(s) => json!(s),
        }
    }
}

fn format_f64(v: f64) -> String {
    if v == v.trunc() && v.abs() < 1e15 {
        format!("{v:.1}")
    } else {
        format!("{v:.17}")
            .trim_end_matches('0')
            .trim_end_matches('.')
            .to_string()
    }
}

/// Run provenance recorded in every output.
#[derive(Debug, Clone)]
pub struct Meta {
    pub system: String,
    pub alpha_decimal: String,
    pub alpha_expr: String,
    pub precision: u32,
    pub seed: u64,
    pub version: String,
}

#[derive(Debug, Clone)]
pub struct Table {
    pub name: String,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    pub meta: Meta,
}

impl Table {
    pub fn new(name: &str, columns: Vec<&'static str>, meta: Meta) -> Self {
        Table {
            name: name.to_string(),
            columns,
            rows: Vec::new(),
            meta,
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

pub fn emit_csv(table: &Table, w: &mut dyn Write) -> io::Result<()> {
    writeln!(w, "# table={}", table.name)?;
    writeln!(w, "# system={}", table.meta.system)?;
    writeln!(
        w,
        "# alpha={} ({})",
        table.meta.alpha_decimal, table.meta.alpha_expr
    )?;
    writeln!(w, "# precision={}", table.meta.precision)?;
    writeln!(w, "# seed={}", table.meta.seed)?;
    writeln!(w, "# version={}", table.meta.version)?;
    writeln!(w, "{}", table.columns.join(","))?;
    for row in &table.rows {
        let cells: Vec<String> = row.iter().map(Cell::csv_text).collect();
        writeln!(w, "{}", cells.join(","))?;
    }
    Ok(())
}

pub fn emit_json(table: &Table, w: &mut dyn Write) -> io::Result<()> {
    let meta = json!({
        "table": table.name,
        "system": table.meta.system,
        "alpha": table.meta.alpha_decimal,
        "alpha_expr": table.meta.alpha_expr,
        "precision": table.meta.precision,
        "seed": table.meta.seed,
        "version": table.meta.version,
    });
    let rows: Vec<Value> = table
        .rows
        .iter()
        .map(|row| {
            let mut obj = Map::new();
            for (col, cell) in table.columns.iter().zip(row) {
                obj.insert((*col).to_string(), cell.json_value());
            }
            Value::Object(obj)
        })
        .collect();
    let doc = json!({ "meta": meta, "rows": rows });
    writeln!(w, "{}", serde_json::to_string_pretty(&doc)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

pub fn emit(table: &Table, format: Format, w: &mut dyn Write) -> io::Result<()> {
    match format {
        Format::Csv => emit_csv(table, w),
        Format::Json => emit_json(table, w),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn meta() -> Meta {
        Meta {
            system: "table:0,2 p=2".into(),
            alpha_decimal: "1.58".into(),
            alpha_expr: "log(3)/log(2)".into(),
            precision: 128,
            seed: 7,
            version: "0.1.0".into(),
        }
    }

    #[test]
    fn csv_is_deterministic_with_header() {
        let mut t = Table::new("seq", vec!["n", "c"], meta());
        t.push(vec![Cell::UInt(5), Cell::Big(Integer::from(20))]);
        let mut a = Vec::new();
        emit_csv(&t, &mut a).unwrap();
        let mut b = Vec::new();
        emit_csv(&t, &mut b).unwrap();
        assert_eq!(a, b);
        let text = String::from_utf8(a).unwrap();
        assert!(text.contains("# seed=7"));
        assert!(text.contains("n,c\n5,20\n"));
        assert!(!text.contains('\r'));
    }

    #[test]
    fn json_big_numbers_become_strings() {
        let mut t = Table::new("x", vec!["v"], meta());
        t.push(vec![Cell::Big(Integer::from(1u64 << 60))]);
        t.push(vec![Cell::Big(Integer::from(42))]);
        let mut buf = Vec::new();
        emit_json(&t, &mut buf).unwrap();
        let doc: Value = serde_json::from_slice(&buf).unwrap();
        assert!(doc["rows"][0]["v"].is_string());
        assert!(doc["rows"][1]["v"].is_number());
        assert_eq!(doc["meta"]["seed"], 7);
    }
}
