//! Table rendering for the command-line tool: CSV with a `#`-prefixed header
//! block, or JSON mirroring the same content. Output is byte-reproducible:
//! the header echoes the invocation and generator version but never a
//! timestamp, floats are printed with a fixed significant-digit count in
//! CSV, and JSON floats round-trip exactly.

use serde_json::{json, Map, Number, Value};
use std::io::{self, Write};

/// One table entry. `Empty` renders as a blank CSV field and JSON null
/// (used for columns that do not apply in a degraded mode).
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i128),
    Float(f64),
    Str(String),
    Bool(bool),
    Empty,
}

/// An ordered header block plus a rectangular body.
#[derive(Debug, Clone, Default)]
pub struct Table {
    pub meta: Vec<(String, String)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Table {
            meta: Vec::new(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn meta(&mut self, key: &str, value: impl Into<String>) {
        self.meta.push((key.to_string(), value.into()));
    }

    pub fn row(&mut self, cells: Vec<Cell>) {
        debug_assert_eq!(cells.len(), self.columns.len());
        self.rows.push(cells);
    }
}

/// Scientific notation with `digits` significant digits, e.g. 17 digits give
/// "2.2435897435897436e0". 17 significant digits round-trip any f64.
pub fn format_float(x: f64, digits: usize) -> String {
    format!("{:.*e}", digits.saturating_sub(1), x)
}

fn csv_escape(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

fn cell_csv(cell: &Cell, digits: usize) -> String {
    match cell {
        Cell::Int(v) => v.to_string(),
        Cell::Float(v) => format_float(*v, digits),
        Cell::Str(s) => csv_escape(s),
        Cell::Bool(b) => b.to_string(),
        Cell::Empty => String::new(),
    }
}

fn cell_json(cell: &Cell) -> Value {
    match cell {
        // Integers beyond i64 exceed what JSON consumers reliably parse,
        // so they are carried as strings to stay exact.
        Cell::Int(v) => match i64::try_from(*v) {
            Ok(small) => Value::Number(small.into()),
            Err(_) => Value::String(v.to_string()),
        },
        Cell::Float(v) => Number::from_f64(*v)
            .map(Value::Number)
            .unwrap_or(Value::Null),
        Cell::Str(s) => Value::String(s.clone()),
        Cell::Bool(b) => Value::Bool(*b),
        Cell::Empty => Value::Null,
    }
}

/// CSV: `# key: value` header lines, a column-name row, then data rows.
pub fn write_csv(table: &Table, w: &mut impl Write, digits: usize) -> io::Result<()> {
    for (key, value) in &table.meta {
        writeln!(w, "# {key}: {value}")?;
    }
    writeln!(w, "{}", table.columns.join(","))?;
    for row in &table.rows {
        let fields: Vec<String> = row.iter().map(|c| cell_csv(c, digits)).collect();
        writeln!(w, "{}", fields.join(","))?;
    }
    Ok(())
}

/// JSON object mirroring the CSV: `meta` as an ordered object, `columns`,
/// and `rows` as one object per row keyed by column name.
pub fn write_json(table: &Table, w: &mut impl Write) -> io::Result<()> {
    let mut meta = Map::new();
    for (key, value) in &table.meta {
        meta.insert(key.clone(), Value::String(value.clone()));
    }
    let rows: Vec<Value> = table
        .rows
        .iter()
        .map(|row| {
            let mut obj = Map::new();
            for (col, cell) in table.columns.iter().zip(row) {
                obj.insert(col.clone(), cell_json(cell));
            }
            Value::Object(obj)
        })
        .collect();
    let doc = json!({
        "meta": Value::Object(meta),
        "columns": table.columns,
        "rows": rows,
    });
    writeln!(w, "{}", serde_json::to_string_pretty(&doc)?)
}
