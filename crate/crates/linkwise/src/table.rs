//! Tabular metric output and its CSV/JSON wire formats.
//!
//! A [`MetricTable`] is a rectangular set of numeric columns (plus an
//! optional leading label column), with ordered provenance metadata. Cells
//! hold full-precision `f64`s; the CSV wire format serializes them in
//! scientific notation with 12 significant digits so golden files stay
//! stable across platforms. Round-trip equality through the wire format is
//! therefore wire precision: `to_csv` is a fixed point of
//! `to_csv . from_csv`, and [`MetricTable::wire_eq`] compares two tables at
//! the 12-digit level.
//!
//! CSV wire format: UTF-8, `# key: value` provenance comment lines, one
//! header row of `name(unit)` cells, comma-separated data rows with `.` as
//! the decimal separator. JSON: one object with `provenance`, `inputs`,
//! `columns` and `rows`.

use crate::error::{Error, Result};
use serde_json::{json, Value};

/// Serialize one value in the wire's scientific notation (12 significant digits).
pub fn format_value(x: f64) -> String {
    format!("{x:.11e}")
}

/// Metadata keys that count as provenance; everything else is an input echo.
const PROVENANCE_KEYS: [&str; 4] = ["figure", "version", "generator", "seed"];

#[derive(Debug, Clone, PartialEq)]
pub struct Column {
    pub name: String,
    pub unit: String,
    pub values: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LabelColumn {
    pub name: String,
    pub values: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct MetricTable {
    /// Ordered `key: value` metadata (provenance first, then input echoes).
    pub meta: Vec<(String, String)>,
    /// Optional leading label column (e.g. protocol names for bar tables).
    pub labels: Option<LabelColumn>,
    pub columns: Vec<Column>,
}

impl MetricTable {
    pub fn new(meta: Vec<(String, String)>) -> Self {
        MetricTable {
            meta,
            labels: None,
            columns: Vec::new(),
        }
    }

    /// Append a numeric column.
    pub fn push_column(&mut self, name: &str, unit: &str, values: Vec<f64>) {
        self.columns.push(Column {
            name: name.to_string(),
            unit: unit.to_string(),
            values,
        });
    }

    /// Equality at the wire's 12-significant-digit precision.
    pub fn wire_eq(&self, other: &MetricTable) -> bool {
        self.meta == other.meta
            && self.labels == other.labels
            && self.columns.len() == other.columns.len()
            && self.columns.iter().zip(&other.columns).all(|(a, b)| {
                a.name == b.name
                    && a.unit == b.unit
                    && a.values.len() == b.values.len()
                    && a.values
                        .iter()
                        .zip(&b.values)
                        .all(|(x, y)| format_value(*x) == format_value(*y))
            })
    }

    pub fn set_labels(&mut self, name: &str, values: Vec<String>) {
        self.labels = Some(LabelColumn {
            name: name.to_string(),
            values,
        });
    }

    pub fn n_rows(&self) -> usize {
        self.columns
            .first()
            .map(|c| c.values.len())
            .or_else(|| self.labels.as_ref().map(|l| l.values.len()))
            .unwrap_or(0)
    }

    pub fn meta_get(&self, key: &str) -> Option<&str> {
        self.meta
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn column(&self, name: &str) -> Option<&Column> {
        self.columns.iter().find(|c| c.name == name)
    }

    /// Every column (and the label column) must have the same length.
    pub fn validate(&self) -> Result<()> {
        let rows = self.n_rows();
        if let Some(labels) = &self.labels {
            if labels.values.len() != rows {
                return Err(Error::ShapeMismatch(format!(
                    "label column has {} rows, numeric columns have {rows}",
                    labels.values.len()
                )));
            }
        }
        for c in &self.columns {
            if c.values.len() != rows {
                return Err(Error::ShapeMismatch(format!(
                    "column `{}` has {} rows, expected {rows}",
                    c.name,
                    c.values.len()
                )));
            }
        }
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.meta {
            out.push_str(&format!("# {k}: {v}\n"));
        }
        let mut header: Vec<String> = Vec::new();
        if let Some(labels) = &self.labels {
            header.push(format!("{}(-)", labels.name));
        }
        for c in &self.columns {
            header.push(format!("{}({})", c.name, c.unit));
        }
        out.push_str(&header.join(","));
        out.push('\n');
        for row in 0..self.n_rows() {
            let mut cells: Vec<String> = Vec::new();
            if let Some(labels) = &self.labels {
                cells.push(labels.values[row].clone());
            }
            for c in &self.columns {
                cells.push(format_value(c.values[row]));
            }
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut meta = Vec::new();
        let mut header: Option<Vec<(String, String)>> = None;
        let mut rows: Vec<Vec<String>> = Vec::new();

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim_end();
            if line.is_empty() {
                continue;
            }
            if let Some(comment) = line.strip_prefix('#') {
                if let Some((k, v)) = comment.split_once(':') {
                    meta.push((k.trim().to_string(), v.trim().to_string()));
                }
                continue;
            }
            if header.is_none() {
                let mut cols = Vec::new();
                for cell in line.split(',') {
                    let cell = cell.trim();
                    let open = cell.rfind('(').ok_or_else(|| Error::Parse {
                        line: line_no,
                        field: cell.to_string(),
                        message: "header cell is not `name(unit)`".to_string(),
                    })?;
                    if !cell.ends_with(')') {
                        return Err(Error::Parse {
                            line: line_no,
                            field: cell.to_string(),
                            message: "header cell is not `name(unit)`".to_string(),
                        });
                    }
                    let name = cell[..open].to_string();
                    let unit = cell[open + 1..cell.len() - 1].to_string();
                    cols.push((name, unit));
                }
                header = Some(cols);
            } else {
                rows.push(line.split(',').map(|s| s.trim().to_string()).collect());
            }
        }

        let header = header.ok_or_else(|| Error::Parse {
            line: 0,
            field: "header".to_string(),
            message: "no header row found".to_string(),
        })?;
        for (i, row) in rows.iter().enumerate() {
            if row.len() != header.len() {
                return Err(Error::Parse {
                    line: 0,
                    field: format!("row {i}"),
                    message: format!("expected {} cells, found {}", header.len(), row.len()),
                });
            }
        }

        // a leading column whose cells do not all parse as numbers is a label column
        let first_is_label = !rows.is_empty()
            && rows.iter().any(|r| r[0].parse::<f64>().is_err());
        let mut table = MetricTable::new(meta);
        let offset = if first_is_label {
            table.set_labels(&header[0].0, rows.iter().map(|r| r[0].clone()).collect());
            1
        } else {
            0
        };
        for (col_idx, (name, unit)) in header.iter().enumerate().skip(offset) {
            let mut values = Vec::with_capacity(rows.len());
            for row in &rows {
                let cell = &row[col_idx];
                let v: f64 = cell.parse().map_err(|_| Error::Parse {
                    line: 0,
                    field: name.clone(),
                    message: format!("`{cell}` is not a number"),
                })?;
                values.push(v);
            }
            table.push_column(name, unit, values);
        }
        table.validate()?;
        Ok(table)
    }

    pub fn to_json(&self) -> Value {
        let mut provenance = serde_json::Map::new();
        let mut inputs = serde_json::Map::new();
        for (k, v) in &self.meta {
            let target = if PROVENANCE_KEYS.contains(&k.as_str()) {
                &mut provenance
            } else {
                &mut inputs
            };
            target.insert(k.clone(), Value::String(v.clone()));
        }
        let mut columns = Vec::new();
        if let Some(labels) = &self.labels {
            columns.push(json!({"name": labels.name, "unit": "-"}));
        }
        for c in &self.columns {
            columns.push(json!({"name": c.name, "unit": c.unit}));
        }
        let rows: Vec<Value> = (0..self.n_rows())
            .map(|row| {
                let mut cells: Vec<Value> = Vec::new();
                if let Some(labels) = &self.labels {
                    cells.push(Value::String(labels.values[row].clone()));
                }
                for c in &self.columns {
                    cells.push(json!(c.values[row]));
                }
                Value::Array(cells)
            })
            .collect();
        json!({
            "provenance": Value::Object(provenance),
            "inputs": Value::Object(inputs),
            "columns": columns,
            "rows": rows,
        })
    }
}

/// Per-column relative tolerances for golden comparison.
#[derive(Debug, Clone)]
pub struct Tolerances {
    pub default: f64,
    pub per_column: Vec<(String, f64)>,
}

impl Tolerances {
    pub fn uniform(default: f64) -> Self {
        Tolerances {
            default,
            per_column: Vec::new(),
        }
    }

    pub fn with_column(mut self, name: &str, tol: f64) -> Self {
        self.per_column.push((name.to_string(), tol));
        self
    }

    fn for_column(&self, name: &str) -> f64 {
        self.per_column
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, t)| *t)
            .unwrap_or(self.default)
    }
}

/// One cell that exceeded its tolerance.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct CellFailure {
    pub row: usize,
    pub column: String,
    pub got: f64,
    pub want: f64,
    pub relative_error: f64,
}

/// Outcome of comparing a table against a golden reference.
#[derive(Debug, Clone, serde::Serialize)]
pub struct ComparisonReport {
    pub pass: bool,
    pub cells_checked: usize,
    pub failures: Vec<CellFailure>,
}

impl std::fmt::Display for ComparisonReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.pass {
            writeln!(f, "PASS: {} cells within tolerance", self.cells_checked)?;
        } else {
            writeln!(
                f,
                "FAIL: {} of {} cells out of tolerance",
                self.failures.len(),
                self.cells_checked
            )?;
            for c in &self.failures {
                writeln!(
                    f,
                    "  row {} column `{}`: got {} want {} (relative error {:.3e})",
                    c.row,
                    c.column,
                    format_value(c.got),
                    format_value(c.want),
                    c.relative_error
                )?;
            }
        }
        Ok(())
    }
}

/// Cell-by-cell comparison of two tables of identical shape. A cell passes
/// when |got - want| / |want| is within the column's relative tolerance
/// (|got| <= tolerance when the reference is zero).
pub fn golden_compare(
    table: &MetricTable,
    reference: &MetricTable,
    tolerances: &Tolerances,
) -> Result<ComparisonReport> {
    if table.meta_get("figure") != reference.meta_get("figure") {
        return Err(Error::ShapeMismatch(format!(
            "figure ids differ: {:?} vs {:?}",
            table.meta_get("figure"),
            reference.meta_get("figure")
        )));
    }
    if table.n_rows() != reference.n_rows() {
        return Err(Error::ShapeMismatch(format!(
            "row counts differ: {} vs {}",
            table.n_rows(),
            reference.n_rows()
        )));
    }
    let names = |t: &MetricTable| -> Vec<String> {
        t.columns.iter().map(|c| c.name.clone()).collect()
    };
    if names(table) != names(reference) {
        return Err(Error::ShapeMismatch(format!(
            "column names differ: {:?} vs {:?}",
            names(table),
            names(reference)
        )));
    }
    if table.labels.as_ref().map(|l| &l.values) != reference.labels.as_ref().map(|l| &l.values) {
        return Err(Error::ShapeMismatch("label columns differ".to_string()));
    }

    let mut failures = Vec::new();
    let mut cells_checked = 0;
    for (col, ref_col) in table.columns.iter().zip(&reference.columns) {
        let tol = tolerances.for_column(&col.name);
        for (row, (&got, &want)) in col.values.iter().zip(&ref_col.values).enumerate() {
            cells_checked += 1;
            let relative_error = if want == 0.0 {
                got.abs()
            } else {
                (got - want).abs() / want.abs()
            };
            if !(relative_error <= tol) {
                failures.push(CellFailure {
                    row,
                    column: col.name.clone(),
                    got,
                    want,
                    relative_error,
                });
            }
        }
    }
    Ok(ComparisonReport {
        pass: failures.is_empty(),
        cells_checked,
        failures,
    })
}
