//! Flat records and the three output formats.
//!
//! Every emitter works from the same ordered `Map`, so JSON, CSV and the
//! table always carry the same fields in the same order.

use std::io::{self, Write};

use clap::ValueEnum;
use nsring_core::{ClassificationReport, ScanRecord};
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

/// Field names of a classification report, in serialization order.
pub const REPORT_FIELDS: [&str; 18] = [
    "generators",
    "e",
    "embdim",
    "genus",
    "frobenius",
    "conductor_number",
    "type_",
    "ord_conductor",
    "colength_conductor",
    "is_gorenstein",
    "is_almost_gorenstein",
    "is_nearly_gorenstein",
    "is_farflung_gorenstein",
    "has_minimal_multiplicity",
    "is_hypersurface",
    "q21_holds",
    "q31_holds",
    "q41_value",
];

pub fn report_map(report: &ClassificationReport) -> Map<String, Value> {
    match serde_json::to_value(report).expect("report serializes") {
        Value::Object(map) => map,
        _ => unreachable!("report is a struct"),
    }
}

/// Column name of a family parameter; `param_` is prepended when the symbol
/// would shadow a report field (the `e` of `e-run`, say).
pub fn param_column(name: &str) -> String {
    if REPORT_FIELDS.contains(&name) || ["input", "status", "conductor_power"].contains(&name) {
        format!("param_{name}")
    } else {
        name.to_string()
    }
}

/// Columns of a scan row for the given parameter names.
pub fn scan_columns(params: &[String]) -> Vec<String> {
    let mut cols: Vec<String> = params.iter().map(|p| param_column(p)).collect();
    cols.push("input".into());
    cols.push("status".into());
    cols.extend(REPORT_FIELDS.iter().map(|f| f.to_string()));
    cols.push("conductor_power".into());
    cols
}

pub fn scan_row(record: &ScanRecord) -> Map<String, Value> {
    let mut row = Map::new();
    for (name, value) in &record.params {
        row.insert(param_column(name), Value::from(*value));
    }
    row.insert("input".into(), Value::from(record.input.clone()));
    let status = record.skipped.map_or("ok", |r| r.as_str());
    row.insert("status".into(), Value::from(status));
    match &record.report {
        Some(report) => row.extend(report_map(report)),
        None => row.extend(REPORT_FIELDS.iter().map(|f| (f.to_string(), Value::Null))),
    }
    row.insert(
        "conductor_power".into(),
        record.conductor_power.map_or(Value::Null, Value::from),
    );
    row
}

/// A cell as it appears in CSV: lists space-separated, absent values empty.
pub fn plain_cell(value: &Value) -> String {
    match value {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(plain_cell).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}

fn table_cell(value: &Value) -> String {
    match value {
        Value::Null => "-".into(),
        Value::Array(items) => format!(
            "<{}>",
            items.iter().map(plain_cell).collect::<Vec<_>>().join(",")
        ),
        other => plain_cell(other),
    }
}

/// Pretty JSON; stable under parse and re-serialize.
pub fn to_json(value: &Value) -> String {
    serde_json::to_string_pretty(value).expect("json values serialize")
}

pub fn write_csv(
    out: &mut dyn Write,
    columns: &[String],
    rows: &[Map<String, Value>],
) -> io::Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    writer.write_record(columns)?;
    for row in rows {
        writer.write_record(
            columns
                .iter()
                .map(|c| plain_cell(row.get(c).unwrap_or(&Value::Null))),
        )?;
    }
    writer.flush()
}

pub fn write_table(
    out: &mut dyn Write,
    columns: &[String],
    rows: &[Map<String, Value>],
) -> io::Result<()> {
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|row| {
            columns
                .iter()
                .map(|c| table_cell(row.get(c).unwrap_or(&Value::Null)))
                .collect()
        })
        .collect();
    let widths: Vec<usize> = columns
        .iter()
        .enumerate()
        .map(|(i, c)| {
            cells
                .iter()
                .map(|r| r[i].chars().count())
                .chain([c.len()])
                .max()
                .unwrap()
        })
        .collect();
    let line = |fields: &mut dyn Iterator<Item = &String>| {
        fields
            .zip(&widths)
            .map(|(f, w)| format!("{f:<w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    writeln!(out, "{}", line(&mut columns.iter()))?;
    for row in &cells {
        writeln!(out, "{}", line(&mut row.iter()))?;
    }
    Ok(())
}

/// One `field  value` line per entry.
pub fn write_key_values(out: &mut dyn Write, map: &Map<String, Value>) -> io::Result<()> {
    let width = map.keys().map(|k| k.len()).max().unwrap_or(0);
    for (k, v) in map {
        writeln!(out, "{k:<width$}  {}", table_cell(v))?;
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ColorChoice {
    Auto,
    Never,
    Always,
}

/// Reads `NSRING_COLOR`; unknown values fall back to `auto`.
pub fn color_enabled() -> bool {
    use std::io::IsTerminal;
    let choice = std::env::var("NSRING_COLOR")
        .ok()
        .and_then(|v| ColorChoice::from_str(&v, true).ok())
        .unwrap_or(ColorChoice::Auto);
    match choice {
        ColorChoice::Always => true,
        ColorChoice::Never => false,
        ColorChoice::Auto => io::stdout().is_terminal(),
    }
}

pub fn paint(text: &str, ansi: &str, color: bool) -> String {
    if color {
        format!("\x1b[{ansi}m{text}\x1b[0m")
    } else {
        text.to_string()
    }
}
