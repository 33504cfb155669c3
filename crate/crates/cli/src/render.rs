//! Output plumbing shared by the subcommands: the format flag, a generic
//! JSON-to-TSV flattener for record-shaped reports, and grid renderers for
//! the table-shaped ones.

use clap::ValueEnum;
use serde_json::Value;

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Text,
}

/// Flatten a JSON report into `path<TAB>value` rows, depth-first, arrays
/// indexed numerically. Strings lose their quotes; empty containers keep a
/// row so no key silently disappears.
pub fn flatten_tsv(value: &Value) -> String {
    let mut out = String::new();
    walk(value, String::new(), &mut out);
    out
}

fn walk(value: &Value, path: String, out: &mut String) {
    match value {
        Value::Object(map) if !map.is_empty() => {
            for (key, inner) in map {
                walk(inner, join_path(&path, key), out);
            }
        }
        Value::Array(items) if !items.is_empty() => {
            for (idx, inner) in items.iter().enumerate() {
                walk(inner, join_path(&path, &idx.to_string()), out);
            }
        }
        Value::String(s) => emit_row(&path, s, out),
        leaf => emit_row(&path, &leaf.to_string(), out),
    }
}

fn emit_row(path: &str, shown: &str, out: &mut String) {
    out.push_str(path);
    out.push('\t');
    out.push_str(shown);
    out.push('\n');
}

fn join_path(path: &str, key: &str) -> String {
    if path.is_empty() {
        key.to_string()
    } else {
        format!("{path}.{key}")
    }
}

/// Tab-separated grid, one row per line.
pub fn grid_tsv(rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    for row in rows {
        out.push_str(&row.join("\t"));
        out.push('\n');
    }
    out
}

/// Space-aligned grid with right-justified cells, for terminal reading.
pub fn grid_aligned(rows: &[Vec<String>]) -> String {
    let columns = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut widths = vec![0usize; columns];
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (i, cell) in row.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            for _ in 0..widths[i].saturating_sub(cell.len()) {
                line.push(' ');
            }
            line.push_str(cell);
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}
