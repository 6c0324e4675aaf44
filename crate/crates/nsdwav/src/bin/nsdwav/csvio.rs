//! Two-column CSV reading and writing.
//!
//! Output is locale-independent: '.' decimal separator, '\n' line endings,
//! 17 significant digits.

use std::fmt::Write as _;
use std::path::Path;

/// Read a two-column CSV with a header row; returns (x, y) pairs.
pub fn read_xy(path: &Path) -> Result<Vec<(f64, f64)>, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let mut lines = text.lines().enumerate();
    let (_, header) = lines
        .next()
        .ok_or_else(|| format!("{}: empty file, expected a header row", path.display()))?;
    if header.split(',').count() != 2 {
        return Err(format!(
            "{}: header must have exactly two columns, got `{header}`",
            path.display()
        ));
    }
    let mut rows = Vec::new();
    let mut prev_x = f64::NEG_INFINITY;
    for (idx, line) in lines {
        if line.trim().is_empty() {
            continue;
        }
        let mut fields = line.split(',');
        let (a, b) = match (fields.next(), fields.next(), fields.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => {
                return Err(format!(
                    "{} line {}: expected two comma-separated fields, got `{line}`",
                    path.display(),
                    idx + 1
                ))
            }
        };
        let x: f64 = a.trim().parse().map_err(|_| {
            format!("{} line {}: malformed number `{a}`", path.display(), idx + 1)
        })?;
        let y: f64 = b.trim().parse().map_err(|_| {
            format!("{} line {}: malformed number `{b}`", path.display(), idx + 1)
        })?;
        if x <= prev_x {
            return Err(format!(
                "{} line {}: x values must be strictly increasing",
                path.display(),
                idx + 1
            ));
        }
        prev_x = x;
        rows.push((x, y));
    }
    if rows.is_empty() {
        return Err(format!("{}: no data rows", path.display()));
    }
    Ok(rows)
}

/// Serialize (x, y) pairs under the given column headers.
pub fn format_xy(header: (&str, &str), rows: &[(f64, f64)]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{},{}", header.0, header.1);
    for (x, y) in rows {
        let _ = writeln!(out, "{},{}", fmt_num(*x), fmt_num(*y));
    }
    out
}

/// 17-significant-digit scientific notation.
pub fn fmt_num(v: f64) -> String {
    format!("{v:.16e}")
}
