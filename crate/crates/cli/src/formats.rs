//! Matrix serialization: CSV with exact `p/q` entries (integers bare) and
//! an equivalent JSON form. The CSV reader accepts everything the writer
//! emits, including leading `#` note lines, so generated matrices
//! round-trip without loss.

use std::fmt;
use std::str::FromStr;

use helmdist_core::matrix::{RatMatrix, Rational};
use serde_json::{json, Value};

#[derive(Debug)]
pub struct CsvParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for CsvParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for CsvParseError {}

/// Render a matrix as CSV. Each note becomes a leading `# ...` line;
/// rationals print reduced as `p/q` and integers print bare.
pub fn matrix_to_csv(m: &RatMatrix, notes: &[&str]) -> String {
    let mut out = String::new();
    for note in notes {
        out.push_str("# ");
        out.push_str(note);
        out.push('\n');
    }
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            if c > 0 {
                out.push(',');
            }
            out.push_str(&m.at(r, c).to_string());
        }
        out.push('\n');
    }
    out
}

/// Parse the CSV form back into a matrix, skipping `#` note lines.
pub fn matrix_from_csv(text: &str) -> Result<RatMatrix, CsvParseError> {
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut width = None;
    for (idx, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut row = Vec::new();
        for field in trimmed.split(',') {
            let value = Rational::from_str(field.trim()).map_err(|e| CsvParseError {
                line: idx + 1,
                message: format!("bad rational {:?}: {}", field.trim(), e),
            })?;
            row.push(value);
        }
        match width {
            None => width = Some(row.len()),
            Some(w) if w != row.len() => {
                return Err(CsvParseError {
                    line: idx + 1,
                    message: format!("expected {} fields, found {}", w, row.len()),
                })
            }
            Some(_) => {}
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(CsvParseError {
            line: 0,
            message: "no matrix rows".into(),
        });
    }
    Ok(RatMatrix::from_rows(rows))
}

/// JSON form of a matrix; entries stay exact strings.
pub fn matrix_to_json(object: &str, n: u32, m: &RatMatrix, note: Option<&str>) -> Value {
    let entries: Vec<Vec<String>> = (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| m.at(r, c).to_string()).collect())
        .collect();
    let mut value = json!({
        "object": object,
        "n": n,
        "rows": m.rows(),
        "cols": m.cols(),
        "entries": entries,
    });
    if let Some(note) = note {
        value["note"] = json!(note);
    }
    value
}

#[cfg(test)]
mod tests {
    use super::*;
    use helmdist_core::matrix::{frac, rat};

    #[test]
    fn csv_round_trips_exactly() {
        let m = RatMatrix::from_fn(2, 3, |r, c| {
            if (r + c) % 2 == 0 {
                rat(-(r as i64) - 7)
            } else {
                frac(1, 3 + c as i64)
            }
        });
        let text = matrix_to_csv(&m, &["a note"]);
        assert!(text.starts_with("# a note\n"));
        let back = matrix_from_csv(&text).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn integers_print_bare() {
        let m = RatMatrix::from_i64_rows(&[vec![0, -3], vec![5, 2]]);
        assert_eq!(matrix_to_csv(&m, &[]), "0,-3\n5,2\n");
    }

    #[test]
    fn bad_field_reports_line() {
        let err = matrix_from_csv("1,2\n3,x\n").unwrap_err();
        assert_eq!(err.line, 2);
    }

    #[test]
    fn ragged_rows_are_rejected() {
        assert!(matrix_from_csv("1,2\n3\n").is_err());
    }
}
