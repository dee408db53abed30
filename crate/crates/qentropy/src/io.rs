//! Loading distributions and joint tables from JSON and CSV files.
//!
//! JSON is the primary format: a distribution is a flat array of numbers,
//! a two-variable joint is an array of equal-length rows, and a joint of
//! n variables is an n-deep nested array. CSV covers the two flat cases
//! (one line for a distribution, one line per row for a table); deeper
//! joints have no CSV form. Errors carry the file position where known.

use std::fmt::Write as _;
use std::path::Path;

use serde_json::Value;

use crate::error::Error;
use crate::prob::{JointNd, JointTable, ProbVector};

/// What went wrong reading an input file.
#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}:{line}:{column}: invalid JSON: {message}")]
    Json {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{path}:{line}: {message}")]
    Csv {
        path: String,
        line: usize,
        message: String,
    },
    #[error("{path}: {message}")]
    Format { path: String, message: String },
    #[error("{path}: {source}")]
    Data {
        path: String,
        #[source]
        source: Error,
    },
}

fn read(path: &Path) -> Result<String, IoError> {
    std::fs::read_to_string(path).map_err(|source| IoError::Read {
        path: path.display().to_string(),
        source,
    })
}

fn is_csv(path: &Path) -> bool {
    path.extension()
        .map(|e| e.eq_ignore_ascii_case("csv"))
        .unwrap_or(false)
}

fn json_error(path: &Path, e: &serde_json::Error) -> IoError {
    IoError::Json {
        path: path.display().to_string(),
        line: e.line(),
        column: e.column(),
        message: {
            // strip serde_json's own trailing position, we carry it in fields
            let mut m = e.to_string();
            if let Some(cut) = m.find(" at line ") {
                m.truncate(cut);
            }
            m
        },
    }
}

fn data_error(path: &Path, source: Error) -> IoError {
    IoError::Data {
        path: path.display().to_string(),
        source,
    }
}

fn csv_rows(path: &Path, text: &str) -> Result<Vec<Vec<f64>>, IoError> {
    let mut rows = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let mut row = Vec::new();
        for field in line.split(',') {
            let field = field.trim();
            row.push(field.parse::<f64>().map_err(|_| IoError::Csv {
                path: path.display().to_string(),
                line: idx + 1,
                message: format!("not a number: {field:?}"),
            })?);
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(IoError::Format {
            path: path.display().to_string(),
            message: "file contains no data".into(),
        });
    }
    Ok(rows)
}

/// Load a single distribution: a JSON array of numbers, or one CSV line.
pub fn load_prob_vector(path: &Path) -> Result<ProbVector, IoError> {
    let text = read(path)?;
    let weights: Vec<f64> = if is_csv(path) {
        let rows = csv_rows(path, &text)?;
        if rows.len() != 1 {
            return Err(IoError::Format {
                path: path.display().to_string(),
                message: format!(
                    "a distribution file must contain a single row, found {}",
                    rows.len()
                ),
            });
        }
        rows.into_iter().next().unwrap()
    } else {
        serde_json::from_str(&text).map_err(|e| json_error(path, &e))?
    };
    ProbVector::new(weights).map_err(|e| data_error(path, e))
}

/// Load a two-variable joint: a JSON array of rows, or CSV lines.
pub fn load_joint_table(path: &Path) -> Result<JointTable, IoError> {
    let text = read(path)?;
    let rows: Vec<Vec<f64>> = if is_csv(path) {
        csv_rows(path, &text)?
    } else {
        serde_json::from_str(&text).map_err(|e| json_error(path, &e))?
    };
    JointTable::new(rows).map_err(|e| data_error(path, e))
}

/// Parse arbitrarily nested JSON arrays into (shape, row-major cells).
fn parse_nested(v: &Value, path: &mut String) -> Result<(Vec<usize>, Vec<f64>), String> {
    match v {
        Value::Array(items) => {
            if items.is_empty() {
                return Err(format!("empty array at {path}"));
            }
            if items.iter().all(Value::is_number) {
                let cells = items
                    .iter()
                    .map(|x| x.as_f64().ok_or_else(|| format!("non-finite number at {path}")))
                    .collect::<Result<Vec<f64>, String>>()?;
                return Ok((vec![cells.len()], cells));
            }
            let mut shape: Option<Vec<usize>> = None;
            let mut cells = Vec::new();
            for (i, item) in items.iter().enumerate() {
                let depth = path.len();
                let _ = write!(path, "[{i}]");
                let (child_shape, child_cells) = parse_nested(item, path)?;
                path.truncate(depth);
                match &shape {
                    None => shape = Some(child_shape),
                    Some(s) if *s == child_shape => {}
                    Some(s) => {
                        return Err(format!(
                            "ragged nesting at {path}[{i}]: shape {child_shape:?} vs {s:?}"
                        ))
                    }
                }
                cells.extend(child_cells);
            }
            let mut full = vec![items.len()];
            full.extend(shape.unwrap());
            Ok((full, cells))
        }
        _ => Err(format!("expected an array at {}", if path.is_empty() { "the top level" } else { path })),
    }
}

/// Load a joint of two or more variables from nested JSON arrays.
pub fn load_joint_nd(path: &Path) -> Result<JointNd, IoError> {
    if is_csv(path) {
        return Err(IoError::Format {
            path: path.display().to_string(),
            message: "joints of more than two variables need nested JSON arrays, not CSV".into(),
        });
    }
    let text = read(path)?;
    let value: Value = serde_json::from_str(&text).map_err(|e| json_error(path, &e))?;
    let mut at = String::new();
    let (shape, cells) = parse_nested(&value, &mut at).map_err(|message| IoError::Format {
        path: path.display().to_string(),
        message,
    })?;
    JointNd::new(shape, cells).map_err(|e| data_error(path, e))
}
