//! Comma-separated numeric tables.
//!
//! An optional header line starts with `#`. Values use the shortest decimal
//! form that parses back to the identical `f64` (at most 17 significant
//! digits), so a write followed by a read is bit-exact.

use std::io::{Read, Write};

use crate::error::{Error, Result};

/// Shortest round-trip decimal text for `v`.
pub fn format_real(v: f64) -> String {
    let a = v.abs();
    if v == 0.0 || !v.is_finite() || (1e-5..1e16).contains(&a) {
        format!("{v}")
    } else {
        format!("{v:e}")
    }
}

/// Reads every data row. `#` lines are skipped. When `width` is given, a row of
/// any other width is an error naming its 1-based data row number.
pub fn read_table<R: Read>(reader: R, width: Option<usize>) -> Result<Vec<Vec<f64>>> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .comment(Some(b'#'))
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(reader);

    let mut rows = Vec::new();
    for (idx, record) in rdr.records().enumerate() {
        let row = idx + 1;
        let record = record.map_err(|e| Error::Row {
            row,
            message: e.to_string(),
        })?;
        if let Some(w) = width {
            if record.len() != w {
                return Err(Error::Row {
                    row,
                    message: format!("expected {w} columns, found {}", record.len()),
                });
            }
        }
        let values = record
            .iter()
            .map(|field| {
                field.parse::<f64>().map_err(|_| Error::Row {
                    row,
                    message: format!("`{field}` is not a number"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        if width.is_none() {
            if let Some(first) = rows.first().map(Vec::len) {
                if values.len() != first {
                    return Err(Error::Row {
                        row,
                        message: format!("expected {first} columns, found {}", values.len()),
                    });
                }
            }
        }
        rows.push(values);
    }
    Ok(rows)
}

pub fn write_table<W: Write>(mut writer: W, header: Option<&[String]>, rows: &[Vec<f64>]) -> Result<()> {
    if let Some(h) = header {
        writeln!(writer, "# {}", h.join(","))?;
    }
    let mut line = String::new();
    for row in rows {
        line.clear();
        for (i, v) in row.iter().enumerate() {
            if i > 0 {
                line.push(',');
            }
            line.push_str(&format_real(*v));
        }
        line.push('\n');
        writer.write_all(line.as_bytes())?;
    }
    writer.flush()?;
    Ok(())
}
