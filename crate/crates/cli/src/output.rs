//! Report rendering. Floats are rounded to 12 significant digits.

use std::io::Write;
use std::path::Path;

use divlat::numeric::{fmt_sig12, round_sig12};
use serde::Serialize;

use crate::error::{CliError, CliResult};

/// `x` rounded to 12 significant digits, for JSON output.
pub fn num(x: f64) -> f64 {
    round_sig12(x)
}

pub fn json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

/// CSV with a header row; every field already formatted.
pub fn csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

pub fn cell(x: f64) -> String {
    fmt_sig12(x)
}

/// Writes to `out` if given, otherwise to stdout.
pub fn emit(text: &str, out: Option<&Path>) -> CliResult<()> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::io(path, e)),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| CliError::io("<stdout>", e))
        }
    }
}
