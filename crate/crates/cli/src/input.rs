//! Reading (P, Q) pairs from CSV or JSON files.

use std::path::Path;

use divlat::Distribution;
use serde::Deserialize;

use crate::args::InputFormat;
use crate::error::{CliError, CliResult};

pub type Pair = (Distribution, Distribution);

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonPair {
    p: Vec<f64>,
    q: Vec<f64>,
}

pub fn resolve_format(path: &Path, format: Option<InputFormat>) -> InputFormat {
    format.unwrap_or_else(|| match path.extension().and_then(|e| e.to_str()) {
        Some(e) if e.eq_ignore_ascii_case("json") => InputFormat::Json,
        _ => InputFormat::Csv,
    })
}

pub fn read_pairs(path: &Path, format: InputFormat) -> CliResult<Vec<Pair>> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    match format {
        InputFormat::Csv => parse_csv(path, &text),
        InputFormat::Json => parse_json(path, &text),
    }
}

fn invalid(path: &Path, message: String) -> CliError {
    CliError::Input {
        path: path.to_owned(),
        message,
    }
}

/// Consecutive rows form one pair. Blank lines and lines starting with `#` are skipped.
fn parse_csv(path: &Path, text: &str) -> CliResult<Vec<Pair>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let mut rows = Vec::new();
    for (k, record) in reader.records().enumerate() {
        let row = k + 1;
        let record = record.map_err(|e| invalid(path, format!("row {row}: {e}")))?;
        let values = record
            .iter()
            .map(|field| {
                field
                    .parse::<f64>()
                    .map_err(|_| invalid(path, format!("row {row}: `{field}` is not a number")))
            })
            .collect::<CliResult<Vec<f64>>>()?;
        let dist = Distribution::validate(&values).map_err(|e| invalid(path, format!("row {row}: {e}")))?;
        rows.push(dist);
    }
    if rows.len() % 2 == 1 {
        return Err(CliError::OddRowCount {
            path: path.to_owned(),
            rows: rows.len(),
        });
    }
    let mut it = rows.into_iter();
    let mut pairs = Vec::new();
    while let (Some(p), Some(q)) = (it.next(), it.next()) {
        pairs.push((p, q));
    }
    check_lengths(path, &pairs, |k| format!("rows {} and {}", 2 * k + 1, 2 * k + 2))?;
    Ok(pairs)
}

/// An array of `{"p": [...], "q": [...]}` objects.
fn parse_json(path: &Path, text: &str) -> CliResult<Vec<Pair>> {
    let raw: Vec<JsonPair> = serde_json::from_str(text).map_err(|e| invalid(path, e.to_string()))?;
    let pairs = raw
        .into_iter()
        .enumerate()
        .map(|(k, jp)| {
            let at = |side: &str, e: divlat::Error| invalid(path, format!("pair {}: {side}: {e}", k + 1));
            Ok((
                Distribution::validate(&jp.p).map_err(|e| at("p", e))?,
                Distribution::validate(&jp.q).map_err(|e| at("q", e))?,
            ))
        })
        .collect::<CliResult<Vec<Pair>>>()?;
    check_lengths(path, &pairs, |k| format!("pair {}", k + 1))?;
    Ok(pairs)
}

fn check_lengths(path: &Path, pairs: &[Pair], name: impl Fn(usize) -> String) -> CliResult<()> {
    match pairs.iter().position(|(p, q)| p.len() != q.len()) {
        Some(k) => Err(invalid(
            path,
            format!(
                "{}: lengths differ ({} vs {})",
                name(k),
                pairs[k].0.len(),
                pairs[k].1.len()
            ),
        )),
        None => Ok(()),
    }
}
