//! Report rows and their CSV / JSON renderings.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use serde::Serialize;

use crate::{json, CliError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportRow {
    pub measure: String,
    pub value: f64,
    pub dims: Vec<usize>,
    pub params: BTreeMap<String, f64>,
    pub seed: Option<u64>,
}

impl ReportRow {
    pub fn new(measure: impl Into<String>, value: f64, dims: &[usize]) -> Self {
        Self {
            measure: measure.into(),
            value,
            dims: dims.to_vec(),
            params: BTreeMap::new(),
            seed: None,
        }
    }

    pub fn with_param(mut self, name: &str, value: f64) -> Self {
        self.params.insert(name.to_owned(), value);
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }
}

/// `2x3` for `[2, 3]`.
pub fn dims_label(dims: &[usize]) -> String {
    dims.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join("x")
}

fn check_finite(rows: &[ReportRow]) -> Result<(), CliError> {
    for row in rows {
        if !row.value.is_finite() || row.params.values().any(|v| !v.is_finite()) {
            return Err(CliError::Input(format!(
                "non-finite value in row {}",
                row.measure
            )));
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct Rows<'a> {
    rows: &'a [ReportRow],
}

pub fn render(rows: &[ReportRow], format: Format) -> Result<String, CliError> {
    check_finite(rows)?;
    match format {
        Format::Json => json::to_string(&Rows { rows }),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["measure", "value", "dims", "params", "seed"])?;
            for row in rows {
                let params = row
                    .params
                    .iter()
                    .map(|(k, v)| format!("{k}={}", json::format_f64(*v)))
                    .collect::<Vec<_>>()
                    .join(";");
                w.write_record([
                    row.measure.clone(),
                    json::format_f64(row.value),
                    dims_label(&row.dims),
                    params,
                    row.seed.map(|s| s.to_string()).unwrap_or_default(),
                ])?;
            }
            csv_string(w)
        }
    }
}

pub(crate) fn csv_string(w: csv::Writer<Vec<u8>>) -> Result<String, CliError> {
    let bytes = w
        .into_inner()
        .map_err(|e| CliError::io("<csv buffer>", e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("CSV fields are UTF-8"))
}

/// Writes to `path`, or to stdout when `path` is `None` or `-`.
pub fn emit(text: &str, path: Option<&Path>) -> Result<(), CliError> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            std::fs::write(p, text).map_err(|e| CliError::io(p.display().to_string(), e))
        }
        _ => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|()| out.flush())
                .map_err(|e| CliError::io("<stdout>", e))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows() -> Vec<ReportRow> {
        vec![
            ReportRow::new("q_total", 1.5, &[2, 2])
                .with_param("w", 0.5)
                .with_seed(7),
            ReportRow::new("q_side_a", 0.75, &[2, 2]),
        ]
    }

    #[test]
    fn csv_has_header_and_reparses() {
        let text = render(&rows(), Format::Csv).unwrap();
        let mut r = csv::Reader::from_reader(text.as_bytes());
        assert_eq!(
            r.headers().unwrap().iter().collect::<Vec<_>>(),
            ["measure", "value", "dims", "params", "seed"]
        );
        let recs: Vec<_> = r.records().map(Result::unwrap).collect();
        assert_eq!(recs.len(), 2);
        assert_eq!(recs[0][1].parse::<f64>().unwrap(), 1.5);
        assert_eq!(&recs[0][2], "2x2");
        assert_eq!(&recs[0][3], "w=5.0000000000000000e-1");
        assert_eq!(&recs[0][4], "7");
        assert_eq!(&recs[1][4], "");
    }

    #[test]
    fn json_reparses() {
        let text = render(&rows(), Format::Json).unwrap();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["rows"][0]["value"].as_f64(), Some(1.5));
        assert_eq!(v["rows"][0]["params"]["w"].as_f64(), Some(0.5));
        assert!(v["rows"][1]["seed"].is_null());
    }

    #[test]
    fn non_finite_rows_are_rejected() {
        let bad = [ReportRow::new("x", f64::NAN, &[2])];
        assert!(render(&bad, Format::Json).is_err());
        assert!(render(&bad, Format::Csv).is_err());
    }
}
