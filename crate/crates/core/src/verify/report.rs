//! Verification reports and their text/JSON encodings.

use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::Path;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// Reserved for semi-decision probes that found no counterexample.
    NotFalsified,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::NotFalsified => "not-falsified",
        })
    }
}

/// Outcome of one registered check. Field order is the JSON key order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub check_id: String,
    pub status: Status,
    #[serde(rename = "box")]
    pub box_radius: i32,
    pub samples: u64,
    pub seed: u64,
    pub witness: Option<String>,
    pub duration_ms: u64,
}

impl VerificationReport {
    pub fn pass(check_id: &str, box_radius: i32, samples: u64) -> Self {
        VerificationReport {
            check_id: check_id.to_string(),
            status: Status::Pass,
            box_radius,
            samples,
            seed: 0,
            witness: None,
            duration_ms: 0,
        }
    }

    pub fn fail(check_id: &str, box_radius: i32, samples: u64, witness: String) -> Self {
        VerificationReport { status: Status::Fail, witness: Some(witness), ..Self::pass(check_id, box_radius, samples) }
    }

    /// Pass when `witness` is `None`, fail with it otherwise.
    pub fn from_witness(check_id: &str, box_radius: i32, samples: u64, witness: Option<String>) -> Self {
        match witness {
            None => Self::pass(check_id, box_radius, samples),
            Some(w) => Self::fail(check_id, box_radius, samples, w),
        }
    }

    pub fn is_failure(&self) -> bool {
        self.status == Status::Fail
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<13} {:<28} box={} samples={} seed={} ms={}",
            self.status.to_string().to_uppercase(),
            self.check_id,
            self.box_radius,
            self.samples,
            self.seed,
            self.duration_ms
        )?;
        if let Some(w) = &self.witness {
            write!(f, " witness={w}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ReportFormat {
    #[default]
    Text,
    Json,
}

impl std::str::FromStr for ReportFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(ReportFormat::Text),
            "json" => Ok(ReportFormat::Json),
            other => Err(format!("unknown report format {other:?}")),
        }
    }
}

/// Render reports: JSON is a top-level array of report objects, text is one
/// line per report.
pub fn render_reports(reports: &[VerificationReport], format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => serde_json::to_string_pretty(reports).expect("reports serialize"),
        ReportFormat::Text => reports.iter().map(|r| format!("{r}\n")).collect(),
    }
}

#[derive(Debug, thiserror::Error)]
#[error("failed to write report: {0}")]
pub struct ReportWriteError(#[from] pub io::Error);

/// Write the rendered reports to `path`, or to stdout when `path` is `None`.
pub fn emit_report(
    reports: &[VerificationReport],
    format: ReportFormat,
    path: Option<&Path>,
) -> Result<(), ReportWriteError> {
    let mut text = render_reports(reports, format);
    if format == ReportFormat::Json {
        text.push('\n');
    }
    match path {
        Some(p) => fs::write(p, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_json_is_empty_array() {
        assert_eq!(render_reports(&[], ReportFormat::Json), "[]");
    }

    #[test]
    fn json_key_order() {
        let r = VerificationReport::pass("torus.relations", 3, 3);
        let json = render_reports(&[r], ReportFormat::Json);
        let keys = ["check_id", "status", "box", "samples", "seed", "witness", "duration_ms"];
        let positions: Vec<_> = keys.iter().map(|k| json.find(&format!("\"{k}\"")).unwrap()).collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]), "{json}");
        assert!(json.contains("\"status\": \"pass\""));
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v.as_array().unwrap().len(), 1);
        assert!(v[0]["witness"].is_null());
    }

    #[test]
    fn failure_carries_witness() {
        let r = VerificationReport::fail("matrix.jacobi", 3, 10, "[[1, 0], [0, -1]]".into());
        let json = render_reports(std::slice::from_ref(&r), ReportFormat::Json);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        let w = v[0]["witness"].as_str().unwrap();
        assert!(w.parse::<crate::Matrix2>().is_ok());
        assert!(r.to_string().starts_with("FAIL"));
        let nf =
            VerificationReport { status: Status::NotFalsified, ..VerificationReport::pass("probe.nonfreeness", 0, 0) };
        assert!(render_reports(&[nf], ReportFormat::Json).contains("\"not-falsified\""));
    }

    #[test]
    fn write_to_file() {
        let dir = std::env::temp_dir().join(format!("eala-report-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("r.json");
        emit_report(&[], ReportFormat::Json, Some(&path)).unwrap();
        assert_eq!(fs::read_to_string(&path).unwrap(), "[]\n");
        let bad = dir.join("missing").join("r.json");
        assert!(emit_report(&[], ReportFormat::Json, Some(&bad)).is_err());
        fs::remove_dir_all(&dir).unwrap();
    }
}
