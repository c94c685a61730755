//! Report records and serialization.
//!
//! JSON output is byte-reproducible for a fixed (identity, seed, config):
//! params use sorted maps, floats print shortest-roundtrip, and wall-clock
//! timing defaults to redacted (zero) so reruns compare equal byte-for-byte.
//! Opting into real timing is the caller's choice via [`redact_timing`].

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::series::{Coeff, TruncatedSeries};

use super::limits::LimitReport;

/// One verified instance of an identity: the exactly rendered parameters,
/// both side values (exact rationals or series digests) and the exact
/// equality flag.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct VerificationReport {
    pub identity: String,
    pub params: BTreeMap<String, String>,
    pub n: u32,
    pub lhs: String,
    pub rhs: String,
    pub equal: bool,
    pub seed: u64,
    pub rejected: u64,
    pub ms: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
    Markdown,
}

impl std::str::FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            "md" | "markdown" => Ok(ReportFormat::Markdown),
            other => Err(format!("unknown format `{other}` (expected json, csv or md)")),
        }
    }
}

/// Short stable digest of a series in its canonical text form, used where a
/// full coefficient listing would bloat reports.
pub fn series_digest<C: Coeff>(s: &TruncatedSeries<C>) -> String {
    let hash = Sha256::digest(s.canonical_text().as_bytes());
    let mut out = String::from("series:");
    for byte in &hash[..8] {
        write!(out, "{byte:02x}").expect("writing to string");
    }
    out
}

/// Zero out wall-clock timing; reports then depend only on (identity, seed,
/// config) and serialize byte-identically across runs.
pub fn redact_timing(reports: &mut [VerificationReport]) {
    for r in reports {
        r.ms = 0;
    }
}

fn params_text(params: &BTreeMap<String, String>) -> String {
    params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join("; ")
}

/// Serialize reports in the requested format.
pub fn emit_report(reports: &[VerificationReport], format: ReportFormat) -> Vec<u8> {
    match format {
        ReportFormat::Json => {
            let mut bytes = serde_json::to_vec_pretty(reports).expect("reports serialize");
            bytes.push(b'\n');
            bytes
        }
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["identity", "params", "n", "lhs", "rhs", "equal", "seed", "rejected", "ms"])
                .expect("header");
            for r in reports {
                w.write_record([
                    r.identity.as_str(),
                    &params_text(&r.params),
                    &r.n.to_string(),
                    &r.lhs,
                    &r.rhs,
                    &r.equal.to_string(),
                    &r.seed.to_string(),
                    &r.rejected.to_string(),
                    &r.ms.to_string(),
                ])
                .expect("record");
            }
            w.into_inner().expect("csv buffer")
        }
        ReportFormat::Markdown => {
            let mut out = String::new();
            out.push_str("| identity | params | n | lhs | rhs | equal | seed | rejected | ms |\n");
            out.push_str("|---|---|---|---|---|---|---|---|---|\n");
            for r in reports {
                writeln!(
                    out,
                    "| {} | {} | {} | {} | {} | {} | {} | {} | {} |",
                    r.identity,
                    params_text(&r.params),
                    r.n,
                    r.lhs,
                    r.rhs,
                    r.equal,
                    r.seed,
                    r.rejected,
                    r.ms
                )
                .expect("writing to string");
            }
            out.into_bytes()
        }
    }
}

/// Serialize limit reports in the requested format.
pub fn emit_limit_report(reports: &[LimitReport], format: ReportFormat) -> Vec<u8> {
    match format {
        ReportFormat::Json => {
            let mut bytes = serde_json::to_vec_pretty(reports).expect("reports serialize");
            bytes.push(b'\n');
            bytes
        }
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["limit", "params", "n", "value", "err", "tol", "pass"])
                .expect("header");
            for r in reports {
                for s in &r.samples {
                    w.write_record([
                        r.limit.as_str(),
                        &params_text(&r.params),
                        &s.n.to_string(),
                        &format!("{}", s.value),
                        &format!("{}", s.err),
                        &format!("{}", r.tol),
                        &r.pass.to_string(),
                    ])
                    .expect("record");
                }
            }
            w.into_inner().expect("csv buffer")
        }
        ReportFormat::Markdown => {
            let mut out = String::new();
            out.push_str("| limit | params | final n | final value | final err | tol | pass |\n");
            out.push_str("|---|---|---|---|---|---|---|\n");
            for r in reports {
                let last = r.samples.last();
                writeln!(
                    out,
                    "| {} | {} | {} | {} | {} | {} | {} |",
                    r.limit,
                    params_text(&r.params),
                    last.map(|s| s.n.to_string()).unwrap_or_default(),
                    last.map(|s| format!("{}", s.value)).unwrap_or_default(),
                    last.map(|s| format!("{}", s.err)).unwrap_or_default(),
                    r.tol,
                    r.pass
                )
                .expect("writing to string");
            }
            out.into_bytes()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_report() -> VerificationReport {
        VerificationReport {
            identity: "msw".into(),
            params: BTreeMap::from([("index".to_string(), "1,2".to_string())]),
            n: 4,
            lhs: "5/12".into(),
            rhs: "5/12".into(),
            equal: true,
            seed: 42,
            rejected: 0,
            ms: 3,
        }
    }

    #[test]
    fn empty_json_is_bracket_pair() {
        assert_eq!(emit_report(&[], ReportFormat::Json), b"[]\n");
    }

    #[test]
    fn json_contains_equality_flag() {
        let bytes = emit_report(&[sample_report()], ReportFormat::Json);
        let text = String::from_utf8(bytes).unwrap();
        assert!(text.contains("\"equal\": true"));
        assert!(text.contains("\"identity\": \"msw\""));
    }

    #[test]
    fn markdown_emits_one_row_per_report() {
        let bytes = emit_report(&[sample_report(), sample_report()], ReportFormat::Markdown);
        let text = String::from_utf8(bytes).unwrap();
        assert_eq!(text.lines().count(), 4);
    }

    #[test]
    fn csv_quotes_comma_bearing_params() {
        let bytes = emit_report(&[sample_report()], ReportFormat::Csv);
        let text = String::from_utf8(bytes).unwrap();
        assert!(text.contains("\"index=1,2\""));
    }

    #[test]
    fn redaction_zeroes_timing() {
        let mut reports = vec![sample_report()];
        redact_timing(&mut reports);
        assert_eq!(reports[0].ms, 0);
    }

    #[test]
    fn digest_is_stable_and_short() {
        let s = TruncatedSeries::<crate::exact::Rational>::one(crate::series::VarSet::XYZ, 3);
        let d1 = series_digest(&s);
        let d2 = series_digest(&s);
        assert_eq!(d1, d2);
        assert_eq!(d1.len(), "series:".len() + 16);
    }
}
