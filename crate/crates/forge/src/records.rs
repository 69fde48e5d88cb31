//! Output rows and their CSV / JSON-lines encodings.

use std::io::{BufRead, Write};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use ramsey_forge_core::search::{Screening, SearchOutcome, Status};
use ramsey_forge_core::{CheckReport, Condition, Witness};

use crate::catalog::RowVerification;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown output format `{other}` (expected csv or json)")),
        }
    }
}

/// One search or sweep result. CSV columns:
/// `m,status,N,x,bound_used,candidates_tested,elapsed_ms`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchRecord {
    pub m: usize,
    #[serde(with = "status_str")]
    pub status: Status,
    #[serde(rename = "N")]
    pub n: Option<u64>,
    pub x: Option<u64>,
    pub bound_used: u64,
    pub candidates_tested: u64,
    pub elapsed_ms: u64,
}

impl SearchRecord {
    pub fn new(outcome: &SearchOutcome, elapsed_ms: u64) -> Self {
        SearchRecord {
            m: outcome.colors,
            status: outcome.status,
            n: outcome.modulus,
            x: outcome.generator,
            bound_used: outcome.bound,
            candidates_tested: outcome.candidates_tested,
            elapsed_ms,
        }
    }
}

mod status_str {
    use super::Status;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(s: &Status, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(s.as_str())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Status, D::Error> {
        match String::deserialize(de)?.as_str() {
            "found" => Ok(Status::Found),
            "exhausted" => Ok(Status::Exhausted),
            other => Err(serde::de::Error::custom(format!("unknown status `{other}`"))),
        }
    }
}

/// One line of a sweep's failure log.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FailureLine {
    #[serde(rename = "N")]
    pub n: u64,
    pub x: u64,
    /// `None` for a passing candidate.
    pub failed_check: Option<Condition>,
    pub witness: Option<Witness>,
}

impl From<&Screening> for FailureLine {
    fn from(s: &Screening) -> Self {
        let witness = s.verdict.clone().err();
        FailureLine { n: s.modulus, x: s.generator, failed_check: witness.as_ref().map(|w| w.condition), witness }
    }
}

fn json_lines<W: Write, T: Serialize>(mut out: W, rows: impl IntoIterator<Item = T>) -> anyhow::Result<()> {
    for row in rows {
        serde_json::to_writer(&mut out, &row)?;
        out.write_all(b"\n")?;
    }
    out.flush()?;
    Ok(())
}

pub fn write_search_records<W: Write>(out: W, format: Format, rows: &[SearchRecord]) -> anyhow::Result<()> {
    match format {
        Format::Json => json_lines(out, rows),
        Format::Csv => {
            let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
            w.write_record(["m", "status", "N", "x", "bound_used", "candidates_tested", "elapsed_ms"])?;
            for r in rows {
                w.serialize(r)?;
            }
            w.flush()?;
            Ok(())
        }
    }
}

/// Reads records written by [`write_search_records`] in the same format.
pub fn read_search_records<R: BufRead>(input: R, format: Format) -> anyhow::Result<Vec<SearchRecord>> {
    match format {
        Format::Json => input
            .lines()
            .filter(|l| l.as_ref().map_or(true, |l| !l.trim().is_empty()))
            .map(|l| Ok(serde_json::from_str(&l?)?))
            .collect(),
        Format::Csv => {
            let mut r = csv::Reader::from_reader(input);
            r.deserialize().map(|rec| Ok(rec?)).collect()
        }
    }
}

pub fn write_failure_log<W: Write>(out: W, log: &[Screening]) -> anyhow::Result<()> {
    json_lines(out, log.iter().map(FailureLine::from))
}

const REPORT_COLUMNS: [&str; 8] = [
    "symmetric",
    "sum_free",
    "cyclic_basis",
    "triangle",
    "overall",
    "failed_check",
    "witness_classes",
    "witness_residue",
];

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(String::new, |v| v.to_string())
}

/// CSV cells for a report; witness classes are space separated.
fn report_cells(r: Option<&CheckReport>) -> Vec<String> {
    let Some(r) = r else {
        return vec![String::new(); REPORT_COLUMNS.len()];
    };
    let w = r.witness.as_ref();
    vec![
        r.symmetric.to_string(),
        r.sum_free.to_string(),
        r.cyclic_basis.to_string(),
        r.triangle.to_string(),
        r.overall.to_string(),
        opt(w.map(|w| w.condition.as_str())),
        opt(w.map(|w| w.classes.iter().map(usize::to_string).collect::<Vec<_>>().join(" "))),
        opt(w.map(|w| w.residue)),
    ]
}

/// One partition from the exhaustive small scan, checked both ways.
#[derive(Debug, Clone, Serialize)]
pub struct ScanRow {
    pub m: usize,
    #[serde(rename = "N")]
    pub n: u64,
    pub x: u64,
    pub fast: CheckReport,
    pub naive: CheckReport,
    pub agrees: bool,
}

fn csv_table<W: Write>(out: W, header: Vec<&str>, rows: impl Iterator<Item = Vec<String>>) -> anyhow::Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    w.write_record(header)?;
    for r in rows {
        w.write_record(r)?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_scan_rows<W: Write>(out: W, format: Format, rows: &[ScanRow]) -> anyhow::Result<()> {
    match format {
        Format::Json => json_lines(out, rows),
        Format::Csv => {
            let header = ["m", "N", "x"].into_iter().chain(REPORT_COLUMNS).chain(["naive_overall", "agrees"]);
            let cells = rows.iter().map(|r| {
                let mut c = vec![r.m.to_string(), r.n.to_string(), r.x.to_string()];
                c.extend(report_cells(Some(&r.fast)));
                c.extend([r.naive.overall.to_string(), r.agrees.to_string()]);
                c
            });
            csv_table(out, header.collect(), cells)
        }
    }
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    #[serde(flatten)]
    verification: &'a RowVerification,
    generator_ok: bool,
    passed: bool,
}

pub fn write_verifications<W: Write>(out: W, format: Format, rows: &[RowVerification]) -> anyhow::Result<()> {
    match format {
        Format::Json => json_lines(
            out,
            rows.iter().map(|v| VerifyJson { verification: v, generator_ok: v.generator_ok(), passed: v.passed() }),
        ),
        Format::Csv => {
            let header = ["m", "N", "x", "prime", "smallest_generator", "generator_ok"]
                .into_iter()
                .chain(REPORT_COLUMNS)
                .chain(["minimal", "earlier_passing", "passed"]);
            let cells = rows.iter().map(|v| {
                let mut c = vec![
                    v.row.m.to_string(),
                    v.row.n.to_string(),
                    v.row.x.to_string(),
                    v.prime.to_string(),
                    opt(v.smallest_generator),
                    v.generator_ok().to_string(),
                ];
                c.extend(report_cells(v.report.as_ref()));
                let min = v.minimality.as_ref();
                c.extend([
                    opt(min.map(|m| m.minimal)),
                    opt(min.and_then(|m| m.earlier_passing)),
                    v.passed().to_string(),
                ]);
                c
            });
            csv_table(out, header.collect(), cells)
        }
    }
}
