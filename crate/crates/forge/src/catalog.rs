//! The bundled table of smallest moduli for 2 to 400 colors, and
//! verification of its rows by reconstruction.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use ramsey_forge_core::number_theory::{prime_factors, smallest_generator, PrimeSieve};
use ramsey_forge_core::search::{candidate_primes, screen_candidate};
use ramsey_forge_core::{checker, CheckReport, CyclotomicPartition};

/// `m,N,x` rows, ascending in `m`; 8 and 13 are absent.
pub const CATALOG_CSV: &str = include_str!("../data/catalog.csv");

/// Color counts with no known single-generator construction.
pub const MISSING_COLORS: [usize; 2] = [8, 13];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogRow {
    pub m: usize,
    #[serde(rename = "N")]
    pub n: u64,
    pub x: u64,
}

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("catalog line {line}: {source}")]
    Parse { line: u64, source: csv::Error },
    #[error("catalog line {line} (m={m}): {reason}")]
    Invalid { line: u64, m: usize, reason: String },
    #[error("catalog header must be `m,N,x`, found `{0}`")]
    Header(String),
}

/// Parses and invariant-checks catalog text: header `m,N,x`, ascending
/// distinct `m` in `2..=400` other than 8 and 13, and `N ≡ 1 (mod 2m)`.
pub fn parse_catalog(text: &str) -> Result<Vec<CatalogRow>, CatalogError> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let header = reader.headers().map_err(|source| CatalogError::Parse { line: 1, source })?;
    if header != vec!["m", "N", "x"] {
        return Err(CatalogError::Header(header.iter().collect::<Vec<_>>().join(",")));
    }
    let mut rows: Vec<CatalogRow> = Vec::new();
    for (i, rec) in reader.deserialize::<CatalogRow>().enumerate() {
        let line = i as u64 + 2;
        let row = rec.map_err(|source| CatalogError::Parse { line, source })?;
        let invalid = |reason: String| CatalogError::Invalid { line, m: row.m, reason };
        if !(2..=400).contains(&row.m) || MISSING_COLORS.contains(&row.m) {
            return Err(invalid(format!("color count {} not expected in the table", row.m)));
        }
        if let Some(prev) = rows.last() {
            if prev.m >= row.m {
                return Err(invalid(format!("m not ascending after {}", prev.m)));
            }
        }
        if row.n < 3 || (row.n - 1) % (2 * row.m as u64) != 0 {
            return Err(invalid(format!("N = {} is not 1 mod {}", row.n, 2 * row.m)));
        }
        if row.x == 0 || row.x >= row.n {
            return Err(invalid(format!("x = {} is not a nonzero residue mod {}", row.x, row.n)));
        }
        rows.push(row);
    }
    Ok(rows)
}

/// The bundled catalog.
pub fn load_catalog() -> Result<Vec<CatalogRow>, CatalogError> {
    parse_catalog(CATALOG_CSV)
}

/// Whether every smaller candidate modulus fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Minimality {
    pub minimal: bool,
    /// Smallest candidate below `N` that passes, if any.
    pub earlier_passing: Option<u64>,
    /// Candidates below `N` replayed.
    pub candidates_checked: u64,
}

/// Verdict on one catalog row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowVerification {
    pub row: CatalogRow,
    pub prime: bool,
    /// The smallest generator of `Z_N^×`, when `N` is prime.
    pub smallest_generator: Option<u64>,
    /// `None` when the partition cannot be built at all.
    pub report: Option<CheckReport>,
    pub minimality: Option<Minimality>,
}

impl RowVerification {
    pub fn generator_ok(&self) -> bool {
        self.smallest_generator == Some(self.row.x)
    }

    pub fn passed(&self) -> bool {
        self.prime
            && self.generator_ok()
            && self.report.as_ref().is_some_and(|r| r.overall)
            && self.minimality.as_ref().is_none_or(|m| m.minimal)
    }
}

/// Rebuilds the row's partition and checks it: `N` prime, `x` its smallest
/// generator, the classes pass [`checker::full_fast_check`], and, when
/// `minimality` is set, every candidate prime below `N` fails.
///
/// `sieve` must reach `N`.
pub fn verify_row(row: CatalogRow, minimality: bool, sieve: &PrimeSieve) -> RowVerification {
    assert!(sieve.bound() >= row.n, "sieve bound {} below N = {}", sieve.bound(), row.n);
    let mut out =
        RowVerification { row, prime: sieve.is_prime(row.n), smallest_generator: None, report: None, minimality: None };
    if !out.prime {
        return out;
    }
    out.smallest_generator = prime_factors(row.n - 1, sieve).and_then(|f| smallest_generator(row.n, &f)).ok();
    out.report = CyclotomicPartition::build(row.n, row.m, row.x).ok().map(|p| checker::full_fast_check(&p));
    if minimality {
        out.minimality = Some(replay_below(row, sieve));
    }
    out
}

fn replay_below(row: CatalogRow, sieve: &PrimeSieve) -> Minimality {
    let mut checked = 0;
    let candidates = candidate_primes(row.m, 0, row.n - 1, sieve).expect("sieve reaches N");
    for n in candidates {
        checked += 1;
        let s = screen_candidate(n, row.m, sieve).expect("candidate is a valid prime");
        if s.passed() {
            return Minimality { minimal: false, earlier_passing: Some(n), candidates_checked: checked };
        }
    }
    Minimality { minimal: true, earlier_passing: None, candidates_checked: checked }
}
