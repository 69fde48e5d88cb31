//! Parallel drivers for searches, sweeps and catalog verification.
//!
//! Within one color count the candidate primes are screened in rounds of
//! contiguous blocks. A round runs all its blocks in parallel, then its
//! results are scanned in ascending order and the first passing modulus is
//! accepted. A later block therefore never wins while an earlier one is
//! undecided, and `candidates_tested` counts exactly the candidates up to
//! and including the accepted one, whatever the worker count.

use std::time::Instant;

use anyhow::{bail, Context};
use rayon::prelude::*;

use ramsey_forge_core::oracle::{naive_check, relation_algebra_check, RELATION_ALGEBRA_CAP};
use ramsey_forge_core::search::{candidate_primes, screen_candidate, summarize, Screening, SearchOutcome, Sweep};
use ramsey_forge_core::{CyclotomicPartition, LabeledPartition, PrimeSieve};

use crate::catalog::{verify_row, CatalogRow, RowVerification};
use crate::progress::Progress;
use crate::records::SearchRecord;

/// The sieve stores one bit per integer; 2^32 bits is 512 MiB.
pub const SIEVE_BOUND_LIMIT: u64 = 1 << 32;

/// Largest modulus the definition-level oracle is run on after a search.
pub const ORACLE_CAP: u64 = 20_000;

/// Candidates each worker screens per round.
const BLOCK: usize = 8;

/// Builds a sieve for `bound`, refusing bounds past the memory budget.
pub fn sieve_for(bound: u64) -> anyhow::Result<PrimeSieve> {
    if bound > SIEVE_BOUND_LIMIT {
        bail!(
            "bound {bound} exceeds the sieve memory budget (at most {SIEVE_BOUND_LIMIT}, {} MiB)",
            SIEVE_BOUND_LIMIT / 8 / (1 << 20)
        );
    }
    PrimeSieve::new(bound).with_context(|| format!("cannot sieve up to {bound}"))
}

pub struct Driver {
    pool: rayon::ThreadPool,
    progress: Progress,
}

impl Driver {
    /// `workers == 0` means the available parallelism.
    pub fn new(workers: usize, progress: Progress) -> anyhow::Result<Self> {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(workers).build()?;
        Ok(Driver { pool, progress })
    }

    pub fn workers(&self) -> usize {
        self.pool.current_num_threads()
    }

    pub fn progress(&self) -> &Progress {
        &self.progress
    }

    /// Smallest passing modulus for `m` up to `sieve.bound()`.
    pub fn search(&self, m: usize, sieve: &PrimeSieve) -> anyhow::Result<SearchOutcome> {
        let bound = sieve.bound();
        let candidates: Vec<u64> = candidate_primes(m, 0, bound, sieve)?.collect();
        let round = BLOCK * self.workers();
        let mut tested = 0u64;
        for chunk in candidates.chunks(round) {
            let screened = self.screen_all(chunk, m, sieve)?;
            for s in &screened {
                tested += 1;
                if s.passed() {
                    return Ok(SearchOutcome::found(m, bound, tested, s.modulus, s.generator));
                }
            }
            let last = *chunk.last().expect("chunks are nonempty");
            self.progress.tick(|| format!("search m={m}: {tested} candidates tested, N={last}"));
        }
        Ok(SearchOutcome::exhausted(m, bound, tested))
    }

    /// Every candidate for `m` up to `sieve.bound()`, screened in order.
    pub fn sweep(&self, m: usize, sieve: &PrimeSieve) -> anyhow::Result<Sweep> {
        let candidates: Vec<u64> = candidate_primes(m, 0, sieve.bound(), sieve)?.collect();
        let mut log = Vec::with_capacity(candidates.len());
        for chunk in candidates.chunks(64 * self.workers()) {
            log.extend(self.screen_all(chunk, m, sieve)?);
            let (done, last) = (log.len(), chunk.last().copied().unwrap_or(0));
            self.progress.tick(|| format!("sweep m={m}: {done}/{} candidates, N={last}", candidates.len()));
        }
        Ok(Sweep { outcome: summarize(m, sieve.bound(), &log), log })
    }

    fn screen_all(&self, chunk: &[u64], m: usize, sieve: &PrimeSieve) -> anyhow::Result<Vec<Screening>> {
        let screened = self
            .pool
            .install(|| chunk.par_iter().map(|&n| screen_candidate(n, m, sieve)).collect::<Result<Vec<_>, _>>())?;
        Ok(screened)
    }

    /// Searches each `m` in turn, in the order given, timing each search.
    pub fn search_all(
        &self,
        ms: impl IntoIterator<Item = usize>,
        sieve: &PrimeSieve,
    ) -> anyhow::Result<Vec<SearchRecord>> {
        ms.into_iter()
            .map(|m| {
                let start = Instant::now();
                let outcome = self.search(m, sieve)?;
                let record = SearchRecord::new(&outcome, start.elapsed().as_millis() as u64);
                self.progress.note(|| match (record.n, record.x) {
                    (Some(n), Some(x)) => format!("m={m}: N={n} x={x} after {} candidates", record.candidates_tested),
                    _ => format!("m={m}: exhausted {} candidates", record.candidates_tested),
                });
                Ok(record)
            })
            .collect()
    }

    /// Verifies rows in parallel; output keeps the input order.
    pub fn verify(&self, rows: &[CatalogRow], minimality: bool, sieve: &PrimeSieve) -> Vec<RowVerification> {
        let done = std::sync::atomic::AtomicUsize::new(0);
        self.pool.install(|| {
            rows.par_iter()
                .map(|&row| {
                    let v = verify_row(row, minimality, sieve);
                    let k = done.fetch_add(1, std::sync::atomic::Ordering::Relaxed) + 1;
                    self.progress.tick(|| format!("verify: {k}/{} rows, last m={} N={}", rows.len(), row.m, row.n));
                    v
                })
                .collect()
        })
    }
}

/// Definition-level cross-check of a found record: the naive checker must
/// pass for `N <= ORACLE_CAP`, and the relation-algebra identities must hold
/// for `N <= RELATION_ALGEBRA_CAP`. `None` when the record is out of range
/// or not found.
pub fn oracle_confirms(record: &SearchRecord) -> anyhow::Result<Option<bool>> {
    let (Some(n), Some(x)) = (record.n, record.x) else { return Ok(None) };
    if n > ORACLE_CAP {
        return Ok(None);
    }
    let p = LabeledPartition::from(&CyclotomicPartition::build(n, record.m, x)?);
    let mut ok = naive_check(&p).overall;
    if n <= RELATION_ALGEBRA_CAP {
        ok &= relation_algebra_check(&p, RELATION_ALGEBRA_CAP)?;
    }
    Ok(Some(ok))
}

#[cfg(test)]
mod tests {
    use super::*;
    use ramsey_forge_core::search::{search_min_modulus, sweep_nonexistence, Status};

    #[test]
    fn parallel_search_matches_sequential() {
        let sieve = PrimeSieve::new(20_000).unwrap();
        for workers in [1, 3] {
            let d = Driver::new(workers, Progress::disabled()).unwrap();
            for m in [2, 3, 7, 9, 10, 11, 12] {
                assert_eq!(d.search(m, &sieve).unwrap(), search_min_modulus(m, &sieve).unwrap(), "m={m}");
            }
        }
    }

    #[test]
    fn parallel_sweep_matches_sequential() {
        let sieve = PrimeSieve::new(5_000).unwrap();
        let d = Driver::new(2, Progress::disabled()).unwrap();
        assert_eq!(d.sweep(8, &sieve).unwrap(), sweep_nonexistence(8, &sieve).unwrap());
        let s = d.sweep(3, &sieve).unwrap();
        assert_eq!((s.outcome.status, s.outcome.modulus), (Status::Found, Some(13)));
    }

    #[test]
    fn oracle_on_found_records() {
        let d = Driver::new(1, Progress::disabled()).unwrap();
        let sieve = PrimeSieve::new(1000).unwrap();
        let records = d.search_all([3, 8, 4], &sieve).unwrap();
        assert_eq!(records.iter().map(|r| (r.m, r.n)).collect::<Vec<_>>(), [(3, Some(13)), (8, None), (4, Some(41))]);
        let verdicts: Vec<_> = records.iter().map(|r| oracle_confirms(r).unwrap()).collect();
        assert_eq!(verdicts, [Some(true), None, Some(true)]);
    }

    #[test]
    fn sieve_budget() {
        assert!(sieve_for(SIEVE_BOUND_LIMIT + 1).unwrap_err().to_string().contains("memory budget"));
    }
}
