//! The minimal-modulus search loop, nonexistence sweeps and the recursive
//! multicolor Ramsey bound.

use alloc::vec;
use alloc::vec::Vec;

use crate::checker::{check_triangle_fast, screen_class_zero, Condition, Verdict, Witness};
use crate::error::{Error, Result};
use crate::number_theory::{mul_mod, pow_mod, prime_factors, smallest_generator, PrimeSieve};
use crate::partition::{build_class_zero, CyclotomicPartition};

/// Sweep bound for 8 colors: the recursive bound on `R(3;8)`.
pub const EIGHT_COLOR_SWEEP_BOUND: u64 = 109_602;

/// Sweep bound for 13 colors below which no construction exists.
pub const THIRTEEN_COLOR_SWEEP_BOUND: u64 = 190_997;

/// Ascending primes `N` in `(lo, hi]` with `N ≡ 1 (mod 2m)`.
pub fn candidate_primes(m: usize, lo: u64, hi: u64, sieve: &PrimeSieve) -> Result<impl Iterator<Item = u64> + '_> {
    if hi > sieve.bound() {
        return Err(Error::SieveTooSmall { n: hi, bound: sieve.bound() });
    }
    if m == 0 {
        return Err(Error::TooFewColors(m));
    }
    let step = 2 * m as u64;
    Ok(sieve.primes_in(lo.saturating_add(1), hi).filter(move |n| n % step == 1))
}

/// Result of running one candidate modulus through the search steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Screening {
    pub modulus: u64,
    pub generator: u64,
    /// `Ok` iff the single-generator partition passes every check; otherwise
    /// the first failed check and its witness.
    pub verdict: Verdict,
}

impl Screening {
    pub fn passed(&self) -> bool {
        self.verdict.is_ok()
    }
}

/// Runs a candidate prime `N ≡ 1 (mod 2m)` through the search steps:
/// factor `N - 1`, find the smallest generator, build class zero, test it
/// cheaply (symmetry, sum-free, cyclic basis) and only then build the other
/// classes and test the triangle condition.
pub fn screen_candidate(n: u64, m: usize, sieve: &PrimeSieve) -> Result<Screening> {
    if m < 2 {
        return Err(Error::TooFewColors(m));
    }
    if n % (2 * m as u64) != 1 {
        return Err(Error::OddClassSize { modulus: n, m });
    }
    let x = smallest_generator(n, &prime_factors(n - 1, sieve)?)?;
    if let Some(w) = probe_sum_free(n, m, x) {
        return Ok(Screening { modulus: n, generator: x, verdict: Err(w) });
    }
    let x0 = build_class_zero(n, m, x)?;
    let verdict = match screen_class_zero(&x0) {
        Ok(()) => check_triangle_fast(&CyclotomicPartition::build(n, m, x)?),
        Err(w) => Err(w),
    };
    Ok(Screening { modulus: n, generator: x, verdict })
}

/// Looks for `a ∈ X_0` with `1 - a ∈ X_0` without materializing `X_0`,
/// testing membership as `b^k = 1`. Walks the first few powers of `x^m` only,
/// enough to cost at most about half of building the class, and returns the
/// sum-free witness on a hit. `None` means undecided.
///
/// `X_0` is symmetric whenever `k` is even, so a sum-free failure is the
/// first failure the full screen would report.
fn probe_sum_free(n: u64, m: usize, x: u64) -> Option<Witness> {
    let k = (n - 1) / m as u64;
    let log_k = u64::from(64 - k.leading_zeros());
    let step = pow_mod(x, m as u64, n);
    let mut a = step;
    for _ in 1..k / (2 * log_k) {
        if pow_mod(n + 1 - a, k, n) == 1 {
            return Some(Witness { condition: Condition::SumFree, classes: vec![0], residue: 1 });
        }
        a = mul_mod(a, step, n);
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Status {
    Found,
    Exhausted,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Found => "found",
            Status::Exhausted => "exhausted",
        }
    }
}

/// Outcome of a search or sweep for one number of colors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub colors: usize,
    pub status: Status,
    /// Smallest passing modulus, when found.
    pub modulus: Option<u64>,
    /// Its smallest generator, when found.
    pub generator: Option<u64>,
    pub bound: u64,
    /// Candidates screened, including the passing one.
    pub candidates_tested: u64,
}

impl SearchOutcome {
    pub fn exhausted(colors: usize, bound: u64, candidates_tested: u64) -> Self {
        SearchOutcome { colors, status: Status::Exhausted, modulus: None, generator: None, bound, candidates_tested }
    }

    pub fn found(colors: usize, bound: u64, candidates_tested: u64, modulus: u64, generator: u64) -> Self {
        SearchOutcome {
            colors,
            status: Status::Found,
            modulus: Some(modulus),
            generator: Some(generator),
            bound,
            candidates_tested,
        }
    }
}

/// Smallest prime `N <= sieve.bound()` whose single-generator partition into
/// `m` classes passes every check.
pub fn search_min_modulus(m: usize, sieve: &PrimeSieve) -> Result<SearchOutcome> {
    if m < 2 {
        return Err(Error::TooFewColors(m));
    }
    let bound = sieve.bound();
    let mut tested = 0;
    for n in candidate_primes(m, 0, bound, sieve)? {
        tested += 1;
        let s = screen_candidate(n, m, sieve)?;
        if s.passed() {
            return Ok(SearchOutcome::found(m, bound, tested, n, s.generator));
        }
    }
    Ok(SearchOutcome::exhausted(m, bound, tested))
}

/// Every candidate up to the bound, with its screening result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sweep {
    pub outcome: SearchOutcome,
    pub log: Vec<Screening>,
}

impl Sweep {
    pub fn passing(&self) -> impl Iterator<Item = &Screening> {
        self.log.iter().filter(|s| s.passed())
    }
}

/// Screens every candidate prime up to `sieve.bound()` without stopping
/// early. The outcome is `Exhausted` iff no candidate passes; otherwise it
/// names the smallest passing one.
pub fn sweep_nonexistence(m: usize, sieve: &PrimeSieve) -> Result<Sweep> {
    if m < 2 {
        return Err(Error::TooFewColors(m));
    }
    let log = candidate_primes(m, 0, sieve.bound(), sieve)?
        .map(|n| screen_candidate(n, m, sieve))
        .collect::<Result<Vec<_>>>()?;
    Ok(Sweep { outcome: summarize(m, sieve.bound(), &log), log })
}

/// Outcome for an ordered log of screenings.
pub fn summarize(m: usize, bound: u64, log: &[Screening]) -> SearchOutcome {
    let tested = log.len() as u64;
    match log.iter().find(|s| s.passed()) {
        Some(s) => SearchOutcome::found(m, bound, tested, s.modulus, s.generator),
        None => SearchOutcome::exhausted(m, bound, tested),
    }
}

/// Default sweep bound for `m` colors: the published bounds for 8 and 13,
/// otherwise `fallback`.
pub fn default_sweep_bound(m: usize, fallback: u64) -> u64 {
    match m {
        8 => EIGHT_COLOR_SWEEP_BOUND,
        13 => THIRTEEN_COLOR_SWEEP_BOUND,
        _ => fallback,
    }
}

/// Upper bounds for the triangle Ramsey number `R(3, ..., 3)` by number of
/// colors: `6`, `17`, then `c·(b(c-1) - 1) + 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RamseyBoundTable {
    values: Vec<u64>,
}

impl RamseyBoundTable {
    /// Entries for `2..=max_colors`; stops early if the next entry would
    /// overflow `u64`.
    pub fn up_to(max_colors: usize) -> Self {
        let mut values = vec![0, 0];
        for c in 2..=max_colors {
            let next = match c {
                2 => Some(6),
                3 => Some(17),
                _ => (c as u64).checked_mul(values[c - 1] - 1).and_then(|v| v.checked_add(2)),
            };
            match next {
                Some(v) => values.push(v),
                None => break,
            }
        }
        RamseyBoundTable { values }
    }

    /// Bound for `colors`, if within the table.
    pub fn get(&self, colors: usize) -> Option<u64> {
        (colors >= 2).then(|| self.values.get(colors).copied()).flatten()
    }

    /// Largest color count in the table.
    pub fn max_colors(&self) -> usize {
        self.values.len() - 1
    }
}

/// The recursive bound for `colors >= 2`; errors below 2 or on overflow.
pub fn ramsey_recursive_bound(colors: usize) -> Result<u64> {
    if colors < 2 {
        return Err(Error::TooFewColors(colors));
    }
    RamseyBoundTable::up_to(colors)
        .get(colors)
        .ok_or(Error::OutOfRange { what: "color count (bound overflows u64)", value: colors as u64 })
}
