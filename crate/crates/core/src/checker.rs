//! Fast validation of single-generator partitions.
//!
//! Every class of a cyclotomic partition is a multiplicative translate of
//! class zero, so most properties only need to be checked there:
//!
//! * `X_0` is sum-free iff `1 ∉ X_0 + X_0` (an `O(k)` scan),
//! * `X_0 + X_0 = Z_N ∖ X_0` implies the same for every class,
//! * `X_0 + X_i = Z_N ∖ {0}` for all `i >= 1` implies `X_i + X_j = Z_N ∖ {0}`
//!   for all `i != j`.
//!
//! These shortcuts are only sound for partitions built by
//! [`CyclotomicPartition::build`]; arbitrary partitions go through
//! [`crate::oracle::naive_check`].

use alloc::vec;
use alloc::vec::Vec;

use crate::partition::CyclotomicPartition;
use crate::residue::ResidueSet;

/// Which defining condition a partition violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Condition {
    /// Some `a ∈ X_i` has `-a ∉ X_i`.
    Symmetric,
    /// Some `z ∈ X_i` is also in `X_i + X_i`.
    SumFree,
    /// Some `z` is in neither `X_i` nor `X_i + X_i`.
    CyclicBasis,
    /// `X_i + X_j ≠ Z_N ∖ {0}` for some `i != j`: either a nonzero `z` is
    /// missing, or `z = 0` is present.
    Triangle,
}

impl Condition {
    pub fn as_str(self) -> &'static str {
        match self {
            Condition::Symmetric => "symmetric",
            Condition::SumFree => "sum_free",
            Condition::CyclicBasis => "cyclic_basis",
            Condition::Triangle => "triangle",
        }
    }
}

/// A concrete violation: condition, class indices (one, or two for the
/// triangle condition) and the smallest offending residue.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Witness {
    pub condition: Condition,
    pub classes: Vec<usize>,
    pub residue: u64,
}

impl Witness {
    fn single(condition: Condition, class: usize, residue: u64) -> Self {
        Witness { condition, classes: vec![class], residue }
    }

    fn pair(i: usize, j: usize, residue: u64) -> Self {
        Witness { condition: Condition::Triangle, classes: vec![i, j], residue }
    }

    /// Re-checks the violation by direct enumeration over `classes`.
    pub fn confirm(&self, classes: &[ResidueSet]) -> bool {
        let z = self.residue;
        let sum_contains = |a: &ResidueSet, b: &ResidueSet| {
            let n = a.modulus();
            a.iter().any(|u| b.contains((z + n - u) % n))
        };
        match (self.condition, self.classes.as_slice()) {
            (Condition::Symmetric, &[i]) => {
                let c = &classes[i];
                z < c.modulus() && c.contains(z) && !c.contains((c.modulus() - z) % c.modulus())
            }
            (Condition::SumFree, &[i]) => {
                let c = &classes[i];
                z < c.modulus() && c.contains(z) && sum_contains(c, c)
            }
            (Condition::CyclicBasis, &[i]) => {
                let c = &classes[i];
                z < c.modulus() && !c.contains(z) && !sum_contains(c, c)
            }
            (Condition::Triangle, &[i, j]) if i != j => {
                let (a, b) = (&classes[i], &classes[j]);
                z < a.modulus() && (sum_contains(a, b) == (z == 0))
            }
            _ => false,
        }
    }
}

/// Outcome of a single check: `Ok` passes, `Err` carries the violation.
pub type Verdict = core::result::Result<(), Witness>;

/// Per-condition results for one partition.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CheckReport {
    pub symmetric: bool,
    pub sum_free: bool,
    pub cyclic_basis: bool,
    pub triangle: bool,
    /// First failure in the order symmetric, sum-free, cyclic basis,
    /// triangle; `None` iff `overall`.
    pub witness: Option<Witness>,
    pub overall: bool,
}

impl CheckReport {
    pub(crate) fn from_verdicts(
        symmetric: Verdict,
        sum_free: Verdict,
        cyclic_basis: Verdict,
        triangle: Verdict,
    ) -> Self {
        let flags = [symmetric.is_ok(), sum_free.is_ok(), cyclic_basis.is_ok(), triangle.is_ok()];
        let witness = [symmetric, sum_free, cyclic_basis, triangle].into_iter().find_map(Result::err);
        CheckReport {
            symmetric: flags[0],
            sum_free: flags[1],
            cyclic_basis: flags[2],
            triangle: flags[3],
            overall: witness.is_none(),
            witness,
        }
    }

    /// The condition that failed first, if any.
    pub fn failed_check(&self) -> Option<Condition> {
        self.witness.as_ref().map(|w| w.condition)
    }
}

fn symmetric_class(i: usize, class: &ResidueSet) -> Verdict {
    let n = class.modulus();
    match class.iter().find(|&a| !class.contains((n - a) % n)) {
        Some(a) => Err(Witness::single(Condition::Symmetric, i, a)),
        None => Ok(()),
    }
}

/// Every class closed under negation.
pub fn check_symmetric(p: &CyclotomicPartition) -> Verdict {
    p.classes().iter().enumerate().try_for_each(|(i, c)| symmetric_class(i, c))
}

/// Sum-freeness of class zero via `1 ∉ X_0 + X_0`: passes iff `1 - a ∉ X_0`
/// for every `a ∈ X_0`. `x0` must contain 1.
pub fn check_sum_free_fast(x0: &ResidueSet) -> Verdict {
    let n = x0.modulus();
    if x0.iter().any(|a| x0.contains((1 + n - a) % n)) {
        return Err(Witness::single(Condition::SumFree, 0, 1));
    }
    Ok(())
}

/// `X_0 + X_0 = Z_N ∖ X_0`, checked as `(X_0 + X_0) ∩ X_0 = ∅` and
/// `|X_0 + X_0| = N - k`.
pub fn check_cyclic_basis(x0: &ResidueSet) -> Verdict {
    let sums = x0.sumset(x0).expect("same modulus");
    cyclic_basis_from_sums(x0, &sums)
}

fn cyclic_basis_from_sums(x0: &ResidueSet, sums: &ResidueSet) -> Verdict {
    let clash = sums.intersection(x0).expect("same modulus");
    if let Some(z) = clash.first() {
        return Err(Witness::single(Condition::SumFree, 0, z));
    }
    if sums.len() as u64 != x0.modulus() - x0.len() as u64 {
        return covers_with_sums(x0, sums);
    }
    Ok(())
}

/// `X_0 ∪ (X_0 + X_0) = Z_N`.
fn covers_with_sums(x0: &ResidueSet, sums: &ResidueSet) -> Verdict {
    let covered = sums.union(x0).expect("same modulus");
    match covered.complement().first() {
        Some(z) => Err(Witness::single(Condition::CyclicBasis, 0, z)),
        None => Ok(()),
    }
}

/// Smallest residue where `sums` differs from `Z_N ∖ {0}`.
fn triangle_gap(sums: &ResidueSet) -> Option<u64> {
    if sums.contains(0) {
        return Some(0);
    }
    sums.complement().iter().find(|&z| z != 0)
}

/// `X_0 + X_i = Z_N ∖ {0}` for every `i` in `1..m`, which for cyclotomic
/// classes gives `X_i + X_j = Z_N ∖ {0}` for all `i != j`.
pub fn check_triangle_fast(p: &CyclotomicPartition) -> Verdict {
    let x0 = p.class(0);
    for (i, xi) in p.classes().iter().enumerate().skip(1) {
        if let Some(z) = triangle_gap(&x0.sumset(xi).expect("same modulus")) {
            return Err(Witness::pair(0, i, z));
        }
    }
    Ok(())
}

/// Symmetry, sum-freeness and cyclic-basis property of class zero alone,
/// stopping at the first failure. This is the filter applied to every
/// search candidate before the remaining classes are built.
pub fn screen_class_zero(x0: &ResidueSet) -> Verdict {
    symmetric_class(0, x0)?;
    check_sum_free_fast(x0)?;
    check_cyclic_basis(x0)
}

/// Short-circuiting test of the whole partition; `Ok` iff the classes form
/// a symmetric sum-free cyclic multi-basis satisfying the triangle
/// condition.
pub fn screen(p: &CyclotomicPartition) -> Verdict {
    screen_class_zero(p.class(0))?;
    check_triangle_fast(p)
}

/// Full report on a cyclotomic partition.
///
/// All four conditions are evaluated so that the flags can be compared one
/// by one with [`crate::oracle::naive_check`]; the `cyclic_basis` flag is
/// the covering property `X_0 ∪ (X_0 + X_0) = Z_N` on its own.
pub fn full_fast_check(p: &CyclotomicPartition) -> CheckReport {
    let x0 = p.class(0);
    let symmetric = check_symmetric(p);
    let sum_free = check_sum_free_fast(x0);
    let sums = x0.sumset(x0).expect("same modulus");
    let cyclic_basis = covers_with_sums(x0, &sums);
    let triangle = check_triangle_fast(p);
    CheckReport::from_verdicts(symmetric, sum_free, cyclic_basis, triangle)
}
