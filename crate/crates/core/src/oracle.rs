//! Definition-level verification that assumes nothing about how a partition
//! was built.
//!
//! Sums are enumerated pair by pair and the relation-algebra check composes
//! explicit `N × N` relations. Nothing here relies on generator structure,
//! so these routines serve as ground truth for [`crate::checker`].

use alloc::vec;
use alloc::vec::Vec;

use crate::checker::{CheckReport, Condition, Verdict, Witness};
use crate::error::{Error, Result};
use crate::number_theory::{prime_factors, smallest_generator, PrimeSieve};
use crate::partition::CyclotomicPartition;
use crate::residue::ResidueSet;

/// Largest modulus accepted by [`relation_algebra_check`] by default.
pub const RELATION_ALGEBRA_CAP: u64 = 200;

/// Largest `N_max` accepted by [`exhaustive_small_scan`].
pub const SCAN_LIMIT: u64 = 2000;

/// Any partition of `Z_N ∖ {0}` into labeled classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledPartition {
    modulus: u64,
    classes: Vec<ResidueSet>,
}

impl LabeledPartition {
    /// Validates that the classes are pairwise disjoint and cover exactly
    /// the nonzero residues.
    pub fn new(modulus: u64, classes: Vec<ResidueSet>) -> Result<Self> {
        let mut seen = ResidueSet::empty(modulus);
        for c in &classes {
            if c.modulus() != modulus {
                return Err(Error::ModulusMismatch { left: modulus, right: c.modulus() });
            }
            if let Some(r) = seen.intersection(c)?.first() {
                return Err(Error::NotAPartition { modulus, residue: r });
            }
            seen = seen.union(c)?;
        }
        let expected = ResidueSet::nonzero(modulus);
        if let Some(r) = seen.difference(&expected)?.first().or(expected.difference(&seen)?.first()) {
            return Err(Error::NotAPartition { modulus, residue: r });
        }
        Ok(LabeledPartition { modulus, classes })
    }

    /// Convenience constructor from residue lists.
    pub fn from_lists(modulus: u64, lists: &[&[u64]]) -> Result<Self> {
        let classes =
            lists.iter().map(|l| ResidueSet::from_residues(modulus, l.iter().copied())).collect::<Result<Vec<_>>>()?;
        Self::new(modulus, classes)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn colors(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[ResidueSet] {
        &self.classes
    }
}

impl From<&CyclotomicPartition> for LabeledPartition {
    fn from(p: &CyclotomicPartition) -> Self {
        LabeledPartition { modulus: p.modulus(), classes: p.classes().to_vec() }
    }
}

/// `{a + b : a ∈ A, b ∈ B}` by a double loop, as a membership table.
fn pair_sums(n: u64, a: &[u64], b: &[u64]) -> Vec<bool> {
    let mut hit = vec![false; n as usize];
    for &u in a {
        for &v in b {
            hit[((u + v) % n) as usize] = true;
        }
    }
    hit
}

/// Checks every condition literally on every class and every pair:
/// symmetry, `(X_i + X_i) ∩ X_i = ∅`, `(X_i + X_i) ∪ X_i = Z_N`, and
/// `X_i + X_j = Z_N ∖ {0}` for `i != j`.
pub fn naive_check(p: &LabeledPartition) -> CheckReport {
    let n = p.modulus;
    let lists: Vec<Vec<u64>> = p.classes.iter().map(|c| c.iter().collect()).collect();
    let member = |i: usize, z: u64| p.classes[i].contains(z);

    let mut symmetric: Verdict = Ok(());
    let mut sum_free: Verdict = Ok(());
    let mut cyclic_basis: Verdict = Ok(());
    for (i, list) in lists.iter().enumerate() {
        if symmetric.is_ok() {
            if let Some(&a) = list.iter().find(|&&a| !member(i, (n - a) % n)) {
                symmetric = Err(Witness { condition: Condition::Symmetric, classes: vec![i], residue: a });
            }
        }
        let sums = pair_sums(n, list, list);
        if sum_free.is_ok() {
            if let Some(z) = (0..n).find(|&z| sums[z as usize] && member(i, z)) {
                sum_free = Err(Witness { condition: Condition::SumFree, classes: vec![i], residue: z });
            }
        }
        if cyclic_basis.is_ok() {
            if let Some(z) = (0..n).find(|&z| !sums[z as usize] && !member(i, z)) {
                cyclic_basis = Err(Witness { condition: Condition::CyclicBasis, classes: vec![i], residue: z });
            }
        }
    }

    // X_i + X_j = X_j + X_i, so unordered pairs suffice
    let mut triangle: Verdict = Ok(());
    'pairs: for i in 0..lists.len() {
        for j in i + 1..lists.len() {
            let sums = pair_sums(n, &lists[i], &lists[j]);
            let gap = if sums[0] { Some(0) } else { (1..n).find(|&z| !sums[z as usize]) };
            if let Some(z) = gap {
                triangle = Err(Witness { condition: Condition::Triangle, classes: vec![i, j], residue: z });
                break 'pairs;
            }
        }
    }
    CheckReport::from_verdicts(symmetric, sum_free, cyclic_basis, triangle)
}

/// A binary relation on `Z_N`, stored as one row bit-set per element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    rows: Vec<ResidueSet>,
}

impl Relation {
    pub fn empty(n: u64) -> Self {
        Relation { rows: vec![ResidueSet::empty(n); n as usize] }
    }

    pub fn identity(n: u64) -> Self {
        let mut r = Self::empty(n);
        for u in 0..n {
            r.rows[u as usize].insert(u).expect("in range");
        }
        r
    }

    /// `{(u, v) : u - v ∈ class}`.
    pub fn difference_relation(class: &ResidueSet) -> Self {
        let n = class.modulus();
        let mut r = Self::empty(n);
        for u in 0..n {
            for d in class.iter() {
                r.rows[u as usize].insert((u + n - d) % n).expect("in range");
            }
        }
        r
    }

    /// `N`, the size of the underlying set.
    pub fn universe(&self) -> u64 {
        self.rows.len() as u64
    }

    /// Number of pairs in the relation.
    pub fn pair_count(&self) -> u64 {
        self.rows.iter().map(|r| r.len() as u64).sum()
    }

    pub fn contains(&self, u: u64, v: u64) -> bool {
        self.rows[u as usize].contains(v)
    }

    /// `{(v, u) : (u, v) ∈ self}`.
    pub fn converse(&self) -> Self {
        let n = self.universe();
        let mut r = Self::empty(n);
        for u in 0..n {
            for v in self.rows[u as usize].iter() {
                r.rows[v as usize].insert(u).expect("in range");
            }
        }
        r
    }

    /// `{(u, w) : ∃v. (u, v) ∈ self ∧ (v, w) ∈ other}`; row `u` is the union
    /// of `other`'s rows indexed by row `u` of `self`.
    pub fn compose(&self, other: &Self) -> Self {
        let n = self.universe();
        let rows = self
            .rows
            .iter()
            .map(|row| {
                row.iter().fold(ResidueSet::empty(n), |acc, v| acc.union(&other.rows[v as usize]).expect("same size"))
            })
            .collect();
        Relation { rows }
    }

    pub fn union(&self, other: &Self) -> Self {
        let rows = self.rows.iter().zip(&other.rows).map(|(a, b)| a.union(b).expect("same size")).collect();
        Relation { rows }
    }

    /// Complement within `Z_N × Z_N`.
    pub fn complement(&self) -> Self {
        Relation { rows: self.rows.iter().map(ResidueSet::complement).collect() }
    }
}

/// The atoms `A_i = {(u, v) : u - v ∈ X_i}` of the partition.
pub fn atoms(p: &LabeledPartition) -> Vec<Relation> {
    p.classes.iter().map(Relation::difference_relation).collect()
}

/// Ramsey-algebra axioms on explicit relations: every atom is its own
/// converse, `A_i ∘ A_i = Id ∪ ⋃_{j≠i} A_j`, and `A_i ∘ A_j = Id^c` for
/// `i != j`. Rejects `N` above `cap`.
pub fn relation_algebra_check(p: &LabeledPartition, cap: u64) -> Result<bool> {
    let n = p.modulus;
    if n > cap {
        return Err(Error::AboveCap { modulus: n, cap });
    }
    let atoms = atoms(p);
    let id = Relation::identity(n);
    let diversity = id.complement();
    for (i, a) in atoms.iter().enumerate() {
        if a.converse() != *a {
            return Ok(false);
        }
        for (j, b) in atoms.iter().enumerate() {
            let expected = if i == j {
                atoms.iter().enumerate().filter(|&(l, _)| l != i).fold(id.clone(), |acc, (_, c)| acc.union(c))
            } else {
                diversity.clone()
            };
            if a.compose(b) != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// One single-generator partition checked both ways.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanEntry {
    pub modulus: u64,
    pub colors: usize,
    pub generator: u64,
    pub naive: CheckReport,
    pub fast: CheckReport,
}

impl ScanEntry {
    /// Both reports agree flag for flag and on the witness.
    pub fn agrees(&self) -> bool {
        self.naive == self.fast
    }
}

/// Every prime `N <= n_max` and every `m >= 2` with `N ≡ 1 (mod 2m)`,
/// checked by both [`naive_check`] and [`crate::checker::full_fast_check`].
/// Sorted by `(N, m)`.
pub fn exhaustive_small_scan(n_max: u64) -> Result<Vec<ScanEntry>> {
    if n_max > SCAN_LIMIT {
        return Err(Error::OutOfRange { what: "scan limit", value: n_max });
    }
    let mut out = Vec::new();
    if n_max < 5 {
        return Ok(out);
    }
    let sieve = PrimeSieve::new(n_max)?;
    for n in sieve.primes_in(5, n_max) {
        let x = smallest_generator(n, &prime_factors(n - 1, &sieve)?)?;
        for m in (2..).take_while(|&m| 2 * m < n).filter(|&m| (n - 1) % (2 * m) == 0) {
            let p = CyclotomicPartition::build(n, m as usize, x)?;
            out.push(ScanEntry {
                modulus: n,
                colors: m as usize,
                generator: x,
                naive: naive_check(&LabeledPartition::from(&p)),
                fast: crate::checker::full_fast_check(&p),
            });
        }
    }
    Ok(out)
}
