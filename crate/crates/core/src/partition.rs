//! Cyclotomic classes of a prime modulus.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::number_theory::{mul_mod, pow_mod};
use crate::residue::ResidueSet;

/// `{x^(jm) mod N : 0 <= j < k}` with `k = (N - 1) / m`: the subgroup of
/// `m`-th powers, built by repeated multiplication by `x^m`.
///
/// Fails if `m` does not divide `N - 1`, or if the powers repeat before `k`
/// distinct elements appear (then `x` is not a generator).
pub fn build_class_zero(n: u64, m: usize, x: u64) -> Result<ResidueSet> {
    if n < 2 {
        return Err(Error::OutOfRange { what: "modulus", value: n });
    }
    if m == 0 || !(n - 1).is_multiple_of(m as u64) {
        return Err(Error::ClassCountDoesNotDivide { modulus: n, m });
    }
    if x == 0 || x >= n {
        return Err(Error::NotAGenerator { modulus: n, x });
    }
    let k = (n - 1) / m as u64;
    let step = pow_mod(x, m as u64, n);
    let mut class = ResidueSet::empty(n);
    let mut y = 1;
    for _ in 0..k {
        if !class.insert(y)? {
            return Err(Error::NotAGenerator { modulus: n, x });
        }
        y = mul_mod(y, step, n);
    }
    Ok(class)
}

/// The partition of `Z_N ∖ {0}` into `X_0, x·X_0, ..., x^(m-1)·X_0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicPartition {
    modulus: u64,
    generator: u64,
    classes: Vec<ResidueSet>,
}

impl CyclotomicPartition {
    /// Builds all `m` classes; requires `N ≡ 1 (mod 2m)` so that every class
    /// has even size and contains `-1·X_i = X_i`.
    pub fn build(n: u64, m: usize, x: u64) -> Result<Self> {
        if m == 0 || !(n - 1).is_multiple_of(2 * m as u64) {
            return Err(Error::OddClassSize { modulus: n, m });
        }
        let first = build_class_zero(n, m, x)?;
        // x^m can have order k without x generating; the cosets x^i·X_0 are
        // then not distinct.
        let mut y = 1;
        for _ in 1..m {
            y = mul_mod(y, x, n);
            if first.contains(y) {
                return Err(Error::NotAGenerator { modulus: n, x });
            }
        }
        let mut classes = Vec::with_capacity(m);
        classes.push(first);
        for i in 1..m {
            let next = classes[i - 1].scale(x)?;
            classes.push(next);
        }
        Ok(CyclotomicPartition { modulus: n, generator: x, classes })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Number of classes `m`.
    pub fn colors(&self) -> usize {
        self.classes.len()
    }

    /// Class size `k = (N - 1) / m`.
    pub fn class_size(&self) -> usize {
        ((self.modulus - 1) / self.classes.len() as u64) as usize
    }

    pub fn generator(&self) -> u64 {
        self.generator
    }

    pub fn classes(&self) -> &[ResidueSet] {
        &self.classes
    }

    pub fn class(&self, i: usize) -> &ResidueSet {
        &self.classes[i]
    }

    /// Index of the class containing the nonzero residue `r`.
    pub fn class_of(&self, r: u64) -> Option<usize> {
        if r == 0 || r >= self.modulus {
            return None;
        }
        self.classes.iter().position(|c| c.contains(r))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: u64, xs: &[u64]) -> ResidueSet {
        ResidueSet::from_residues(n, xs.iter().copied()).unwrap()
    }

    #[test]
    fn class_zero_examples() {
        assert_eq!(build_class_zero(5, 2, 2).unwrap(), set(5, &[1, 4]));
        assert_eq!(build_class_zero(13, 3, 2).unwrap(), set(13, &[1, 5, 8, 12]));
        assert_eq!(build_class_zero(13, 1, 2).unwrap(), ResidueSet::nonzero(13));
    }

    #[test]
    fn class_zero_errors() {
        assert_eq!(build_class_zero(13, 5, 2), Err(Error::ClassCountDoesNotDivide { modulus: 13, m: 5 }));
        // 3 has order 3 mod 13
        assert_eq!(build_class_zero(13, 1, 3), Err(Error::NotAGenerator { modulus: 13, x: 3 }));
        assert!(build_class_zero(13, 0, 2).is_err());
    }

    #[test]
    fn partition_examples() {
        let p = CyclotomicPartition::build(13, 3, 2).unwrap();
        assert_eq!(p.class(0), &set(13, &[1, 5, 8, 12]));
        assert_eq!(p.class(1), &set(13, &[2, 3, 10, 11]));
        assert_eq!(p.class(2), &set(13, &[4, 6, 7, 9]));
        assert_eq!(p.class_size(), 4);
        assert_eq!(p.class_of(7), Some(2));
        assert_eq!(p.class_of(0), None);

        let p = CyclotomicPartition::build(5, 2, 2).unwrap();
        assert_eq!(p.class(1), &set(5, &[2, 3]));
    }

    #[test]
    fn partition_of_41() {
        let p = CyclotomicPartition::build(41, 4, 6).unwrap();
        let mut seen = ResidueSet::empty(41);
        for c in p.classes() {
            assert_eq!(c.len(), 10);
            assert!(c.is_disjoint(&seen).unwrap());
            seen = seen.union(c).unwrap();
        }
        assert_eq!(seen, ResidueSet::nonzero(41));
    }

    #[test]
    fn partition_rejects_odd_class_size() {
        assert_eq!(CyclotomicPartition::build(13, 4, 2), Err(Error::OddClassSize { modulus: 13, m: 4 }));
        assert!(CyclotomicPartition::build(11, 2, 2).is_err());
        assert!(CyclotomicPartition::build(7, 3, 3).is_ok());
    }

    #[test]
    fn non_generator_with_full_class_zero() {
        // 5 has order 4 mod 13, and so does 5^3 = 8
        assert_eq!(build_class_zero(13, 3, 5).unwrap(), set(13, &[1, 5, 8, 12]));
        assert_eq!(CyclotomicPartition::build(13, 3, 5), Err(Error::NotAGenerator { modulus: 13, x: 5 }));
    }
}
