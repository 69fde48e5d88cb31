//! Dense bit-vector subsets of `Z_N`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::number_theory::{inverse_mod, mul_mod, SetBits};

const WORD: usize = 64;
/// Accumulator words per block in [`ResidueSet::sumset`] (8 KiB).
const BLOCK_WORDS: usize = 1024;

/// A subset of `Z_N`: bit `j` is set iff `j` is a member.
///
/// Bits at positions `>= N` in the last word are always clear.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ResidueSet {
    modulus: u64,
    words: Vec<u64>,
}

impl ResidueSet {
    pub fn empty(modulus: u64) -> Self {
        assert!(modulus >= 1, "modulus must be positive");
        ResidueSet { modulus, words: vec![0; (modulus as usize).div_ceil(WORD)] }
    }

    /// `{1, ..., N-1}`.
    pub fn nonzero(modulus: u64) -> Self {
        let mut s = Self::full(modulus);
        s.words[0] &= !1;
        s
    }

    /// All of `Z_N`.
    pub fn full(modulus: u64) -> Self {
        let mut s = Self::empty(modulus);
        s.words.iter_mut().for_each(|w| *w = !0);
        s.clear_tail();
        s
    }

    /// Builds a set from residues, rejecting any `>= modulus`.
    pub fn from_residues<I: IntoIterator<Item = u64>>(modulus: u64, residues: I) -> Result<Self> {
        let mut s = Self::empty(modulus);
        for r in residues {
            s.insert(r)?;
        }
        Ok(s)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn insert(&mut self, r: u64) -> Result<bool> {
        self.check(r)?;
        let (w, b) = (r as usize / WORD, r as usize % WORD);
        let fresh = self.words[w] >> b & 1 == 0;
        self.words[w] |= 1 << b;
        Ok(fresh)
    }

    /// Membership; errors for `r >= N`.
    pub fn try_contains(&self, r: u64) -> Result<bool> {
        self.check(r)?;
        Ok(self.contains(r))
    }

    /// Membership test.
    ///
    /// # Panics
    /// If `r >= N`.
    #[inline]
    pub fn contains(&self, r: u64) -> bool {
        assert!(r < self.modulus, "residue {r} out of range for modulus {}", self.modulus);
        self.words[r as usize / WORD] >> (r as usize % WORD) & 1 == 1
    }

    fn check(&self, r: u64) -> Result<()> {
        if r >= self.modulus {
            return Err(Error::ResidueOutOfRange { modulus: self.modulus, value: r });
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| SetBits(w).map(move |b| (i * WORD) as u64 + b as u64))
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<u64> {
        self.iter().next()
    }

    fn same_modulus(&self, other: &Self) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch { left: self.modulus, right: other.modulus });
        }
        Ok(())
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.zip_words(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.zip_words(other, |a, b| a & b)
    }

    /// Members of `self` not in `other`.
    pub fn difference(&self, other: &Self) -> Result<Self> {
        self.zip_words(other, |a, b| a & !b)
    }

    /// `Z_N ∖ self`.
    pub fn complement(&self) -> Self {
        let mut s = self.clone();
        s.words.iter_mut().for_each(|w| *w = !*w);
        s.clear_tail();
        s
    }

    pub fn is_disjoint(&self, other: &Self) -> Result<bool> {
        self.same_modulus(other)?;
        Ok(self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0))
    }

    fn zip_words(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Result<Self> {
        self.same_modulus(other)?;
        let words = self.words.iter().zip(&other.words).map(|(&a, &b)| f(a, b)).collect();
        Ok(ResidueSet { modulus: self.modulus, words })
    }

    fn clear_tail(&mut self) {
        let rem = self.modulus as usize % WORD;
        if rem != 0 {
            *self.words.last_mut().unwrap() &= (1u64 << rem) - 1;
        }
    }

    /// `{N - a : a ∈ self}`, i.e. `-self`.
    pub fn negate(&self) -> Self {
        let mut out = Self::empty(self.modulus);
        for a in self.iter() {
            let r = (self.modulus - a) % self.modulus;
            out.words[r as usize / WORD] |= 1 << (r as usize % WORD);
        }
        out
    }

    /// `{c·a mod N : a ∈ self}` for a unit `c`.
    pub fn scale(&self, c: u64) -> Result<Self> {
        let n = self.modulus;
        if c.is_multiple_of(n) || inverse_mod(c, n).is_none() {
            return Err(Error::NotAUnit { modulus: n, c });
        }
        let c = c % n;
        let mut out = Self::empty(n);
        for a in self.iter() {
            let r = mul_mod(a, c, n) as usize;
            out.words[r / WORD] |= 1 << (r % WORD);
        }
        Ok(out)
    }

    /// Sumset `{a + b mod N : a ∈ self, b ∈ other}`.
    ///
    /// Computed as the union over `a` of `other` rotated by `a`. `other` is
    /// laid out twice back to back (2N bits) so that every rotation is a
    /// plain funnel-shifted read of N consecutive bits, with no wraparound
    /// inside the inner loop. The accumulator is swept in L1-sized blocks,
    /// applying every rotation to one block before moving to the next.
    pub fn sumset(&self, other: &Self) -> Result<Self> {
        self.same_modulus(other)?;
        let (outer, inner) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        let n = self.modulus as usize;
        let mut acc = Self::empty(self.modulus);
        if outer.is_empty() || inner.is_empty() {
            return Ok(acc);
        }
        let doubled = inner.doubled();
        // result bit j = inner[(j - a) mod N] = doubled[j + (N - a)]
        let offsets: Vec<usize> = outer.iter().map(|a| n - a as usize).collect();
        for (b, block) in acc.words.chunks_mut(BLOCK_WORDS).enumerate() {
            let start = b * BLOCK_WORDS * WORD;
            for &s in &offsets {
                or_shifted(block, &doubled, start + s);
            }
        }
        acc.clear_tail();
        Ok(acc)
    }

    /// `self` followed by a copy of itself, as 2N bits plus a spare word.
    fn doubled(&self) -> Vec<u64> {
        let n = self.modulus as usize;
        let mut d = vec![0u64; (2 * n).div_ceil(WORD) + 1];
        d[..self.words.len()].copy_from_slice(&self.words);
        let (q, r) = (n / WORD, n % WORD);
        for (i, &w) in self.words.iter().enumerate() {
            d[q + i] |= w << r;
            if r != 0 {
                d[q + i + 1] |= w >> (WORD - r);
            }
        }
        d
    }
}

/// `acc[w] |= bits [64w + s, 64w + s + 64)` of `src`, for every word `w`.
#[inline]
fn or_shifted(acc: &mut [u64], src: &[u64], s: usize) {
    let (q, r) = (s / WORD, s % WORD);
    let len = acc.len();
    let lo = &src[q..q + len];
    if r == 0 {
        for (a, &x) in acc.iter_mut().zip(lo) {
            *a |= x;
        }
    } else {
        let hi = &src[q + 1..q + 1 + len];
        for ((a, &x), &y) in acc.iter_mut().zip(lo).zip(hi) {
            *a |= (x >> r) | (y << (WORD - r));
        }
    }
}

impl fmt::Debug for ResidueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ResidueSet(mod {}) ", self.modulus)?;
        f.debug_set().entries(self.iter()).finish()
    }
}
