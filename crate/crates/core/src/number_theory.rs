//! Primes, factorization of `N - 1`, modular powers and primitive roots.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Sieve bound used when none is given.
pub const DEFAULT_SIEVE_BOUND: u64 = 2_000_000;

/// Exact primality table for `0..=bound`, one bit per integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeSieve {
    bound: u64,
    bits: Vec<u64>,
}

impl PrimeSieve {
    /// Sieve of Eratosthenes up to and including `bound`.
    pub fn new(bound: u64) -> Result<Self> {
        if bound < 2 {
            return Err(Error::SieveBoundTooSmall(bound));
        }
        let len = bound as usize + 1;
        let mut bits = vec![!0u64; len.div_ceil(64)];
        if !len.is_multiple_of(64) {
            *bits.last_mut().unwrap() = (1u64 << (len % 64)) - 1;
        }
        bits[0] &= !0b11;
        let mut p = 2usize;
        while p * p < len {
            if bits[p / 64] >> (p % 64) & 1 == 1 {
                let mut q = p * p;
                while q < len {
                    bits[q / 64] &= !(1u64 << (q % 64));
                    q += p;
                }
            }
            p += 1;
        }
        Ok(PrimeSieve { bound, bits })
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    /// Primality of `n`; `false` for anything above the bound.
    pub fn is_prime(&self, n: u64) -> bool {
        if n > self.bound {
            return false;
        }
        let n = n as usize;
        self.bits[n / 64] >> (n % 64) & 1 == 1
    }

    /// Ascending primes in `lo..=hi`, clipped to the bound.
    pub fn primes_in(&self, lo: u64, hi: u64) -> impl Iterator<Item = u64> + '_ {
        let hi = hi.min(self.bound);
        let first_word = (lo / 64) as usize;
        let last_word = if lo > hi { 0 } else { (hi / 64) as usize + 1 };
        self.bits
            .get(first_word..last_word.max(first_word))
            .unwrap_or(&[])
            .iter()
            .enumerate()
            .flat_map(move |(i, &w)| {
                let base = ((first_word + i) * 64) as u64;
                SetBits(w).map(move |b| base + b as u64)
            })
            .filter(move |&n| n >= lo && n <= hi)
    }

    /// All primes up to the bound.
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.primes_in(0, self.bound)
    }

    pub fn largest_prime(&self) -> u64 {
        let (i, w) =
            self.bits.iter().enumerate().rev().find(|(_, w)| **w != 0).expect("a sieve with bound >= 2 contains 2");
        (i * 64 + 63 - w.leading_zeros() as usize) as u64
    }
}

/// Iterator over set bit positions of a word, lowest first.
pub(crate) struct SetBits(pub(crate) u64);

impl Iterator for SetBits {
    type Item = u32;

    #[inline]
    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(b)
    }
}

/// Distinct prime divisors of `n`, ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorSet {
    n: u64,
    primes: Vec<u64>,
}

impl FactorSet {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }
}

/// Distinct prime divisors of `n` by trial division against the sieve.
///
/// Succeeds whenever the sieve reaches `√n`; whatever survives division by
/// every prime up to `√n` is itself prime.
pub fn prime_factors(n: u64, sieve: &PrimeSieve) -> Result<FactorSet> {
    if n < 2 {
        return Err(Error::OutOfRange { what: "integer to factor", value: n });
    }
    if (sieve.bound() as u128 + 1) * (sieve.bound() as u128 + 1) <= n as u128 {
        return Err(Error::SieveTooSmall { n, bound: sieve.bound() });
    }
    let mut rest = n;
    let mut primes = Vec::new();
    for p in sieve.primes() {
        if p * p > rest {
            break;
        }
        if rest.is_multiple_of(p) {
            primes.push(p);
            while rest.is_multiple_of(p) {
                rest /= p;
            }
        }
    }
    if rest > 1 {
        primes.push(rest);
    }
    Ok(FactorSet { n, primes })
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    if n <= 1 << 32 {
        a * b % n
    } else {
        ((a as u128 * b as u128) % n as u128) as u64
    }
}

/// `base^exp mod n` without argument checks; `base < n`, `n >= 2`.
#[inline]
pub(crate) fn pow_mod(mut base: u64, mut exp: u64, n: u64) -> u64 {
    let mut acc = 1 % n;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, n);
        }
        base = mul_mod(base, base, n);
        exp >>= 1;
    }
    acc
}

/// `base^exp mod n` by square-and-multiply.
pub fn mod_pow(base: u64, exp: u64, n: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::OutOfRange { what: "modulus", value: n });
    }
    if base >= n {
        return Err(Error::ResidueOutOfRange { modulus: n, value: base });
    }
    Ok(pow_mod(base, exp, n))
}

/// Least `x >= 2` whose order mod the prime `n` is `n - 1`.
///
/// `factors` must be the distinct prime divisors of `n - 1`; `x` is a
/// generator iff `x^((n-1)/p) != 1` for each of them.
pub fn smallest_generator(n: u64, factors: &FactorSet) -> Result<u64> {
    if n < 3 {
        return Err(Error::OutOfRange { what: "prime modulus", value: n });
    }
    if factors.n() != n - 1 {
        return Err(Error::OutOfRange { what: "factored value (expected N - 1)", value: factors.n() });
    }
    (2..n)
        .find(|&x| factors.primes().iter().all(|&p| pow_mod(x, (n - 1) / p, n) != 1))
        .ok_or(Error::OutOfRange { what: "prime modulus", value: n })
}

/// Modular inverse of a unit `c` mod `n`.
pub(crate) fn inverse_mod(c: u64, n: u64) -> Option<u64> {
    let (mut r0, mut r1) = (n as i128, (c % n) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    (r0 == 1).then(|| t0.rem_euclid(n as i128) as u64)
}
