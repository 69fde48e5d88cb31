//! Brute-force reference helpers shared by the integration tests. Nothing
//! here calls the fast paths under test.

#![allow(dead_code)]

use ramsey_forge_core::ResidueSet;

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

pub fn primes_up_to(n: u64) -> impl Iterator<Item = u64> {
    (2..=n).filter(|&p| is_prime(p))
}

/// Every `m >= 2` with `N ≡ 1 (mod 2m)` and `2m < N`.
pub fn color_counts(n: u64) -> impl Iterator<Item = usize> {
    (2..).take_while(move |m| 2 * m < n).filter(move |m| (n - 1).is_multiple_of(2 * m)).map(|m| m as usize)
}

/// Multiplicative order of `g` mod prime `n`, by repeated multiplication.
pub fn order(g: u64, n: u64) -> u64 {
    let mut y = g % n;
    let mut k = 1;
    while y != 1 {
        y = y * g % n;
        k += 1;
    }
    k
}

pub fn generators(n: u64) -> impl Iterator<Item = u64> {
    (1..n).filter(move |&g| order(g, n) == n - 1)
}

pub fn smallest_generator(n: u64) -> u64 {
    generators(n).next().unwrap()
}

/// `{g^(jm)}` listed by plain repeated multiplication.
pub fn power_class(n: u64, m: usize, g: u64) -> ResidueSet {
    let step = (0..m).fold(1, |acc, _| acc * g % n);
    let mut s = ResidueSet::empty(n);
    let mut y = 1;
    for _ in 0..(n - 1) / m as u64 {
        s.insert(y).unwrap();
        y = y * step % n;
    }
    s
}

pub fn naive_sumset(a: &ResidueSet, b: &ResidueSet) -> ResidueSet {
    let n = a.modulus();
    let mut s = ResidueSet::empty(n);
    for x in a.iter() {
        for y in b.iter() {
            s.insert((x + y) % n).unwrap();
        }
    }
    s
}

pub fn set(n: u64, xs: impl IntoIterator<Item = u64>) -> ResidueSet {
    ResidueSet::from_residues(n, xs).unwrap()
}
