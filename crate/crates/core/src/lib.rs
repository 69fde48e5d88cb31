//! Search and verification primitives for cyclic Ramsey algebras built from
//! cyclotomic classes of prime moduli.
//!
//! Given a number of colors `m` and a prime `N ≡ 1 (mod 2m)`, the nonzero
//! residues mod `N` split into `m` classes: the `m`-th power residues `X_0`
//! and its cosets `X_i = x^i · X_0` for a generator `x` of `Z_N^×`. This crate
//! builds those partitions, checks whether each class is a symmetric
//! sum-free cyclic basis and whether every pair of classes sums to all of
//! `Z_N ∖ {0}`, and searches for the smallest modulus that works.
//!
//! The crate is `no_std` and only needs `alloc`. IO, the bundled table of
//! known moduli, parallel drivers and the command line live in the
//! `ramsey-forge` crate.

#![cfg_attr(not(test), no_std)]
#![deny(rustdoc::broken_intra_doc_links)]

extern crate alloc;

pub mod checker;
pub mod coloring;
mod error;
pub mod number_theory;
pub mod oracle;
pub mod partition;
pub mod residue;
pub mod search;

pub use checker::{CheckReport, Condition, Witness};
pub use error::{Error, Result};
pub use number_theory::{FactorSet, PrimeSieve};
pub use oracle::LabeledPartition;
pub use partition::CyclotomicPartition;
pub use residue::ResidueSet;
