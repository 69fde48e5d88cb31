//! Parallel search, nonexistence sweeps, verification of the bundled table
//! of smallest moduli, coloring export and the `ramsey-forge` command line,
//! on top of [`ramsey_forge_core`].

pub mod catalog;
pub mod cli;
pub mod driver;
pub mod export;
pub mod progress;
pub mod records;
