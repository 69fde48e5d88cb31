//! Command-line front end.
//!
//! Results go to stdout or `--out`; progress and diagnostics go to stderr.
//! Exit status: 0 on success, 1 when a verification or oracle cross-check
//! fails, 2 on usage errors, 3 on runtime errors such as a bound past the
//! sieve memory budget.

use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use ramsey_forge_core::number_theory::DEFAULT_SIEVE_BOUND;
use ramsey_forge_core::oracle::{exhaustive_small_scan, SCAN_LIMIT};
use ramsey_forge_core::search::{default_sweep_bound, ramsey_recursive_bound, Status};
use ramsey_forge_core::CyclotomicPartition;

use crate::catalog::load_catalog;
use crate::driver::{oracle_confirms, sieve_for, Driver};
use crate::export::{export_coloring, ExportFormat};
use crate::progress::Progress;
use crate::records::{
    read_search_records, write_failure_log, write_scan_rows, write_search_records, write_verifications, Format,
    ScanRow, SearchRecord,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RUNTIME: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "ramsey-forge", version, about = "Find and verify cyclic Ramsey algebras from cyclotomic classes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Suppress progress output on stderr.
    #[arg(long, global = true)]
    pub quiet: bool,

    /// Seconds between progress lines; 0 disables them.
    #[arg(long, global = true, default_value_t = 5, value_name = "SECS")]
    pub progress_interval: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Smallest modulus for each number of colors in a range.
    Search(SearchArgs),
    /// Screen every candidate up to a bound without stopping at the first pass.
    Sweep(SweepArgs),
    /// Rebuild and check rows of the bundled table.
    Verify(VerifyArgs),
    /// Recursive upper bound on the multicolor triangle Ramsey number.
    Bound(BoundArgs),
    /// Write the edge coloring of K_N for one partition.
    Export(ExportArgs),
    /// Compare the fast checker with the definition-level checker on every small partition.
    Scan(ScanArgs),
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Output format.
    #[arg(long, default_value = "csv", value_parser = parse_format)]
    pub format: Format,
    /// Write results here instead of stdout.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// Colors: `a..b` (inclusive) or a single value.
    #[arg(long, value_parser = parse_range)]
    pub m: RangeInclusive<usize>,
    /// Largest modulus to try.
    #[arg(long, default_value_t = DEFAULT_SIEVE_BOUND)]
    pub bound: u64,
    /// Worker threads; 0 uses all available cores.
    #[arg(long, env = "RAMSEY_FORGE_WORKERS", default_value_t = 0)]
    pub workers: usize,
    /// Cross-check found partitions with the definition-level checker.
    #[arg(long)]
    pub oracle: bool,
    /// Keep records already in `--out` for the same bound and search only the rest.
    #[arg(long, requires = "out")]
    pub resume: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub m: usize,
    /// Defaults to 109602 for 8 colors, 190997 for 13 and 2000000 otherwise.
    #[arg(long)]
    pub bound: Option<u64>,
    #[arg(long, env = "RAMSEY_FORGE_WORKERS", default_value_t = 0)]
    pub workers: usize,
    /// Write one JSON line per candidate (N, x, failed_check, witness) here.
    #[arg(long, value_name = "PATH")]
    pub log: Option<PathBuf>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("rows").required(true).args(["all", "m"])))]
pub struct VerifyArgs {
    /// Every row of the table.
    #[arg(long)]
    pub all: bool,
    /// Rows whose color count is in `a..b`.
    #[arg(long, value_parser = parse_range)]
    pub m: Option<RangeInclusive<usize>>,
    /// Also replay every smaller candidate and require it to fail.
    #[arg(long)]
    pub minimality: bool,
    #[arg(long, env = "RAMSEY_FORGE_WORKERS", default_value_t = 0)]
    pub workers: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    #[arg(long)]
    pub colors: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    #[arg(long)]
    pub m: usize,
    #[arg(long = "N", value_name = "N")]
    pub n: u64,
    #[arg(long)]
    pub x: u64,
    #[arg(long, value_parser = parse_export_format)]
    pub format: ExportFormat,
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    /// Largest prime modulus to scan (at most 2000).
    #[arg(long)]
    pub nmax: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

/// Parses `a..b` (inclusive) or a single integer.
pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("`{t}`: {e}"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => (num(s)?, num(s)?),
    };
    if lo < 2 || lo > hi {
        return Err(format!("range `{s}` must satisfy 2 <= a <= b"));
    }
    Ok(lo..=hi)
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse()
}

fn parse_export_format(s: &str) -> Result<ExportFormat, String> {
    s.parse()
}

fn sink(out: Option<&Path>) -> anyhow::Result<Box<dyn Write>> {
    Ok(match out {
        Some(p) => Box::new(BufWriter::new(File::create(p).with_context(|| format!("cannot create {}", p.display()))?)),
        None => Box::new(BufWriter::new(std::io::stdout().lock())),
    })
}

/// Parses arguments and runs; returns the process exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            EXIT_RUNTIME
        }
    }
}

pub fn run(cli: Cli) -> anyhow::Result<i32> {
    let progress = || Progress::new(Duration::from_secs(cli.progress_interval), cli.quiet);
    match cli.command {
        Command::Search(a) => search(a, progress()),
        Command::Sweep(a) => sweep(a, progress()),
        Command::Verify(a) => verify(a, progress()),
        Command::Bound(a) => bound(a),
        Command::Export(a) => export(a),
        Command::Scan(a) => scan(a),
    }
}

fn search(a: SearchArgs, progress: Progress) -> anyhow::Result<i32> {
    let mut kept = Vec::new();
    if a.resume {
        let path = a.output.out.as_deref().expect("clap enforces --out with --resume");
        if path.exists() {
            let file = BufReader::new(File::open(path).with_context(|| format!("cannot read {}", path.display()))?);
            kept = read_search_records(file, a.output.format)
                .with_context(|| format!("cannot resume from {}", path.display()))?
                .into_iter()
                .filter(|r| a.m.contains(&r.m) && r.bound_used == a.bound)
                .collect();
        }
    }
    let sieve = sieve_for(a.bound)?;
    let driver = Driver::new(a.workers, progress)?;
    let todo: Vec<usize> = a.m.clone().filter(|m| !kept.iter().any(|r| r.m == *m)).collect();
    let fresh = driver.search_all(todo, &sieve)?;
    let mut code = EXIT_OK;
    for r in &fresh {
        if r.status == Status::Exhausted {
            eprintln!("note: no modulus up to {} works for m={}; a larger --bound may find one", a.bound, r.m);
        }
        if a.oracle && oracle_confirms(r)? == Some(false) {
            eprintln!("oracle disagreement: m={} N={:?}", r.m, r.n);
            code = EXIT_CHECK_FAILED;
        }
    }
    let mut records = kept;
    records.extend(fresh);
    records.sort_by_key(|r| r.m);
    write_search_records(sink(a.output.out.as_deref())?, a.output.format, &records)?;
    Ok(code)
}

fn sweep(a: SweepArgs, progress: Progress) -> anyhow::Result<i32> {
    if a.m < 2 {
        bail!("--m must be at least 2");
    }
    let bound = a.bound.unwrap_or_else(|| default_sweep_bound(a.m, DEFAULT_SIEVE_BOUND));
    let sieve = sieve_for(bound)?;
    let driver = Driver::new(a.workers, progress)?;
    let start = Instant::now();
    let sweep = driver.sweep(a.m, &sieve)?;
    let record = SearchRecord::new(&sweep.outcome, start.elapsed().as_millis() as u64);
    if let Some(path) = &a.log {
        let file = File::create(path).with_context(|| format!("cannot create {}", path.display()))?;
        write_failure_log(BufWriter::new(file), &sweep.log)?;
    }
    let passing = sweep.passing().count();
    if passing > 0 {
        eprintln!("m={}: {passing} of {} candidates up to {bound} pass", a.m, sweep.log.len());
    }
    write_search_records(sink(a.output.out.as_deref())?, a.output.format, &[record])?;
    Ok(EXIT_OK)
}

fn verify(a: VerifyArgs, progress: Progress) -> anyhow::Result<i32> {
    let rows: Vec<_> =
        load_catalog()?.into_iter().filter(|r| a.all || a.m.as_ref().is_some_and(|m| m.contains(&r.m))).collect();
    if rows.is_empty() {
        bail!("no table rows in the requested range");
    }
    let sieve = sieve_for(rows.iter().map(|r| r.n).max().unwrap_or(2).max(DEFAULT_SIEVE_BOUND))?;
    let driver = Driver::new(a.workers, progress)?;
    let results = driver.verify(&rows, a.minimality, &sieve);
    write_verifications(sink(a.output.out.as_deref())?, a.output.format, &results)?;
    let failed: Vec<_> = results.iter().filter(|v| !v.passed()).collect();
    for v in &failed {
        eprintln!("row m={} N={} x={} failed", v.row.m, v.row.n, v.row.x);
    }
    eprintln!("{} of {} rows passed", results.len() - failed.len(), results.len());
    Ok(if failed.is_empty() { EXIT_OK } else { EXIT_CHECK_FAILED })
}

#[derive(Serialize)]
struct BoundRow {
    colors: usize,
    bound: u64,
}

fn bound(a: BoundArgs) -> anyhow::Result<i32> {
    let row = BoundRow { colors: a.colors, bound: ramsey_recursive_bound(a.colors)? };
    let mut out = sink(a.output.out.as_deref())?;
    match a.output.format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.serialize(&row)?;
            w.flush()?;
        }
        Format::Json => {
            serde_json::to_writer(&mut out, &row)?;
            writeln!(out)?;
            out.flush()?;
        }
    }
    Ok(EXIT_OK)
}

fn export(a: ExportArgs) -> anyhow::Result<i32> {
    let p = CyclotomicPartition::build(a.n, a.m, a.x)
        .with_context(|| format!("cannot build the partition for m={} N={} x={}", a.m, a.n, a.x))?;
    export_coloring(&p, a.format, sink(a.out.as_deref())?)?;
    Ok(EXIT_OK)
}

fn scan(a: ScanArgs) -> anyhow::Result<i32> {
    if a.nmax > SCAN_LIMIT {
        bail!("--nmax {} is above the scan limit {SCAN_LIMIT}", a.nmax);
    }
    let rows: Vec<ScanRow> = exhaustive_small_scan(a.nmax)?
        .into_iter()
        .map(|e| ScanRow {
            m: e.colors,
            n: e.modulus,
            x: e.generator,
            agrees: e.agrees(),
            fast: e.fast,
            naive: e.naive,
        })
        .collect();
    write_scan_rows(sink(a.output.out.as_deref())?, a.output.format, &rows)?;
    let disagreements = rows.iter().filter(|r| !r.agrees).count();
    if disagreements > 0 {
        eprintln!("{disagreements} partitions where the fast and naive checkers disagree");
        return Ok(EXIT_CHECK_FAILED);
    }
    Ok(EXIT_OK)
}
