//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Commands are run through the built binary where the
//! criterion is phrased as a command.

use std::collections::BTreeMap;
use std::process::Command;
use std::time::Instant;

use ramsey_forge::catalog::load_catalog;
use ramsey_forge_core::checker::{check_cyclic_basis, check_sum_free_fast, check_triangle_fast};
use ramsey_forge_core::oracle::{atoms, exhaustive_small_scan, relation_algebra_check, Relation};
use ramsey_forge_core::partition::build_class_zero;
use ramsey_forge_core::search::ramsey_recursive_bound;
use ramsey_forge_core::{CyclotomicPartition, LabeledPartition, ResidueSet};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn forge(args: &[&str]) -> Result<String, String> {
    let o = Command::new(env!("CARGO_BIN_EXE_ramsey-forge"))
        .args(args)
        .arg("--quiet")
        .output()
        .map_err(|e| e.to_string())?;
    if !o.status.success() {
        return Err(format!(
            "`{}` exited with {:?}: {}",
            args.join(" "),
            o.status.code(),
            String::from_utf8_lossy(&o.stderr)
        ));
    }
    String::from_utf8(o.stdout).map_err(|e| e.to_string())
}

/// CSV text as header-keyed maps.
fn rows(csv_text: &str) -> Vec<BTreeMap<String, String>> {
    let mut r = csv::Reader::from_reader(csv_text.as_bytes());
    let header = r.headers().unwrap().clone();
    r.records()
        .map(|rec| header.iter().map(String::from).zip(rec.unwrap().iter().map(String::from)).collect())
        .collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn table() -> BTreeMap<usize, (u64, u64)> {
    load_catalog().unwrap().into_iter().map(|r| (r.m, (r.n, r.x))).collect()
}

fn catalog_validity() -> Outcome {
    let out = forge(&["verify", "--all"])?;
    let rows = rows(&out);
    ensure(rows.len() == 397, || format!("{} rows reported", rows.len()))?;
    let failed: Vec<&String> = rows.iter().filter(|r| r["passed"] != "true").map(|r| &r["m"]).collect();
    ensure(failed.is_empty(), || format!("failing rows m = {failed:?}"))?;
    Ok("397 rows pass".into())
}

fn search_matches(out: &str, ms: &[usize]) -> Result<(), String> {
    let table = table();
    let got = rows(out);
    ensure(got.len() == ms.len(), || format!("{} records for {} values of m", got.len(), ms.len()))?;
    for (r, &m) in got.iter().zip(ms) {
        let have = (r["status"].as_str(), r["N"].as_str(), r["x"].as_str());
        match table.get(&m) {
            Some((n, x)) => {
                let (n, x) = (n.to_string(), x.to_string());
                ensure(r["m"] == m.to_string() && have == ("found", n.as_str(), x.as_str()), || {
                    format!("m={m}: got {have:?}, table has ({n}, {x})")
                })?
            }
            None => ensure(have.0 == "exhausted", || format!("m={m}: expected no modulus, got {have:?}"))?,
        }
    }
    Ok(())
}

fn search_small_range() -> Outcome {
    let out = forge(&["search", "--m", "2..50"])?;
    search_matches(&out, &(2..=50).collect::<Vec<_>>())?;
    Ok("m=2..50 match, 8 and 13 exhausted".into())
}

fn search_spot_checks() -> Outcome {
    let ms = [100, 200, 300, 373, 400];
    for m in ms {
        let out = forge(&["search", "--m", &m.to_string(), "--bound", "2387201"])?;
        search_matches(&out, &[m])?;
    }
    Ok(format!("m in {ms:?} match"))
}

fn sweep_exhausted(m: usize, bound: u64) -> Outcome {
    let out = forge(&["sweep", "--m", &m.to_string(), "--bound", &bound.to_string()])?;
    let r = &rows(&out)[0];
    ensure(r["status"] == "exhausted", || format!("status {}", r["status"]))?;
    Ok(format!("{} candidates up to {bound}, none pass", r["candidates_tested"]))
}

fn ramsey_bounds() -> Outcome {
    let b8 = ramsey_recursive_bound(8).map_err(|e| e.to_string())?;
    let b13 = ramsey_recursive_bound(13).map_err(|e| e.to_string())?;
    ensure((b8, b13) == (109_602, 16_926_797_487), || format!("got {b8}, {b13}"))?;
    let cli = forge(&["bound", "--colors", "13"])?;
    ensure(cli == "colors,bound\n13,16926797487\n", || format!("cli printed {cli:?}"))?;
    Ok(format!("bound(8) = {b8}, bound(13) = {b13}"))
}

fn oracle_equivalence() -> Outcome {
    let scan = exhaustive_small_scan(600).map_err(|e| e.to_string())?;
    let bad: Vec<_> = scan.iter().filter(|e| !e.agrees()).map(|e| (e.modulus, e.colors)).collect();
    ensure(bad.is_empty(), || format!("disagreements at {bad:?}"))?;
    Ok(format!("{} partitions agree flag for flag", scan.len()))
}

fn relation_algebra() -> Outcome {
    let k5 = LabeledPartition::from(&CyclotomicPartition::build(5, 2, 2).unwrap());
    let a = atoms(&k5);
    let (r, b, id) = (&a[0], &a[1], Relation::identity(5));
    ensure(r.compose(r) == b.union(&id), || "R∘R != B ∪ Id".into())?;
    ensure(b.compose(b) == r.union(&id), || "B∘B != R ∪ Id".into())?;
    ensure(r.compose(b) == r.union(b), || "R∘B != R ∪ B".into())?;
    for p in [&k5, &LabeledPartition::from(&CyclotomicPartition::build(13, 3, 2).unwrap())] {
        ensure(relation_algebra_check(p, 200).unwrap(), || format!("N={} fails", p.modulus()))?;
    }
    let scan = exhaustive_small_scan(200).map_err(|e| e.to_string())?;
    for e in &scan {
        let p = LabeledPartition::from(&CyclotomicPartition::build(e.modulus, e.colors, e.generator).unwrap());
        let ra = relation_algebra_check(&p, 200).unwrap();
        ensure(ra == e.naive.overall, || {
            format!("N={} m={}: algebra {ra}, naive {}", e.modulus, e.colors, e.naive.overall)
        })?;
    }
    Ok(format!("identities hold; {} partitions with N <= 200 agree", scan.len()))
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn generators(n: u64) -> Vec<u64> {
    (1..n)
        .filter(|&g| {
            let (mut y, mut k) = (g, 1);
            while y != 1 {
                y = y * g % n;
                k += 1;
            }
            k == n - 1
        })
        .collect()
}

fn naive_sumset(a: &ResidueSet, b: &ResidueSet) -> ResidueSet {
    let n = a.modulus();
    ResidueSet::from_residues(n, a.iter().flat_map(|x| b.iter().map(move |y| (x + y) % n))).unwrap()
}

fn shortcut_suites() -> Outcome {
    let (mut generator_cases, mut partitions) = (0usize, 0usize);
    for n in (3..=600).filter(|&n| is_prime(n)) {
        let gens = generators(n);
        if n <= 500 {
            for m in (1..n as usize).filter(|m| (n as usize - 1).is_multiple_of(*m)) {
                let first = build_class_zero(n, m, gens[0]).unwrap();
                for &g in &gens[1..] {
                    ensure(build_class_zero(n, m, g).unwrap() == first, || format!("N={n} m={m} g={g}"))?;
                    generator_cases += 1;
                }
            }
        }
        for m in (2..).take_while(|m| 2 * m < n).filter(|m| (n - 1) % (2 * m) == 0) {
            let p = CyclotomicPartition::build(n, m as usize, gens[0]).unwrap();
            let x0 = p.class(0);
            let direct = naive_sumset(x0, x0).is_disjoint(x0).unwrap();
            ensure(check_sum_free_fast(x0).is_ok() == direct, || format!("sum-free N={n} m={m}"))?;
            let basis = check_cyclic_basis(x0).is_ok();
            for xi in p.classes() {
                ensure(basis == (naive_sumset(xi, xi) == xi.complement()), || format!("basis N={n} m={m}"))?;
            }
            let cl = p.classes();
            let all_pairs = (0..cl.len())
                .all(|i| (0..cl.len()).all(|j| i == j || naive_sumset(&cl[i], &cl[j]) == ResidueSet::nonzero(n)));
            ensure(check_triangle_fast(&p).is_ok() == all_pairs, || format!("triangle N={n} m={m}"))?;
            partitions += 1;
        }
    }
    Ok(format!("{generator_cases} generator comparisons, {partitions} partitions"))
}

/// Parses an exported JSON coloring into an adjacency matrix of colors.
fn exported_coloring(m: &str, n: &str, x: &str) -> Result<(usize, usize, Vec<Vec<usize>>), String> {
    let doc: serde_json::Value =
        serde_json::from_str(&forge(&["export", "--m", m, "--N", n, "--x", x, "--format", "json"])?)
            .map_err(|e| e.to_string())?;
    let n = doc["N"].as_u64().unwrap() as usize;
    let colors = doc["m"].as_u64().unwrap() as usize;
    let mut adj = vec![vec![usize::MAX; n]; n];
    let edges = doc["edges"].as_array().unwrap();
    ensure(edges.len() == n * (n - 1) / 2, || format!("{} edges", edges.len()))?;
    for e in edges {
        let (u, v, c) = (
            e["u"].as_u64().unwrap() as usize,
            e["v"].as_u64().unwrap() as usize,
            e["color"].as_u64().unwrap() as usize,
        );
        ensure(u < v && c < colors, || format!("bad edge {e}"))?;
        adj[u][v] = c;
        adj[v][u] = c;
    }
    Ok((n, colors, adj))
}

fn colorings() -> Outcome {
    for (m, n, x) in [("2", "5", "2"), ("3", "13", "2")] {
        let (n, colors, adj) = exported_coloring(m, n, x)?;
        for u in 0..n {
            for v in u + 1..n {
                let c = adj[u][v];
                let mut seen = vec![false; colors * colors];
                for w in (0..n).filter(|&w| w != u && w != v) {
                    let (a, b) = (adj[u][w], adj[w][v]);
                    ensure(!(a == c && b == c), || format!("K{n}: monochromatic triangle {u} {v} {w}"))?;
                    seen[a * colors + b] = true;
                }
                for a in 0..colors {
                    for b in 0..colors {
                        ensure((a, b) == (c, c) || seen[a * colors + b], || {
                            format!("K{n}: edge {u}-{v} lacks triangle type ({a}, {b})")
                        })?;
                    }
                }
            }
        }
    }
    Ok("K5 and K13 triangle-free per color with every mixed triangle type on every edge".into())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("catalog validity (verify --all)", catalog_validity),
        ("search reproduction, m = 2..50", search_small_range),
        ("search reproduction, spot checks", search_spot_checks),
        ("8 colors: sweep to 109602 exhausted", || sweep_exhausted(8, 109_602)),
        ("13 colors: sweep to 190997 exhausted", || sweep_exhausted(13, 190_997)),
        ("recursive Ramsey bound", ramsey_bounds),
        ("fast and naive checkers agree, N <= 600", oracle_equivalence),
        ("relation-algebra equivalence", relation_algebra),
        ("structural shortcut suites", shortcut_suites),
        ("exported colorings", colorings),
    ];
    let only: Option<usize> = std::env::var("ACCEPTANCE_ONLY").ok().and_then(|s| s.parse().ok());
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let id = i + 1;
        if only.is_some_and(|o| o != id) {
            continue;
        }
        let start = Instant::now();
        let result = run();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {id:>2}: PASS  {name}: {detail} [{secs:.1}s]"),
            Err(detail) => {
                failures += 1;
                println!("criterion {id:>2}: FAIL  {name}: {detail} [{secs:.1}s]");
            }
        }
    }
    if failures > 0 {
        std::process::exit(1);
    }
}
