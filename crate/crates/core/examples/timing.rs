//! Times the fast check on one partition: `timing <m> <N> <x>`.

use ramsey_forge_core::{checker, CyclotomicPartition};
use std::time::Instant;

fn main() {
    let args: Vec<u64> = std::env::args().skip(1).map(|a| a.parse().expect("integer argument")).collect();
    let [m, n, x] = args[..] else {
        eprintln!("usage: timing <m> <N> <x>");
        std::process::exit(2);
    };
    let t = Instant::now();
    let p = CyclotomicPartition::build(n, m as usize, x).expect("valid partition");
    let built = t.elapsed();
    let report = checker::full_fast_check(&p);
    println!("m={m} N={n} x={x} overall={} build={built:?} total={:?}", report.overall, t.elapsed());
}
