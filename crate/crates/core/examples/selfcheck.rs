//! The oracle suite: comparator, rule-order permutations, exhaustive descent, known values.
//!
//! `cargo run --release --example selfcheck -- 5000 17`
use seshadri::oracle::{generate, selfcheck};

fn main() {
    let mut args = std::env::args().skip(1);
    let iters = args.next().and_then(|s| s.parse().ok()).unwrap_or(200);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(1);
    let sample = generate(seed);
    println!("sample instance (seed {seed}): {} of dimension {}, L^n = {}, {} catalogued subvarieties", sample.spec.id, sample.spec.dim, sample.spec.degree, sample.spec.subvarieties.len());
    let report = selfcheck(iters, seed);
    println!("{report}");
    std::process::exit(i32::from(!report.passed()));
}
