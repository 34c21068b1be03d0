//! Evaluates every instance in a directory; output is ordered by file name.
use seshadri::cli::{run_batch, BatchOutcome};

fn main() {
    let dir = std::env::args().nth(1).unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/data").into());
    let (outcomes, summary) = run_batch(dir.as_ref()).expect("readable directory");
    for (name, o) in &outcomes {
        match o {
            BatchOutcome::Evaluated(r) => println!("{name:<24} {}", r.status),
            BatchOutcome::Invalid(d) => println!("{name:<24} invalid: {}", d[0]),
            BatchOutcome::Unreadable(e) => println!("{name:<24} {e}"),
        }
    }
    println!("{summary:?}");
}
