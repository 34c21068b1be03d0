//! Evaluates an instance file and prints the proof tree.
//!
//! `cargo run --example evaluate_explain -- data/product_k11.json`
use seshadri::cli::load_instance;
use seshadri::{evaluate, explain};

fn main() {
    let path = std::env::args().nth(1).unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/data/ppav3_jacobian.json").into());
    let spec = match load_instance(path.as_ref()) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    match evaluate(&spec) {
        Ok(r) => print!("{}", explain(&r)),
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(1);
        }
    }
}
