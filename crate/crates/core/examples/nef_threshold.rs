//! Nef thresholds of abelian divisors and the divisor reductions they drive.
use seshadri::rules::rule_nef_threshold;
use seshadri::{evaluate, explain, AVSpec, PpavType};

fn main() {
    for (deg, n, d) in [(18u64, 3u32, 2u64), (72, 4, 6), (3600, 3, 40), (66, 3, 2)] {
        let s = rule_nef_threshold(deg, n, d).unwrap();
        println!("L^{n} = {deg}, (L|_D)^{} = {d}: σ = {s}, σ·{n}·{d} = {}", n - 1, &s * &seshadri::Rational::from_integer(n as u64 * d));
    }
    let spec = AVSpec::new("A", 3, 24).with_subvariety(AVSpec::new("J", 2, 2).with_ppav_type(PpavType::JacobianGenus2));
    println!();
    print!("{}", explain(&evaluate(&spec).unwrap()));
}
