//! Threefolds over a principally polarized surface, fourfolds over a principally polarized threefold.
use std::time::Instant;

use seshadri::{evaluate, AVSpec, PpavType, Rational};

fn main() {
    let t = Instant::now();
    println!("L^3   Jacobian divisor   product divisor");
    for d in (18..=174).step_by(6) {
        let jac = AVSpec::new("A", 3, d).with_subvariety(AVSpec::new("J", 2, 2).with_ppav_type(PpavType::JacobianGenus2));
        let prod = AVSpec::new("A", 3, d).with_subvariety(AVSpec::new("E1xE2", 2, 2).with_ppav_type(PpavType::ProductOfTwoElliptic));
        println!("{d:>3}   {:<18} {}", evaluate(&jac).unwrap().status, evaluate(&prod).unwrap().status);
    }
    println!("sweep took {:?}\n", t.elapsed());

    for tag in [Some(Rational::one()), Some(Rational::new(3, 2)), Some(Rational::new(12, 7)), None] {
        let mut d = AVSpec::new("D", 3, 6);
        if let Some(v) = &tag {
            d = d.with_ppav_type(PpavType::KnownEpsilon(v.clone()));
        }
        let r = evaluate(&AVSpec::new("A", 4, 72).with_subvariety(d)).unwrap();
        let label = tag.map_or("untagged".to_string(), |v| format!("ε(D) = {v}"));
        println!("L^4 = 72, {label:<12} → {} candidates {:?}", r.status, r.candidate_set.map(|c| c.iter().map(|x| x.to_string()).collect::<Vec<_>>()));
    }
}
