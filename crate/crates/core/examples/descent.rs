//! Descent through abelian subvarieties below the thresholds `r_i`, and its independent recomputation.
use seshadri::oracle::exhaustive_min_check;
use seshadri::rules::{descent_thresholds, RuleContext};
use seshadri::{evaluate, AVSpec, CurveCert, Engine, Radical};

fn main() {
    let e = |id: &str, d| AVSpec::new(id, 1, d);
    let bare = AVSpec::new("A", 3, 3600).with_curve(CurveCert::new(4, 3));
    let engine = Engine::default();
    for (i, r) in descent_thresholds(&RuleContext::new(&bare, &engine)) {
        println!("r_{i} = {r} ≈ {}", r.to_decimal(4));
    }

    let r = evaluate(&bare).unwrap();
    println!("\nwithout attestations: {}", r.status);
    for b in &r.blocked {
        println!("  blocked: {b}");
    }

    // complete catalog of a product of three elliptic curves of degrees 2, 20, 30
    let full = AVSpec::new("E2xE20xE30", 3, 6 * 2 * 20 * 30)
        .with_subvariety(e("E2", 2))
        .with_subvariety(e("E20", 20))
        .with_subvariety(e("E30", 30))
        .with_subvariety(AVSpec::new("E2xE20", 2, 80).with_subvariety(e("E2", 2)).with_subvariety(e("E20", 20)))
        .with_subvariety(AVSpec::new("E2xE30", 2, 120).with_subvariety(e("E2", 2)).with_subvariety(e("E30", 30)))
        .with_subvariety(AVSpec::new("E20xE30", 2, 1200).with_subvariety(e("E20", 20)).with_subvariety(e("E30", 30)))
        .with_attestation(1, Radical::from_int(1000).unwrap())
        .with_attestation(2, Radical::from_int(1_000_000).unwrap());
    let r = evaluate(&full).unwrap();
    println!("\nwith a complete catalog: {}", r.status);
    match exhaustive_min_check(&full) {
        Ok(c) => println!("exhaustive recomputation agrees: {c}"),
        Err(e) => println!("MISMATCH: {e}"),
    }
}
