//! Threefolds of small degree whose upper bound is below `(L³)^(1/3)/3`.
use seshadri::{evaluate, AVSpec, CurveCert};

fn main() {
    for (d, curve) in [(60, CurveCert::elliptic(1)), (36, CurveCert::new(11, 10)), (66, CurveCert::new(4, 3)), (174, CurveCert::new(7, 5)), (180, CurveCert::new(4, 3))] {
        let spec = AVSpec::new(format!("A{d}"), 3, d).with_curve(curve.clone());
        let r = evaluate(&spec).unwrap();
        let cands = r.candidate_set.as_ref().map(|c| c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "));
        println!("L³ = {d:>3}, curve ε_C = {:<4} → {}   candidates {}", curve.epsilon(), r.status, cands.map_or("-".into(), |c| format!("{{{c}}}")));
        for b in &r.blocked {
            println!("    blocked: {b}");
        }
    }
}
