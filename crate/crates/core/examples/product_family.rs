//! `J × E` with the product polarization, `L³ = 6k`: the value stays 4/3 while
//! `(6k)^(1/3)/3` crosses it between k = 10 and k = 11.
use seshadri::{evaluate, AVSpec, PpavType};

fn main() {
    for k in 1..=20u64 {
        let spec = AVSpec::new(format!("JxE{k}"), 3, 6 * k)
            .with_subvariety(AVSpec::new("J", 2, 2).with_ppav_type(PpavType::JacobianGenus2))
            .with_product("J", k);
        let r = evaluate(&spec).unwrap();
        let t = spec.degree_root().scale(&seshadri::Rational::new(1, 3)).unwrap();
        println!("k = {k:>2}  ε = {:<4}  (L³)^(1/3)/3 ≈ {}  ε is {:?}", r.status, t.to_decimal(6), r.submaximality.unwrap());
    }
}
