//! Exact comparison of radicals, with the integer identity behind each answer.
use seshadri::oracle::float_check;
use seshadri::{Radical, Rational};

fn main() {
    let pairs = [
        (Radical::root(18u32, 3).unwrap(), Radical::root(6u32, 2).unwrap()),
        (Radical::root(4u32, 2).unwrap(), Radical::from_int(2).unwrap()),
        // (6k)^(1/3)/3 against 4/3 at k = 10 and k = 11
        (Radical::root(60u32, 3).unwrap().scale(&Rational::new(1, 3)).unwrap(), Radical::from_rational(Rational::new(4, 3)).unwrap()),
        (Radical::root(66u32, 3).unwrap().scale(&Rational::new(1, 3)).unwrap(), Radical::from_rational(Rational::new(4, 3)).unwrap()),
    ];
    for (a, b) in &pairs {
        let c = a.compare(b);
        println!("{c}");
        println!("    ≈ {} vs {}", a.to_decimal(12), b.to_decimal(12));
        println!("    50 digits: {}", float_check(a, b, 50).report);
    }
    // normal form folds perfect powers and reduces the index
    let x = Radical::new(Rational::new(1, 2), 64u32, 4).unwrap();
    println!("(1/2)·64^(1/4) = {x}");
}
