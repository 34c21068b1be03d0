use std::cmp::Ordering;

use proptest::prelude::*;

use seshadri::cli::{instance_to_json, parse_instance};
use seshadri::oracle::generate;
use seshadri::rules::rule_nef_threshold;
use seshadri::{evaluate, AVSpec, CurveCert, Radical, Rational, Status};

fn radical() -> impl Strategy<Value = Radical> {
    (1i64..500, 1i64..500, 1u64..5000, 1u32..9).prop_map(|(p, q, r, m)| Radical::new(Rational::new(p, q), r, m).unwrap())
}

proptest! {
    #[test]
    fn comparison_is_a_total_order(a in radical(), b in radical(), c in radical()) {
        let ab = a.cmp(&b);
        prop_assert_eq!(ab, b.cmp(&a).reverse());
        if ab != Ordering::Greater && b <= c {
            prop_assert!(a <= c);
        }
        prop_assert_eq!(a.compare(&b).is_equal(), ab == Ordering::Equal);
    }

    #[test]
    fn normal_form_is_idempotent(a in radical()) {
        let again = Radical::new(a.coeff().clone(), a.radicand().clone(), a.index()).unwrap();
        prop_assert_eq!(again.coeff(), a.coeff());
        prop_assert_eq!(again.radicand(), a.radicand());
        prop_assert_eq!(again.index(), a.index());
    }

    #[test]
    fn scaling_is_monotone(a in radical(), p in 1i64..50, q in 1i64..50) {
        let s = a.scale(&Rational::new(p, q)).unwrap();
        prop_assert_eq!(s.cmp(&a), p.cmp(&q));
    }

    #[test]
    fn nef_identity(n in 2u32..6, d in 1u64..1000, l in 1u64..1000) {
        let f = |k: u32| (1..=k as u64).product::<u64>();
        let (d, big) = (f(n - 1) * d, f(n) * l);
        let s = rule_nef_threshold(big, n, d).unwrap();
        prop_assert_eq!(&s * &Rational::from_integer(n as u64 * d), Rational::from_integer(big));
    }

    #[test]
    fn instances_round_trip(seed in any::<u64>()) {
        let spec = generate(seed).spec;
        let back = parse_instance(&instance_to_json(&spec)).unwrap();
        prop_assert_eq!(back, spec);
    }

    #[test]
    fn results_respect_general_bounds(seed in 0u64..5000) {
        let spec = generate(seed).spec;
        let r = evaluate(&spec).unwrap();
        if let Some((lo, hi)) = r.interval() {
            prop_assert!(lo <= hi);
            prop_assert!(Radical::one() <= lo);
            prop_assert!(hi <= spec.degree_root());
            for c in &spec.curves {
                prop_assert!(hi <= Radical::from_rational(c.epsilon()).unwrap());
            }
        }
    }

    #[test]
    fn more_curves_never_widen(d in 1u64..30, p in 1u64..40, q in 1u64..4) {
        prop_assume!(p >= q);
        let base = AVSpec::new("A", 3, 6 * d);
        let r0 = evaluate(&base).unwrap();
        let r1 = evaluate(&base.clone().with_curve(CurveCert::new(p, q))).unwrap();
        if let (Some((_, h0)), Some((_, h1))) = (r0.interval(), r1.interval()) {
            prop_assert!(h1 <= h0);
        }
        prop_assert!(!matches!(r0.status, Status::Inconsistent(_)));
    }
}
