//! Reduction of `ε(A, L)` to an abelian divisor, and containment of low curves in divisors.

use crate::error::DomainError;
use crate::model::AVSpec;
use crate::radical::{Comparison, Radical};
use crate::rational::Rational;

use num_bigint::BigUint;

use super::{citation, equality_effects, rad, status_text, Effect, Firing, Knowledge, RuleApplication, RuleContext, RuleId};

/// Denominator cap used when rationalizing the sharp reduction parameter.
pub const PARAMETER_DENOMINATOR: u64 = 1_000_000;

/// Nef threshold `σ(L, D) = L^n / (n · (L|_D)^(n-1))` of an abelian divisor.
pub fn rule_nef_threshold(parent_degree: u64, n: u32, divisor_degree: u64) -> Result<Rational, DomainError> {
    if parent_degree == 0 || divisor_degree == 0 || n == 0 {
        return Err(DomainError::ZeroDegree);
    }
    Ok(Rational::new(parent_degree, n as u64 * divisor_degree))
}

/// `(c · d)^(1/(n-1))` for the divisor comparison.
fn divisor_side(c: &Rational, divisor: &AVSpec, n: u32) -> Radical {
    let q = c * &Rational::from_integer(divisor.degree);
    Radical::root_of_rational(&q, n - 1).expect("positive")
}

fn reduce_to(ctx: &RuleContext<'_>, rule: RuleId, cite: &str, divisor: &AVSpec, witnesses: &[&Comparison], premises: Vec<String>) -> Firing {
    let child = ctx.evaluate(divisor);
    let sigma = rule_nef_threshold(ctx.spec.degree, ctx.n(), divisor.degree).expect("validated degrees");
    let mut app = RuleApplication::new(rule, cite)
        .premise(format!("{} is an abelian divisor with (L|_D)^{} = {}", divisor.id, ctx.n() - 1, divisor.degree))
        .premise(format!("nef threshold σ(L,{}) = {sigma}", divisor.id));
    for p in premises {
        app = app.premise(p);
    }
    for w in witnesses {
        app = app.witness(w);
    }
    let app = app.effect(format!("ε({},L) = ε({},L|_{}) = {}", ctx.spec.id, divisor.id, divisor.id, status_text(&child)));
    Firing::new(rule, app, equality_effects(&child)).with_child(child.proof)
}

/// Reduces to every divisor with `(L^n)^(1/n) > (n·(L|_D)^(n-1))^(1/(n-1))`.
pub fn rule_divisor_reduction_unconditional(ctx: &RuleContext<'_>, _k: &Knowledge) -> Vec<Firing> {
    let n = ctx.n();
    if n < 2 {
        return Vec::new();
    }
    let nq = Rational::from_integer(n as i64);
    ctx.spec
        .divisors()
        .filter_map(|d| {
            let cmp = ctx.root.compare(&divisor_side(&nq, d, n));
            cmp.is_greater().then(|| {
                reduce_to(ctx, RuleId::DivisorReduction, citation::DIVISOR_REDUCTION, d, &[&cmp], Vec::new())
            })
        })
        .collect()
}

/// Reduces to divisors with `(L^n)^(1/n) ≥ (a·(L|_D)^(n-1))^(1/(n-1))`, provided `hi < a·(L^n)^(1/n)/n`.
pub fn rule_divisor_reduction_conditional(ctx: &RuleContext<'_>, k: &Knowledge, a: &Rational) -> Result<Vec<Firing>, DomainError> {
    if !a.is_positive() {
        return Err(DomainError::NonPositiveParameter(a.to_string()));
    }
    let n = ctx.n();
    if n < 2 {
        return Ok(Vec::new());
    }
    let threshold = ctx.scaled_threshold(a);
    let Some(hi_cmp) = k.hi_vs(&threshold).filter(Comparison::is_less) else {
        return Ok(Vec::new());
    };
    Ok(ctx
        .spec
        .divisors()
        .filter_map(|d| {
            let cmp = ctx.root.compare(&divisor_side(a, d, n));
            (!cmp.is_less()).then(|| {
                reduce_to(
                    ctx,
                    RuleId::DivisorReductionConditional,
                    citation::DIVISOR_REDUCTION_PARAM,
                    d,
                    &[&cmp, &hi_cmp],
                    vec![format!("a = {a}"), format!("hi < a·(L^n)^(1/n)/n = {threshold}")],
                )
            })
        })
        .collect())
}

/// Smallest `a = m / 10⁶` strictly above `n · hi / (L^n)^(1/n)`.
pub fn sharp_parameter(hi: &Radical, root: &Radical, n: u32) -> Option<Rational> {
    let x = hi.scale(&Rational::from_integer(n as i64)).ok()?.div(root);
    let floor = x.floor_scaled(&BigUint::from(PARAMETER_DENOMINATOR));
    Some(Rational::new(num_bigint::BigInt::from(floor + 1u32), PARAMETER_DENOMINATOR))
}

/// Curves that a divisor satisfying the containment hypothesis must contain.
///
/// Strict hypothesis `(L^n)^(1/n) > (a·(L|_D)^(n-1))^(1/(n-1))` captures curves with
/// `ε_C ≤ a·(L^n)^(1/n)/n`; the non-strict one captures `ε_C <` that threshold.
pub fn rule_containment(ctx: &RuleContext<'_>, _k: &Knowledge, a: &Rational) -> Result<Vec<Firing>, DomainError> {
    if !a.is_positive() {
        return Err(DomainError::NonPositiveParameter(a.to_string()));
    }
    let n = ctx.n();
    if n < 2 {
        return Ok(Vec::new());
    }
    let threshold = ctx.scaled_threshold(a);
    let mut out = Vec::new();
    for d in ctx.spec.divisors() {
        let cmp = ctx.root.compare(&divisor_side(a, d, n));
        if cmp.is_less() {
            continue;
        }
        let strict = cmp.is_greater();
        let mut facts = Vec::new();
        let mut problems = Vec::new();
        for (i, c) in ctx.spec.curves.iter().enumerate() {
            let eps = rad(&c.epsilon());
            let inside = if strict { eps <= threshold } else { eps < threshold };
            if !inside {
                continue;
            }
            let label = format!("curve #{i} (L·C = {}, mult₀C = {})", c.l_degree, c.mult);
            if c.generates_dim == Some(n) {
                problems.push(format!("{label} generates A but must lie in the divisor {}", d.id));
            } else if let Some(other) = c.contained_in.as_deref().filter(|b| *b != d.id) {
                let other_is_divisor = ctx.spec.subvariety(other).is_some_and(|s| s.is_divisor);
                if c.generates_dim == Some(n - 1) && other_is_divisor {
                    problems.push(format!("{label} generates the divisor {other} but must lie in the divisor {}", d.id));
                }
            } else if n == 2 && (c.mult != 1 || c.l_degree != d.degree) {
                problems.push(format!("{label} must be the elliptic curve {} (degree {})", d.id, d.degree));
            }
            facts.push(format!("{label} ⊂ {}", d.id));
        }
        if facts.is_empty() {
            continue;
        }
        let variant = if strict { "strict: ε_C ≤ threshold" } else { "non-strict: ε_C < threshold" };
        let app = RuleApplication::new(RuleId::Containment, citation::CONTAINMENT)
            .premise(format!("a = {a}, threshold a·(L^n)^(1/n)/n = {threshold}"))
            .premise(format!("divisor {} with (L|_D)^{} = {} ({variant})", d.id, n - 1, d.degree))
            .witness(&cmp);
        let effects: Vec<Effect> = if problems.is_empty() {
            facts.into_iter().map(Effect::Fact).collect()
        } else {
            problems.into_iter().map(Effect::Inconsistent).collect()
        };
        let summary = effects
            .iter()
            .map(|e| match e {
                Effect::Fact(s) | Effect::Inconsistent(s) => s.clone(),
                _ => String::new(),
            })
            .collect::<Vec<_>>()
            .join("; ");
        out.push(Firing::new(RuleId::Containment, app.effect(summary), effects));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::Engine;
    use crate::model::CurveCert;
    use crate::rules::testing::{ctx_for, knowledge, NoChildren};

    #[test]
    fn nef_threshold_values() {
        assert_eq!(rule_nef_threshold(30, 3, 2).unwrap(), Rational::from_integer(5));
        assert_eq!(rule_nef_threshold(4, 2, 2).unwrap(), Rational::from_integer(1));
        assert_eq!(rule_nef_threshold(72, 4, 6).unwrap(), Rational::from_integer(3));
        assert_eq!(rule_nef_threshold(30, 3, 0), Err(DomainError::ZeroDegree));
    }

    fn jacobian() -> AVSpec {
        AVSpec::new("S", 2, 2)
    }

    #[test]
    fn unconditional_fires_on_ppav3_and_ppav4() {
        let engine = Engine::default();
        let spec = AVSpec::new("A", 3, 18).with_subvariety(jacobian());
        let f = rule_divisor_reduction_unconditional(&ctx_for(&spec, &engine), &Knowledge::default());
        assert_eq!(f.len(), 1);
        assert!(f[0].application.witnesses[0].contains("18² = 324 > 6³ = 216"));

        let spec = AVSpec::new("A", 4, 72).with_subvariety(AVSpec::new("T", 3, 6));
        let f = rule_divisor_reduction_unconditional(&ctx_for(&spec, &engine), &Knowledge::default());
        assert_eq!(f.len(), 1);
        assert!(f[0].application.witnesses[0].contains("72³ = 373248 > 24⁴ = 331776"));
    }

    #[test]
    fn unconditional_does_not_fire_below() {
        let spec = AVSpec::new("A", 3, 6).with_subvariety(jacobian());
        assert!(rule_divisor_reduction_unconditional(&ctx_for(&spec, &NoChildren), &Knowledge::default()).is_empty());
    }

    #[test]
    fn conditional_parameter() {
        let engine = Engine::default();
        let spec = AVSpec::new("A", 3, 30).with_subvariety(jacobian());
        let a = Rational::from_integer(3);
        let k = knowledge(Some(Radical::one()), Some(rad(&Rational::new(4, 3))));
        let f = rule_divisor_reduction_conditional(&ctx_for(&spec, &engine), &k, &a).unwrap();
        assert_eq!(f.len(), 1);
        // hi = 30^(1/3) is not strictly below 30^(1/3)
        let k = knowledge(Some(Radical::one()), Some(Radical::root(30u32, 3).unwrap()));
        assert!(rule_divisor_reduction_conditional(&ctx_for(&spec, &NoChildren), &k, &a).unwrap().is_empty());
        assert!(rule_divisor_reduction_conditional(&ctx_for(&spec, &NoChildren), &k, &Rational::from_integer(0)).is_err());
    }

    #[test]
    fn sharp_parameter_is_strictly_above() {
        let root = Radical::root(30u32, 3).unwrap();
        let hi = rad(&Rational::new(4, 3));
        let a = sharp_parameter(&hi, &root, 3).unwrap();
        let x = hi.scale(&Rational::from_integer(3)).unwrap().div(&root);
        assert!(rad(&a) > x);
        assert!(rad(&(&a - &Rational::new(1, PARAMETER_DENOMINATOR as i64))) <= x);
        // exact case: hi = root gives x = n, a = n + 10⁻⁶
        let a = sharp_parameter(&root, &root, 3).unwrap();
        assert_eq!(a, Rational::new(3_000_001, 1_000_000));
    }

    #[test]
    fn containment_surface() {
        // L² = 20, elliptic E of degree 2: √20 > 2·2, so every curve with ε_C ≤ √20 lies in E.
        let spec = AVSpec::new("S", 2, 20)
            .with_subvariety(AVSpec::new("E", 1, 2))
            .with_curve(CurveCert::elliptic(2))
            .with_curve(CurveCert::new(9, 1));
        let f = rule_containment(&ctx_for(&spec, &NoChildren), &Knowledge::default(), &Rational::from_integer(2)).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].effects, vec![Effect::Fact("curve #0 (L·C = 2, mult₀C = 1) ⊂ E".into())]);
    }

    #[test]
    fn containment_generating_curve_is_inconsistent() {
        let mut c = CurveCert::new(2, 1);
        c.generates_dim = Some(3);
        let spec = AVSpec::new("A", 3, 174).with_subvariety(jacobian()).with_curve(c);
        let f = rule_containment(&ctx_for(&spec, &NoChildren), &Knowledge::default(), &Rational::from_integer(3)).unwrap();
        assert!(matches!(f[0].effects[0], Effect::Inconsistent(_)));
    }

    #[test]
    fn containment_above_threshold_is_silent() {
        let spec = AVSpec::new("A", 3, 18).with_subvariety(jacobian()).with_curve(CurveCert::new(3, 1));
        // threshold 18^(1/3) ≈ 2.62 < 3
        assert!(rule_containment(&ctx_for(&spec, &NoChildren), &Knowledge::default(), &Rational::from_integer(3))
            .unwrap()
            .is_empty());
    }
}
