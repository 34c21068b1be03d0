//! Rules specific to abelian threefolds.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};

use crate::error::DomainError;
use crate::radical::Radical;
use crate::rational::Rational;

use super::{citation, equality_effects, rad, status_text, Effect, Firing, Knowledge, RuleApplication, RuleContext, RuleId};

/// Largest `L³` the classifier covers.
pub const CLASSIFIER_MAX_DEGREE: u64 = 174;
/// Largest `L³` for which the classifier pins `ε = 1`.
pub const CLASSIFIER_PIN_DEGREE: u64 = 60;

/// `3·√(14·d)/4`, the surface threshold of the threefold dichotomy.
fn dichotomy_side(d: u64) -> Radical {
    Radical::root(14 * d, 2).expect("positive").scale(&Rational::new(3, 4)).expect("positive")
}

/// Integers in `[lo, hi]`, or `None` when either end is unknown.
fn integers_between(k: &Knowledge) -> Option<BTreeSet<Rational>> {
    let lo = k.lo.as_ref()?;
    let hi = k.hi.as_ref()?;
    let mut out = BTreeSet::new();
    let start = lo.floor_scaled(&BigUint::from(1u32));
    let end = hi.floor_scaled(&BigUint::from(1u32));
    let mut i = start;
    while i <= end {
        let v = Rational::from_integer(BigInt::from(i.clone()));
        if i > BigUint::from(0u32) && k.contains(&rad(&v)) {
            out.insert(v);
        }
        i += 1u32;
    }
    Some(out)
}

/// With `ε < (L³)^(1/3)/3`: reduce to a surface `S` with `(L³)^(1/3) > 3·√(14·(L|_S)²)/4`;
/// if no surface qualifies, `ε` is the degree of an elliptic curve.
pub fn rule_threefold_dichotomy(ctx: &RuleContext<'_>, k: &Knowledge) -> Vec<Firing> {
    if ctx.n() != 3 {
        return Vec::new();
    }
    let t = ctx.nakamaye_threshold();
    let Some(hyp) = k.hi_vs(&t).filter(|c| c.is_less()) else {
        return Vec::new();
    };
    let premise = format!("hi = {} < (L³)^(1/3)/3 = {t}", k.hi.as_ref().expect("known"));
    let mut out = Vec::new();
    for s in ctx.spec.divisors() {
        let c = ctx.root.compare(&dichotomy_side(s.degree));
        if !c.is_greater() {
            continue;
        }
        let child = ctx.evaluate(s);
        let app = RuleApplication::new(RuleId::ThreefoldDichotomy, citation::THREEFOLD_DICHOTOMY)
            .premise(premise.clone())
            .premise(format!("abelian surface {} with (L|_S)² = {}", s.id, s.degree))
            .witness(&hyp)
            .witness(&c)
            .effect(format!("ε(A,L) = ε({},L|_{}) = {}", s.id, s.id, status_text(&child)));
        out.push(Firing::new(RuleId::ThreefoldDichotomy, app, equality_effects(&child)).with_child(child.proof));
    }
    if !out.is_empty() {
        return out;
    }

    // Surfaces with (L|_S)² < (8/63)·(L³)^(2/3) are exactly those satisfying the reduction inequality.
    let surface_bound = ctx.root.pow(2).scale(&Rational::new(8, 63)).expect("positive");
    let mut app = RuleApplication::new(RuleId::ThreefoldDichotomy, citation::THREEFOLD_DICHOTOMY)
        .premise(premise)
        .witness(&hyp);
    if !ctx.spec.attestation_covers(2, &surface_bound) {
        let note = format!("threefold dichotomy blocked: catalog incomplete for surfaces with (L|_S)² < {surface_bound}");
        return vec![Firing::new(RuleId::ThreefoldDichotomy, app.effect(note.clone()), vec![Effect::Blocked(note)])];
    }
    app = app.premise(format!("no abelian surface with (L|_S)² < {surface_bound} satisfies the reduction inequality"));
    let fact = format!("ε({},L) is computed by an elliptic curve", ctx.spec.id);
    let mut effects = vec![Effect::Fact(fact.clone())];
    let mut summary = vec![fact];
    if let Some(c) = integers_between(k) {
        summary.push(format!("ε is an integer in [{}, {}]", k.lo.as_ref().expect("known"), k.hi.as_ref().expect("known")));
        effects.push(Effect::Candidates(c));
    }
    if let Some(r) = ctx.spec.attested_bound(1) {
        let e_min = ctx.spec.subvarieties_of_dim(1).map(|e| e.degree).min();
        app = app.premise(format!("every elliptic curve of degree < {r} is catalogued"));
        match e_min.map(|e| Radical::from_int(e).expect("positive")) {
            Some(e) if e < *r => {
                let v = e.as_rational().expect("integer").clone();
                summary.push(format!("ε = ε₀ = {v}"));
                effects.push(Effect::Pin(v));
            }
            _ => {
                summary.push(format!("ε ≥ {r}"));
                effects.push(Effect::RaiseLo(r.clone()));
            }
        }
    }
    vec![Firing::new(RuleId::ThreefoldDichotomy, app.effect(summary.join("; ")), effects)]
}

/// With `L³ ≤ 174` and `ε < (L³)^(1/3)/3`: `ε ∈ {1, 4/3}`, and `ε = 1` when `L³ ≤ 60`.
pub fn rule_threefold_classifier(ctx: &RuleContext<'_>, k: &Knowledge) -> Vec<Firing> {
    if ctx.n() != 3 || ctx.spec.degree > CLASSIFIER_MAX_DEGREE {
        return Vec::new();
    }
    let t = ctx.nakamaye_threshold();
    let Some(hyp) = k.hi_vs(&t).filter(|c| c.is_less()) else {
        return Vec::new();
    };
    let mut app = RuleApplication::new(RuleId::ThreefoldClassifier, citation::THREEFOLD_CLASSIFIER)
        .premise(format!("L³ = {} ≤ {CLASSIFIER_MAX_DEGREE}", ctx.spec.degree))
        .premise(format!("hi = {} < (L³)^(1/3)/3 = {t}", k.hi.as_ref().expect("known")))
        .witness(&hyp);
    let mut set = BTreeSet::new();
    for c in [Rational::one(), Rational::new(4, 3)] {
        let cmp = rad(&c).compare(&t);
        if cmp.is_less() {
            set.insert(c);
        } else {
            app = app.premise(format!("{c} is excluded since it is not below (L³)^(1/3)/3")).witness(&cmp);
        }
    }
    let listed = set.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ");
    let mut effects = vec![Effect::Candidates(set.clone())];
    if ctx.spec.degree <= CLASSIFIER_PIN_DEGREE || set.len() == 1 {
        if ctx.spec.degree <= CLASSIFIER_PIN_DEGREE {
            app = app.premise(format!("L³ = {} ≤ {CLASSIFIER_PIN_DEGREE}", ctx.spec.degree));
        }
        effects.push(Effect::Pin(Rational::one()));
        app = app.effect(format!("ε ∈ {{{listed}}}, pinned ε = 1"));
    } else {
        app = app.effect(format!("ε ∈ {{{listed}}}"));
    }
    vec![Firing::new(RuleId::ThreefoldClassifier, app, effects)]
}

/// Two distinct divisors with `(L³)^(1/3) > (a·(L|_D)²)^(1/2)` leave at most one curve with
/// `ε_C ≤ a·(L³)^(1/3)/3`, and it is elliptic; for `a = 3` that curve exists and computes `ε`.
pub fn rule_threefold_two_divisors(ctx: &RuleContext<'_>, k: &Knowledge, a: &Rational) -> Result<Vec<Firing>, DomainError> {
    if !a.is_positive() {
        return Err(DomainError::NonPositiveParameter(a.to_string()));
    }
    if ctx.n() != 3 {
        return Ok(Vec::new());
    }
    let mut app = RuleApplication::new(RuleId::ThreefoldTwoDivisors, citation::TWO_DIVISORS).premise(format!("a = {a}"));
    let mut ids = BTreeSet::new();
    for d in ctx.spec.divisors() {
        let side = Radical::root_of_rational(&(a * &Rational::from_integer(d.degree)), 2).expect("positive");
        let c = ctx.root.compare(&side);
        if c.is_greater() && ids.insert(d.id.clone()) {
            app = app.premise(format!("divisor {} with (L|_D)² = {} lies in D_a", d.id, d.degree)).witness(&c);
        }
    }
    if ids.len() < 2 {
        return Ok(Vec::new());
    }
    let t = ctx.scaled_threshold(a);
    app = app.premise(format!("C_a: curves with ε_C ≤ {t}"));
    let mut values = BTreeSet::new();
    let mut problems = Vec::new();
    for e in ctx.spec.subvarieties_of_dim(1) {
        let v = Rational::from_integer(e.degree);
        if rad(&v) <= t {
            app = app.premise(format!("elliptic curve {} of degree {} lies in C_a", e.id, e.degree));
            values.insert(v);
        }
    }
    for (i, cert) in ctx.spec.curves.iter().enumerate() {
        if rad(&cert.epsilon()) > t {
            continue;
        }
        app = app.premise(format!("curve #{i} (L·C = {}, mult₀C = {}) lies in C_a", cert.l_degree, cert.mult));
        if cert.mult != 1 {
            problems.push(format!("curve #{i} in C_a has mult₀C = {} but must be elliptic", cert.mult));
        } else {
            values.insert(Rational::from_integer(cert.l_degree));
        }
    }
    if values.len() > 1 {
        let list = values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ");
        problems.push(format!("C_a holds curves of distinct degrees {{{list}}} but has at most one member"));
    }
    if !problems.is_empty() {
        let app = app.effect(problems.join("; "));
        return Ok(vec![Firing::new(RuleId::ThreefoldTwoDivisors, app, problems.into_iter().map(Effect::Inconsistent).collect())]);
    }
    let fact = format!("at most one curve has ε_C ≤ {t} and it is elliptic");
    let mut effects = vec![Effect::Fact(fact.clone())];
    let mut summary = vec![fact];
    if *a == Rational::from_integer(3) {
        match values.into_iter().next() {
            Some(v) => {
                summary.push(format!("the curve exists and is the Seshadri curve: pinned ε = {v}"));
                effects.push(Effect::Pin(v));
            }
            None => {
                if let Some(c) = integers_between(k) {
                    summary.push("ε is the degree of an elliptic curve".to_string());
                    effects.push(Effect::Candidates(c));
                }
            }
        }
    }
    Ok(vec![Firing::new(RuleId::ThreefoldTwoDivisors, app.effect(summary.join("; ")), effects)])
}
