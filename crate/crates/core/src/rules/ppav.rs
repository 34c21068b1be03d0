//! Principally polarized instances and product decompositions.

use std::collections::BTreeSet;

use crate::model::{factorial, PpavType};
use crate::rational::Rational;

use super::{child_interval, citation, equality_effects, rad, status_text, Effect, Firing, Knowledge, RuleApplication, RuleContext, RuleId};

/// Possible Seshadri constants of a principally polarized abelian variety of dimension `n`, where known.
pub fn principal_value_set(n: u32) -> Option<BTreeSet<Rational>> {
    match n {
        2 => Some([Rational::one(), Rational::new(4, 3)].into()),
        3 => Some([Rational::one(), Rational::new(3, 2), Rational::new(12, 7)].into()),
        _ => None,
    }
}

fn listed(set: &BTreeSet<Rational>) -> String {
    set.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
}

/// Pins the value attached to a principal polarization tag.
pub fn rule_ppav_tag(ctx: &RuleContext<'_>, _k: &Knowledge) -> Vec<Firing> {
    let Some(t) = &ctx.spec.tags.ppav_type else {
        return Vec::new();
    };
    let (v, cite, what) = match t {
        PpavType::JacobianGenus2 => (Rational::new(4, 3), citation::PPAV_SURFACE, "Jacobian of a genus-2 curve".to_string()),
        PpavType::ProductOfTwoElliptic => {
            (Rational::one(), citation::PPAV_SURFACE, "product of two elliptic curves with degree-one factors".to_string())
        }
        PpavType::KnownEpsilon(v) => (v.clone(), citation::PPAV_KNOWN, format!("tagged with known ε = {v}")),
    };
    let app = RuleApplication::new(RuleId::PpavTag, cite)
        .premise(format!("{} is principally polarized (L^{} = {})", ctx.spec.id, ctx.n(), ctx.spec.degree))
        .premise(what)
        .effect(format!("pinned ε = {v}"));
    vec![Firing::new(RuleId::PpavTag, app, vec![Effect::Pin(v)])]
}

/// A principal polarization in dimension 2 or 3 restricts ε to a finite set.
pub fn rule_principal_candidates(ctx: &RuleContext<'_>, _k: &Knowledge) -> Vec<Firing> {
    let n = ctx.n();
    if ctx.spec.degree != factorial(n) {
        return Vec::new();
    }
    let Some(set) = principal_value_set(n) else {
        return Vec::new();
    };
    let cite = if n == 2 { citation::PPAV_SURFACE } else { citation::PPAV_THREEFOLD_VALUES };
    let app = RuleApplication::new(RuleId::PrincipalCandidates, cite)
        .premise(format!("L^{n} = {} = {n}!", ctx.spec.degree))
        .effect(format!("ε ∈ {{{}}}", listed(&set)));
    vec![Firing::new(RuleId::PrincipalCandidates, app, vec![Effect::Candidates(set)])]
}

/// `ε(B × E, p*L ⊗ q*M_k) = min{ε(B, L), k}`.
pub fn rule_product(ctx: &RuleContext<'_>, _k: &Knowledge) -> Vec<Firing> {
    let Some(p) = &ctx.spec.tags.product_decomposition else {
        return Vec::new();
    };
    let Some(b) = ctx.spec.subvariety(&p.factor_id) else {
        return Vec::new();
    };
    let child = ctx.evaluate(&b.spec);
    let k = Rational::from_integer(p.elliptic_degree);
    let app = RuleApplication::new(RuleId::Product, citation::PRODUCT)
        .premise(format!("{} ≅ {} × E with deg M = {k}", ctx.spec.id, b.spec.id))
        .premise(format!("ε({}) = {}", b.spec.id, status_text(&child)));
    let Some((lo, hi)) = child_interval(&child) else {
        let msg = format!("product factor {} is inconsistent", b.spec.id);
        return vec![Firing::new(RuleId::Product, app.effect(msg.clone()), vec![Effect::Inconsistent(msg)]).with_child(child.proof)];
    };
    let kr = rad(&k);
    let effects = if let Some(v) = lo.as_rational().filter(|_| lo == hi) {
        let m = v.clone().min(k.clone());
        vec![Effect::Pin(m)]
    } else if kr <= lo {
        vec![Effect::Pin(k.clone())]
    } else {
        let mut e = vec![Effect::RaiseLo(lo), Effect::LowerHi(hi.min(kr))];
        if let Some(c) = &child.candidate_set {
            e.push(Effect::Candidates(c.iter().map(|x| x.clone().min(k.clone())).collect()));
        }
        e
    };
    let summary = match &effects[0] {
        Effect::Pin(v) => format!("pinned ε = min{{ε({}), {k}}} = {v}", b.spec.id),
        _ => format!("ε = min{{ε({}), {k}}}", b.spec.id),
    };
    let mut f = Firing::new(RuleId::Product, app.effect(summary), effects).with_child(child.proof);
    f.effects.push(Effect::Fact(format!("ε({},L) = min{{ε({}), {k}}}", ctx.spec.id, b.spec.id)));
    vec![f]
}

/// Threefolds with `L³ ≥ 18` over a principal surface, fourfolds with `L⁴ ≥ 72` over a principal threefold.
pub fn rule_ppav_divisor(ctx: &RuleContext<'_>, _k: &Knowledge) -> Vec<Firing> {
    let n = ctx.n();
    let (min_degree, cite) = match n {
        3 => (18, citation::PPAV_THREEFOLD),
        4 => (72, citation::PPAV_FOURFOLD),
        _ => return Vec::new(),
    };
    if ctx.spec.degree < min_degree {
        return Vec::new();
    }
    let set = principal_value_set(n - 1).expect("dimension 2 or 3");
    let nq = Rational::from_integer(n as i64);
    let mut out = Vec::new();
    for d in ctx.spec.divisors().filter(|d| d.degree == factorial(n - 1)) {
        let side = crate::radical::Radical::root_of_rational(&(&nq * &Rational::from_integer(d.degree)), n - 1)
            .expect("positive");
        let c = ctx.root.compare(&side);
        if !c.is_greater() {
            continue;
        }
        let child = ctx.evaluate(d);
        let app = RuleApplication::new(RuleId::PpavDivisor, cite)
            .premise(format!("L^{n} = {} ≥ {min_degree}", ctx.spec.degree))
            .premise(format!("{} is a principally polarized abelian divisor ((L|_D)^{} = {})", d.id, n - 1, d.degree))
            .witness(&c)
            .effect(format!("ε(A,L) = ε({},L|_{}) = {} ∈ {{{}}}", d.id, d.id, status_text(&child), listed(&set)));
        let mut effects = equality_effects(&child);
        effects.push(Effect::Candidates(set.clone()));
        out.push(Firing::new(RuleId::PpavDivisor, app, effects).with_child(child.proof));
    }
    out
}
