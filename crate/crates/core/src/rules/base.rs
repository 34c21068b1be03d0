//! Base bounds, certificate bounds and bookkeeping rules.

use crate::model::epsilon_upper_from_curves;
use crate::radical::Radical;
use crate::rational::Rational;

use super::{child_interval, citation, rad, Effect, Firing, Knowledge, RuleApplication, RuleContext, RuleId};

/// `ε ≥ 1`; for an elliptic curve, `ε = deg L` outright.
pub fn rule_lower_one(ctx: &RuleContext<'_>, _k: &Knowledge) -> Vec<Firing> {
    let spec = ctx.spec;
    if spec.dim == 1 {
        let v = Rational::from_integer(spec.degree);
        let app = RuleApplication::new(RuleId::LowerOne, citation::ELLIPTIC_BASE)
            .premise(format!("{} is an elliptic curve with deg L = {}", spec.id, spec.degree))
            .effect(format!("pinned ε = {v}"));
        return vec![Firing::new(RuleId::LowerOne, app, vec![Effect::Pin(v)])];
    }
    let app = RuleApplication::new(RuleId::LowerOne, citation::NAKAMAYE_LOWER)
        .premise(format!("{} is a polarized abelian variety of dimension {}", spec.id, spec.dim))
        .effect("lo ≥ 1");
    vec![Firing::new(RuleId::LowerOne, app, vec![Effect::RaiseLo(Radical::one())])]
}

/// `ε ≤ (L^n)^(1/n)`.
pub fn rule_upper_root(ctx: &RuleContext<'_>, _k: &Knowledge) -> Vec<Firing> {
    let app = RuleApplication::new(RuleId::UpperRoot, citation::UPPER_ROOT)
        .premise(format!("n = {}, L^n = {}", ctx.n(), ctx.spec.degree))
        .effect(format!("hi ≤ {}", ctx.root));
    vec![Firing::new(RuleId::UpperRoot, app, vec![Effect::LowerHi(ctx.root.clone())])]
}

/// `ε ≤ min_C L·C / mult₀C` over the curve certificates.
pub fn rule_curve_certificates(ctx: &RuleContext<'_>, _k: &Knowledge) -> Vec<Firing> {
    let Some(best) = epsilon_upper_from_curves(ctx.spec) else {
        return Vec::new();
    };
    let mut app = RuleApplication::new(RuleId::CurveCertificates, citation::CURVE_DEFINITION);
    for (i, c) in ctx.spec.curves.iter().enumerate() {
        if rad(&c.epsilon()) == best {
            app = app.premise(format!("curve #{i}: L·C = {}, mult₀C = {}, ε_C = {}", c.l_degree, c.mult, c.epsilon()));
            break;
        }
    }
    let app = app.effect(format!("hi ≤ {best}"));
    vec![Firing::new(RuleId::CurveCertificates, app, vec![Effect::LowerHi(best)])]
}

/// `ε(A) ≤ ε(B)` for every catalogued abelian subvariety `B`.
pub fn rule_subvariety_bound(ctx: &RuleContext<'_>, _k: &Knowledge) -> Vec<Firing> {
    let mut best: Option<(Radical, crate::engine::SeshadriResult)> = None;
    for sub in &ctx.spec.subvarieties {
        let child = ctx.evaluate(&sub.spec);
        let Some((_, hi)) = child_interval(&child) else {
            let app = RuleApplication::new(RuleId::SubvarietyBound, citation::SUBVARIETY_BOUND)
                .premise(format!("catalogued subvariety {}", child.id))
                .effect("subinstance inconsistent");
            let msg = format!("catalogued subvariety {} is inconsistent", child.id);
            return vec![Firing::new(RuleId::SubvarietyBound, app, vec![Effect::Inconsistent(msg)])
                .with_child(child.proof.clone())];
        };
        if best.as_ref().is_none_or(|(b, _)| hi < *b) {
            best = Some((hi, child));
        }
    }
    let Some((hi, child)) = best else {
        return Vec::new();
    };
    let app = RuleApplication::new(RuleId::SubvarietyBound, citation::SUBVARIETY_BOUND)
        .premise(format!("{} ⊂ {} with ε({}) ≤ {hi}", child.id, ctx.spec.id, child.id))
        .effect(format!("hi ≤ {hi}"));
    vec![Firing::new(RuleId::SubvarietyBound, app, vec![Effect::LowerHi(hi)]).with_child(child.proof)]
}

/// Intersects the candidate set with `[lo, hi]`: a unique survivor is pinned,
/// an empty intersection is an inconsistency.
pub fn rule_candidate_resolution(_ctx: &RuleContext<'_>, k: &Knowledge) -> Vec<Firing> {
    let Some(cands) = &k.candidates else {
        return Vec::new();
    };
    let inside: Vec<&Rational> = cands.iter().filter(|c| k.contains(&rad(c))).collect();
    let listed = cands.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ");
    let app = RuleApplication::new(RuleId::CandidateResolution, citation::CANDIDATES)
        .premise(format!("ε ∈ {{{listed}}}"))
        .premise(format!("lo = {}, hi = {}", opt(&k.lo), opt(&k.hi)));
    match inside.as_slice() {
        [] => {
            let msg = format!("no candidate in {{{listed}}} lies in [{}, {}]", opt(&k.lo), opt(&k.hi));
            vec![Firing::new(RuleId::CandidateResolution, app.effect(msg.clone()), vec![Effect::Inconsistent(msg)])]
        }
        [v] => {
            let v = (*v).clone();
            let app = app.effect(format!("pinned ε = {v}"));
            vec![Firing::new(RuleId::CandidateResolution, app, vec![Effect::Pin(v)])]
        }
        _ => Vec::new(),
    }
}

fn opt(r: &Option<Radical>) -> String {
    r.as_ref().map_or_else(|| "?".to_string(), |x| x.to_string())
}

/// Emits the structural consequence of `ε = 1` as a report.
pub fn rule_rigidity_report(ctx: &RuleContext<'_>, k: &Knowledge) -> Vec<Firing> {
    if ctx.n() < 2 || k.pinned.as_ref() != Some(&Rational::one()) {
        return Vec::new();
    }
    let fact = format!("ε({},L) = 1: (A,L) splits as (E,L₁) × (B,L₂) with deg L₁ = 1 (structural report)", ctx.spec.id);
    let app = RuleApplication::new(RuleId::RigidityReport, citation::NAKAMAYE_EQUALITY)
        .premise("ε(A,L) = 1")
        .effect(fact.clone());
    vec![Firing::new(RuleId::RigidityReport, app, vec![Effect::Fact(fact)])]
}
