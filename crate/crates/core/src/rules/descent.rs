//! Descent of `ε(A, L)` to catalogued abelian subvarieties below the thresholds `r_i`.

use crate::radical::Radical;
use crate::rational::Rational;

use super::{child_interval, citation, Effect, Firing, Knowledge, RuleApplication, RuleContext, RuleId};

/// `r_i = (i · (L^n)^(1/n) / n)^i` for `i = 1, …, n-1`.
pub fn descent_thresholds(ctx: &RuleContext<'_>) -> Vec<(u32, Radical)> {
    let n = ctx.n();
    (1..n)
        .map(|i| (i, ctx.root.scale(&Rational::new(i, n)).expect("positive").pow(i)))
        .collect()
}

/// If `ε < (L^n)^(1/n)/n` then `ε = min ε(B)` over catalogued `B` of dimension `i` with `(L|_B)^i < r_i`.
///
/// Needs attestations covering every `(i, r_i)`. Without the hypothesis, the same minimum still gives
/// the lower bound `min{(L^n)^(1/n)/n, min lo_B}`.
pub fn rule_subvariety_descent(ctx: &RuleContext<'_>, k: &Knowledge) -> Vec<Firing> {
    let n = ctx.n();
    if n < 2 {
        return Vec::new();
    }
    let threshold = ctx.nakamaye_threshold();
    let hyp = k.hi_vs(&threshold).filter(|c| c.is_less());
    let thresholds = descent_thresholds(ctx);

    let missing: Vec<u32> =
        thresholds.iter().filter(|(i, r)| !ctx.spec.attestation_covers(*i, r)).map(|(i, _)| *i).collect();
    if !missing.is_empty() {
        if hyp.is_none() {
            return Vec::new();
        }
        let mut app = RuleApplication::new(RuleId::SubvarietyDescent, citation::DESCENT)
            .premise(format!("hi = {} < (L^n)^(1/n)/n = {threshold}", k.hi.as_ref().expect("hi known")));
        for (i, r) in &thresholds {
            app = app.premise(format!("r_{i} = {r}"));
        }
        let effects: Vec<Effect> = missing
            .iter()
            .map(|i| Effect::Blocked(format!("descent blocked: catalog incomplete for dimension {i}")))
            .collect();
        let list = missing.iter().map(u32::to_string).collect::<Vec<_>>().join(", ");
        let app = app.effect(format!("blocked: no attestation covers dimension(s) {list}"));
        return vec![Firing::new(RuleId::SubvarietyDescent, app, effects)];
    }

    let mut app = RuleApplication::new(RuleId::SubvarietyDescent, citation::DESCENT);
    for (i, r) in &thresholds {
        app = app.premise(format!("r_{i} = {r}, attested for dimension {i}"));
    }
    let mut children = Vec::new();
    let mut lo_min: Option<Radical> = None;
    let mut hi_min: Option<Radical> = None;
    for (i, r) in &thresholds {
        for b in ctx.spec.subvarieties_of_dim(*i) {
            let d = Radical::from_int(b.degree).expect("positive");
            if d >= *r {
                continue;
            }
            let child = ctx.evaluate(b);
            app = app.premise(format!("{} (dimension {i}): (L|_B)^{i} = {} < r_{i}", b.id, b.degree));
            let Some((lo, hi)) = child_interval(&child) else {
                let msg = format!("catalogued subvariety {} is inconsistent", child.id);
                return vec![Firing::new(RuleId::SubvarietyDescent, app.effect(msg.clone()), vec![Effect::Inconsistent(msg)])
                    .with_child(child.proof)];
            };
            lo_min = Some(lo_min.map_or(lo.clone(), |m| m.min(lo)));
            hi_min = Some(hi_min.map_or(hi.clone(), |m| m.min(hi)));
            children.push(child.proof);
        }
    }

    let effects = match (&hyp, lo_min, hi_min) {
        (Some(c), None, _) => {
            let app = app.witness(c);
            let msg = "descent: hi < (L^n)^(1/n)/n but no catalogued subvariety lies below its threshold".to_string();
            return vec![Firing::new(RuleId::SubvarietyDescent, app.effect(msg.clone()), vec![Effect::Inconsistent(msg)])];
        }
        (Some(c), Some(lo), Some(hi)) => {
            app = app.witness(c).effect(format!("ε = min ε(B) ∈ [{lo}, {hi}]"));
            vec![Effect::RaiseLo(lo), Effect::LowerHi(hi)]
        }
        (None, None, _) => {
            app = app.effect(format!("no subvariety below threshold, so lo ≥ (L^n)^(1/n)/n = {threshold}"));
            vec![Effect::RaiseLo(threshold)]
        }
        (None, Some(lo), _) => {
            let bound = lo.min(threshold.clone());
            app = app.effect(format!("lo ≥ min{{(L^n)^(1/n)/n, min lo_B}} = {bound}"));
            vec![Effect::RaiseLo(bound)]
        }
        (Some(_), Some(_), None) => unreachable!(),
    };
    let mut f = Firing::new(RuleId::SubvarietyDescent, app, effects);
    f.children = children;
    vec![f]
}
