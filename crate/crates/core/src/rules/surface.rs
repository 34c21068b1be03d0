//! Rules specific to abelian surfaces.

use std::collections::BTreeSet;

use crate::radical::Radical;
use crate::rational::Rational;

use super::{citation, rad, Effect, Firing, Knowledge, RuleApplication, RuleContext, RuleId};

/// An elliptic curve of degree `e < (L²)^(1/2)/2` is the unique submaximal curve, so `ε = e`.
pub fn rule_surface_pin(ctx: &RuleContext<'_>, _k: &Knowledge) -> Vec<Firing> {
    if ctx.n() != 2 {
        return Vec::new();
    }
    let t = ctx.nakamaye_threshold();
    let mut app = RuleApplication::new(RuleId::SurfacePin, citation::SURFACE_UNIQUE)
        .premise(format!("(L²)^(1/2)/2 = {t}"));
    let mut values = BTreeSet::new();
    let mut problems = Vec::new();
    for e in ctx.spec.subvarieties_of_dim(1) {
        let c = Radical::from_int(e.degree).expect("positive").compare(&t);
        if c.is_less() {
            app = app.premise(format!("elliptic curve {} of degree {}", e.id, e.degree)).witness(&c);
            values.insert(Rational::from_integer(e.degree));
        }
    }
    for (i, cert) in ctx.spec.curves.iter().enumerate() {
        let c = rad(&cert.epsilon()).compare(&t);
        if !c.is_less() {
            continue;
        }
        app = app.premise(format!("curve #{i}: L·C = {}, mult₀C = {}", cert.l_degree, cert.mult)).witness(&c);
        if cert.mult != 1 {
            problems.push(format!("curve #{i} has ε_C = {} < (L²)^(1/2)/2 but mult₀C = {} ≠ 1", cert.epsilon(), cert.mult));
        } else {
            values.insert(Rational::from_integer(cert.l_degree));
        }
    }
    if values.len() > 1 {
        let list = values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ");
        problems.push(format!("distinct elliptic degrees {{{list}}} below (L²)^(1/2)/2 violate uniqueness"));
    }
    if !problems.is_empty() {
        let app = app.effect(problems.join("; "));
        return vec![Firing::new(RuleId::SurfacePin, app, problems.into_iter().map(Effect::Inconsistent).collect())];
    }
    let Some(v) = values.into_iter().next() else {
        return Vec::new();
    };
    let app = app.effect(format!("pinned ε = {v}"));
    vec![Firing::new(RuleId::SurfacePin, app, vec![Effect::Pin(v)])]
}

/// `√(14·L²)/4`.
pub fn bauer_constant(degree: u64) -> Radical {
    Radical::root(14 * degree, 2).expect("positive").scale(&Rational::new(1, 4)).expect("positive")
}

/// `ε ≥ min{ε₀, √(14·L²)/4}` once the elliptic catalog is attested.
pub fn rule_surface_bauer(ctx: &RuleContext<'_>, _k: &Knowledge) -> Vec<Firing> {
    if ctx.n() != 2 {
        return Vec::new();
    }
    let b = bauer_constant(ctx.spec.degree);
    let e_min = ctx.spec.subvarieties_of_dim(1).map(|e| e.degree).min();
    let app = RuleApplication::new(RuleId::SurfaceBauer, citation::BAUER).premise(format!("√(14·L²)/4 = {b}"));
    let Some(r) = ctx.spec.attested_bound(1) else {
        let fact = match e_min {
            Some(e) => format!("Bauer bound conditional: ε₀ ≤ {e} is not attested complete, bound not applied"),
            None => "Bauer bound conditional: no attested elliptic catalog, bound not applied".to_string(),
        };
        return vec![Firing::new(RuleId::SurfaceBauer, app.effect(fact.clone()), vec![Effect::Fact(fact)])];
    };
    let mut app = app.premise(format!("every elliptic curve of degree < {r} is catalogued"));
    let eps0 = match e_min {
        Some(e) => {
            let e = Radical::from_int(e).expect("positive");
            app = app.premise(format!("minimal catalogued elliptic degree {e}"));
            e.min(r.clone())
        }
        None => r.clone(),
    };
    let c = eps0.compare(&b);
    let bound = eps0.min(b);
    let app = app.witness(&c).effect(format!("lo ≥ {bound}"));
    vec![Firing::new(RuleId::SurfaceBauer, app, vec![Effect::RaiseLo(bound)])]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{AVSpec, CurveCert};
    use crate::rules::testing::{ctx_for, NoChildren};

    #[test]
    fn pin_below_threshold() {
        let spec = AVSpec::new("S", 2, 20).with_subvariety(AVSpec::new("E", 1, 2));
        let f = rule_surface_pin(&ctx_for(&spec, &NoChildren), &Knowledge::default());
        assert_eq!(f[0].effects, vec![Effect::Pin(Rational::from_integer(2))]);
        assert!(f[0].application.witnesses[0].contains("4 < 5"));
    }

    #[test]
    fn boundary_does_not_pin() {
        let spec = AVSpec::new("S", 2, 4).with_curve(CurveCert::elliptic(1));
        assert!(rule_surface_pin(&ctx_for(&spec, &NoChildren), &Knowledge::default()).is_empty());
    }

    #[test]
    fn two_degrees_inconsistent() {
        let spec = AVSpec::new("S", 2, 40)
            .with_subvariety(AVSpec::new("E1", 1, 1))
            .with_subvariety(AVSpec::new("E2", 1, 2));
        let f = rule_surface_pin(&ctx_for(&spec, &NoChildren), &Knowledge::default());
        assert!(matches!(f[0].effects[0], Effect::Inconsistent(_)));
    }

    #[test]
    fn bauer() {
        let spec = AVSpec::new("S", 2, 2)
            .with_subvariety(AVSpec::new("E", 1, 1))
            .with_attestation(1, Radical::from_int(4).unwrap());
        let f = rule_surface_bauer(&ctx_for(&spec, &NoChildren), &Knowledge::default());
        assert_eq!(f[0].effects, vec![Effect::RaiseLo(Radical::one())]);

        let spec = AVSpec::new("S", 2, 2).with_attestation(1, Radical::from_int(2).unwrap());
        let f = rule_surface_bauer(&ctx_for(&spec, &NoChildren), &Knowledge::default());
        let sqrt7_2 = Radical::root(7u32, 2).unwrap().scale(&Rational::new(1, 2)).unwrap();
        assert_eq!(f[0].effects, vec![Effect::RaiseLo(sqrt7_2)]);

        let spec = AVSpec::new("S", 2, 2);
        let f = rule_surface_bauer(&ctx_for(&spec, &NoChildren), &Knowledge::default());
        assert!(matches!(f[0].effects[0], Effect::Fact(_)));
    }
}
