//! The rule library: one function per theorem, each mapping an instance and the
//! current knowledge about `ε(A, L)` to zero or more [`Firing`]s.
//!
//! Rules never mutate anything. They describe refinements as [`Effect`]s and the
//! engine decides whether an effect changes its state. Every rule checks its
//! hypotheses with exact radical comparisons and records the deciding integers.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::engine::{ProofTree, SeshadriResult, Status};
use crate::model::AVSpec;
use crate::radical::{Comparison, Radical};
use crate::rational::Rational;

pub mod base;
pub mod citation;
pub mod descent;
pub mod ppav;
pub mod reduction;
pub mod surface;
pub mod threefold;

pub use base::{
    rule_candidate_resolution, rule_curve_certificates, rule_lower_one, rule_rigidity_report,
    rule_subvariety_bound, rule_upper_root,
};
pub use descent::{descent_thresholds, rule_subvariety_descent};
pub use ppav::{rule_ppav_divisor, rule_ppav_tag, rule_principal_candidates, rule_product};
pub use reduction::{
    rule_containment, rule_divisor_reduction_conditional, rule_divisor_reduction_unconditional,
    rule_nef_threshold, sharp_parameter,
};
pub use surface::{rule_surface_bauer, rule_surface_pin};
pub use threefold::{rule_threefold_classifier, rule_threefold_dichotomy, rule_threefold_two_divisors};

/// Certified knowledge about `ε(A, L)`. `None` bounds mean "not yet known" (0 and ∞).
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Knowledge {
    pub lo: Option<Radical>,
    pub hi: Option<Radical>,
    pub pinned: Option<Rational>,
    /// Finite set known to contain ε.
    pub candidates: Option<BTreeSet<Rational>>,
}

impl Knowledge {
    /// Comparison `hi ? x` when `hi` is known.
    pub fn hi_vs(&self, x: &Radical) -> Option<Comparison> {
        self.hi.as_ref().map(|h| h.compare(x))
    }

    /// True iff the certified upper bound is strictly below `x`.
    pub fn hi_below(&self, x: &Radical) -> bool {
        self.hi.as_ref().is_some_and(|h| h < x)
    }

    pub fn contains(&self, x: &Radical) -> bool {
        self.lo.as_ref().is_none_or(|l| l <= x) && self.hi.as_ref().is_none_or(|h| x <= h)
    }
}

/// Stable identifiers of every rule the engine can schedule.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RuleId {
    LowerOne,
    UpperRoot,
    CurveCertificates,
    SubvarietyBound,
    PpavTag,
    PrincipalCandidates,
    Product,
    PpavDivisor,
    SurfacePin,
    DivisorReduction,
    DivisorReductionConditional,
    Containment,
    SubvarietyDescent,
    SurfaceBauer,
    ThreefoldDichotomy,
    ThreefoldClassifier,
    ThreefoldTwoDivisors,
    CandidateResolution,
    RigidityReport,
}

impl RuleId {
    /// Default priority: base bounds, certificates, structural pins,
    /// unconditional then conditional reductions, descent, classifiers.
    pub const DEFAULT_ORDER: [RuleId; 19] = [
        RuleId::LowerOne,
        RuleId::UpperRoot,
        RuleId::CurveCertificates,
        RuleId::SubvarietyBound,
        RuleId::PpavTag,
        RuleId::PrincipalCandidates,
        RuleId::Product,
        RuleId::PpavDivisor,
        RuleId::SurfacePin,
        RuleId::DivisorReduction,
        RuleId::DivisorReductionConditional,
        RuleId::Containment,
        RuleId::SubvarietyDescent,
        RuleId::SurfaceBauer,
        RuleId::ThreefoldDichotomy,
        RuleId::ThreefoldClassifier,
        RuleId::ThreefoldTwoDivisors,
        RuleId::CandidateResolution,
        RuleId::RigidityReport,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RuleId::LowerOne => "lower_one",
            RuleId::UpperRoot => "upper_root",
            RuleId::CurveCertificates => "curve_certificates",
            RuleId::SubvarietyBound => "subvariety_bound",
            RuleId::PpavTag => "ppav_tag",
            RuleId::PrincipalCandidates => "principal_candidates",
            RuleId::Product => "product",
            RuleId::PpavDivisor => "ppav_divisor",
            RuleId::SurfacePin => "surface_pin",
            RuleId::DivisorReduction => "divisor_reduction",
            RuleId::DivisorReductionConditional => "divisor_reduction_conditional",
            RuleId::Containment => "containment",
            RuleId::SubvarietyDescent => "subvariety_descent",
            RuleId::SurfaceBauer => "surface_bauer",
            RuleId::ThreefoldDichotomy => "threefold_dichotomy",
            RuleId::ThreefoldClassifier => "threefold_classifier",
            RuleId::ThreefoldTwoDivisors => "threefold_two_divisors",
            RuleId::CandidateResolution => "candidate_resolution",
            RuleId::RigidityReport => "rigidity_report",
        }
    }

    /// Rules whose firings identify `ε(A, L)` with the Seshadri constant of a subinstance.
    pub fn is_reduction(self) -> bool {
        matches!(
            self,
            RuleId::DivisorReduction
                | RuleId::DivisorReductionConditional
                | RuleId::PpavDivisor
                | RuleId::ThreefoldDichotomy
        )
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Record of one theorem applied: what was cited, which premises held, what changed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RuleApplication {
    pub rule_name: String,
    pub citation: String,
    pub premises: Vec<String>,
    pub effect: String,
    /// Integer identities deciding each radical comparison used.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<String>,
}

impl RuleApplication {
    pub fn new(rule: RuleId, citation: &str) -> Self {
        RuleApplication {
            rule_name: rule.name().to_string(),
            citation: citation.to_string(),
            premises: Vec::new(),
            effect: String::new(),
            witnesses: Vec::new(),
        }
    }

    pub fn premise(mut self, p: impl Into<String>) -> Self {
        self.premises.push(p.into());
        self
    }

    pub fn witness(mut self, c: &Comparison) -> Self {
        self.witnesses.push(c.to_string());
        self
    }

    pub fn effect(mut self, e: impl Into<String>) -> Self {
        self.effect = e.into();
        self
    }
}

/// A single refinement of the engine state.
#[derive(Clone, Debug, PartialEq)]
pub enum Effect {
    RaiseLo(Radical),
    LowerHi(Radical),
    Pin(Rational),
    /// ε lies in this finite set (intersected with any earlier set).
    Candidates(BTreeSet<Rational>),
    Fact(String),
    Blocked(String),
    Inconsistent(String),
}

/// One application of a rule: the record, its effects, and any subinstance proofs.
#[derive(Clone, Debug)]
pub struct Firing {
    pub rule: RuleId,
    pub application: RuleApplication,
    pub effects: Vec<Effect>,
    pub children: Vec<ProofTree>,
}

impl Firing {
    pub fn new(rule: RuleId, application: RuleApplication, effects: Vec<Effect>) -> Self {
        Firing { rule, application, effects, children: Vec::new() }
    }

    pub fn with_child(mut self, child: ProofTree) -> Self {
        self.children.push(child);
        self
    }
}

/// Access to recursive evaluation of catalogued subvarieties.
pub trait SubEvaluator {
    fn evaluate_child(&self, spec: &AVSpec) -> SeshadriResult;
}

/// Everything a rule may consult besides the current knowledge.
pub struct RuleContext<'a> {
    pub spec: &'a AVSpec,
    /// `(L^n)^(1/n)`.
    pub root: Radical,
    evaluator: &'a dyn SubEvaluator,
}

impl<'a> RuleContext<'a> {
    pub fn new(spec: &'a AVSpec, evaluator: &'a dyn SubEvaluator) -> Self {
        RuleContext { spec, root: spec.degree_root(), evaluator }
    }

    pub fn n(&self) -> u32 {
        self.spec.dim
    }

    /// `(L^n)^(1/n) / n`, the threshold of Nakamaye's lemma.
    pub fn nakamaye_threshold(&self) -> Radical {
        self.root.scale(&Rational::new(1, self.n() as i64)).expect("positive")
    }

    /// `a · (L^n)^(1/n) / n`.
    pub fn scaled_threshold(&self, a: &Rational) -> Radical {
        self.root.scale(&(a / &Rational::from_integer(self.n() as i64))).expect("positive")
    }

    pub fn evaluate(&self, spec: &AVSpec) -> SeshadriResult {
        self.evaluator.evaluate_child(spec)
    }
}

/// Runs rule `id` with the parameters the engine uses.
pub fn run_rule(id: RuleId, ctx: &RuleContext<'_>, k: &Knowledge) -> Vec<Firing> {
    let n = Rational::from_integer(ctx.n() as i64);
    match id {
        RuleId::LowerOne => rule_lower_one(ctx, k),
        RuleId::UpperRoot => rule_upper_root(ctx, k),
        RuleId::CurveCertificates => rule_curve_certificates(ctx, k),
        RuleId::SubvarietyBound => rule_subvariety_bound(ctx, k),
        RuleId::PpavTag => rule_ppav_tag(ctx, k),
        RuleId::PrincipalCandidates => rule_principal_candidates(ctx, k),
        RuleId::Product => rule_product(ctx, k),
        RuleId::PpavDivisor => rule_ppav_divisor(ctx, k),
        RuleId::SurfacePin => rule_surface_pin(ctx, k),
        RuleId::DivisorReduction => rule_divisor_reduction_unconditional(ctx, k),
        RuleId::DivisorReductionConditional => {
            let mut out = rule_divisor_reduction_conditional(ctx, k, &n).expect("n > 0");
            if let Some(a) = k.hi.as_ref().and_then(|hi| sharp_parameter(hi, &ctx.root, ctx.n())) {
                if a != n {
                    out.extend(rule_divisor_reduction_conditional(ctx, k, &a).expect("a > 0"));
                }
            }
            out
        }
        RuleId::Containment => rule_containment(ctx, k, &n).expect("n > 0"),
        RuleId::SubvarietyDescent => rule_subvariety_descent(ctx, k),
        RuleId::SurfaceBauer => rule_surface_bauer(ctx, k),
        RuleId::ThreefoldDichotomy => rule_threefold_dichotomy(ctx, k),
        RuleId::ThreefoldClassifier => rule_threefold_classifier(ctx, k),
        RuleId::ThreefoldTwoDivisors => rule_threefold_two_divisors(ctx, k, &Rational::from_integer(3)).expect("3 > 0"),
        RuleId::CandidateResolution => rule_candidate_resolution(ctx, k),
        RuleId::RigidityReport => rule_rigidity_report(ctx, k),
    }
}

/// Effects that transfer a subinstance's evaluation to the parent (`ε(A) = ε(B)`).
pub(crate) fn equality_effects(child: &SeshadriResult) -> Vec<Effect> {
    let mut out = Vec::new();
    match &child.status {
        Status::Exact(v) => out.push(Effect::Pin(v.clone())),
        Status::Bounds { lo, hi } => {
            out.push(Effect::RaiseLo(lo.clone()));
            out.push(Effect::LowerHi(hi.clone()));
        }
        Status::Inconsistent(d) => {
            out.push(Effect::Inconsistent(format!("subinstance {} is inconsistent: {}", child.id, d.join("; "))));
            return out;
        }
    }
    if let Some(c) = &child.candidate_set {
        out.push(Effect::Candidates(c.clone()));
    }
    out.push(Effect::Fact(format!("ε(A,L) = ε({}, L|_{})", child.id, child.id)));
    out
}

/// `(lo, hi)` of a consistent subinstance result.
pub(crate) fn child_interval(child: &SeshadriResult) -> Option<(Radical, Radical)> {
    match &child.status {
        Status::Exact(v) => {
            let r = Radical::from_rational(v.clone()).expect("positive");
            Some((r.clone(), r))
        }
        Status::Bounds { lo, hi } => Some((lo.clone(), hi.clone())),
        Status::Inconsistent(_) => None,
    }
}

pub(crate) fn rad(q: &Rational) -> Radical {
    Radical::from_rational(q.clone()).expect("positive rational")
}

pub(crate) fn status_text(child: &SeshadriResult) -> String {
    child.status.to_string()
}
