//! Fixpoint driver: runs the rule library over an instance and its catalog,
//! and assembles the proof tree.

use std::cell::RefCell;
use std::collections::{BTreeSet, HashMap};
use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::error::EvalError;
use crate::model::{validate, AVSpec};
use crate::radical::Radical;
use crate::rational::Rational;
use crate::rules::{rad, run_rule, Effect, Firing, Knowledge, RuleApplication, RuleContext, RuleId, SubEvaluator};

/// Final verdict on `ε(A, L)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Exact(Rational),
    Bounds { lo: Radical, hi: Radical },
    Inconsistent(Vec<String>),
}

impl Status {
    pub fn kind(&self) -> &'static str {
        match self {
            Status::Exact(_) => "exact",
            Status::Bounds { .. } => "bounds",
            Status::Inconsistent(_) => "inconsistent",
        }
    }

    pub fn exact(&self) -> Option<&Rational> {
        match self {
            Status::Exact(v) => Some(v),
            _ => None,
        }
    }

    pub fn is_inconsistent(&self) -> bool {
        matches!(self, Status::Inconsistent(_))
    }

    /// Same verdict, ignoring the wording of inconsistency diagnostics.
    pub fn same_verdict(&self, other: &Status) -> bool {
        match (self, other) {
            (Status::Inconsistent(_), Status::Inconsistent(_)) => true,
            _ => self == other,
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Exact(v) => write!(f, "{v}"),
            Status::Bounds { lo, hi } => write!(f, "[{lo}, {hi}]"),
            Status::Inconsistent(d) => write!(f, "inconsistent ({})", d.join("; ")),
        }
    }
}

/// Position of `ε` relative to `(L^n)^(1/n)/n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Submaximality {
    Below,
    Equal,
    Above,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InstanceSummary {
    pub id: String,
    pub dim: u32,
    pub degree: u64,
    pub status: String,
}

/// A rule application with the subinstance evaluations it relied on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProofTree {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instance: Option<InstanceSummary>,
    pub node: RuleApplication,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub children: Vec<ProofTree>,
}

impl ProofTree {
    pub fn size(&self) -> usize {
        1 + self.children.iter().map(ProofTree::size).sum::<usize>()
    }

    /// All nodes, depth first.
    pub fn nodes(&self) -> Vec<&ProofTree> {
        let mut out = vec![self];
        for c in &self.children {
            out.extend(c.nodes());
        }
        out
    }

    /// Subinstances reached through reduction rules, as `(rule, child instance id)`.
    pub fn reduction_edges(&self) -> Vec<(String, String)> {
        let mut out = Vec::new();
        for n in self.nodes() {
            let reduction = RuleId::DEFAULT_ORDER.iter().any(|r| r.is_reduction() && r.name() == n.node.rule_name);
            if reduction {
                for c in &n.children {
                    if let Some(i) = &c.instance {
                        out.push((n.node.rule_name.clone(), i.id.clone()));
                    }
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct SeshadriResult {
    pub id: String,
    pub dim: u32,
    pub degree: u64,
    pub status: Status,
    pub proof: ProofTree,
    pub candidate_set: Option<BTreeSet<Rational>>,
    pub blocked: Vec<String>,
    pub facts: Vec<String>,
    /// State-changing rule firings at this level (children not included).
    pub firings: usize,
    pub submaximality: Option<Submaximality>,
}

impl SeshadriResult {
    /// `(lo, hi)` of a consistent result.
    pub fn interval(&self) -> Option<(Radical, Radical)> {
        match &self.status {
            Status::Exact(v) => Some((rad(v), rad(v))),
            Status::Bounds { lo, hi } => Some((lo.clone(), hi.clone())),
            Status::Inconsistent(_) => None,
        }
    }
}

/// Upper limit on state-changing firings for one instance level.
pub fn firing_budget(spec: &AVSpec) -> usize {
    RuleId::DEFAULT_ORDER.len() * spec.dim.max(1) as usize * (spec.subvarieties.len() + spec.curves.len() + 1)
}

#[derive(Default)]
struct State {
    k: Knowledge,
    facts: Vec<String>,
    blocked: Vec<String>,
    inconsistencies: Vec<String>,
    steps: Vec<Firing>,
}

impl State {
    fn apply(&mut self, effect: &Effect, rule: RuleId) -> bool {
        let k = &mut self.k;
        let changed = match effect {
            Effect::RaiseLo(x) => {
                if k.lo.as_ref().is_none_or(|l| x > l) {
                    k.lo = Some(x.clone());
                    true
                } else {
                    false
                }
            }
            Effect::LowerHi(x) => {
                if k.hi.as_ref().is_none_or(|h| x < h) {
                    k.hi = Some(x.clone());
                    true
                } else {
                    false
                }
            }
            Effect::Pin(v) => match &k.pinned {
                Some(p) if p == v => false,
                Some(p) => {
                    self.inconsistencies.push(format!("{rule}: ε = {v} contradicts ε = {p}"));
                    return true;
                }
                None => {
                    let r = rad(v);
                    if !k.contains(&r) {
                        let lo = k.lo.as_ref().map_or("?".into(), |x| x.to_string());
                        let hi = k.hi.as_ref().map_or("?".into(), |x| x.to_string());
                        self.inconsistencies.push(format!("{rule}: ε = {v} lies outside [{lo}, {hi}]"));
                        return true;
                    }
                    k.pinned = Some(v.clone());
                    k.lo = Some(r.clone());
                    k.hi = Some(r);
                    true
                }
            },
            Effect::Candidates(set) => {
                let next: BTreeSet<Rational> = match &k.candidates {
                    Some(old) => old.intersection(set).cloned().collect(),
                    None => set.clone(),
                };
                if k.candidates.as_ref() == Some(&next) {
                    false
                } else {
                    if next.is_empty() {
                        self.inconsistencies.push(format!("{rule}: candidate sets have empty intersection"));
                    }
                    k.candidates = Some(next);
                    true
                }
            }
            Effect::Fact(s) => push_new(&mut self.facts, s),
            Effect::Blocked(s) => push_new(&mut self.blocked, s),
            Effect::Inconsistent(s) => {
                self.inconsistencies.push(format!("{rule}: {s}"));
                true
            }
        };
        if let (Some(lo), Some(hi)) = (&k.lo, &k.hi) {
            if lo > hi {
                let c = lo.compare(hi);
                self.inconsistencies.push(format!("{rule}: lower bound {lo} exceeds upper bound {hi} ({})", c.witness()));
            } else if k.pinned.is_none() && lo == hi {
                if let Some(v) = lo.as_rational() {
                    k.pinned = Some(v.clone());
                }
            }
        }
        changed
    }
}

fn push_new(list: &mut Vec<String>, s: &str) -> bool {
    if list.iter().any(|x| x == s) {
        false
    } else {
        list.push(s.to_string());
        true
    }
}

/// Evaluates instances by running rules to a fixpoint.
///
/// Subinstance results are memoized for the duration of one top-level evaluation.
pub struct Engine {
    order: Vec<RuleId>,
    cache: RefCell<HashMap<usize, SeshadriResult>>,
}

impl Default for Engine {
    fn default() -> Self {
        Engine::with_order(RuleId::DEFAULT_ORDER.to_vec())
    }
}

impl Engine {
    /// Engine scanning rules in `order`. Rules missing from `order` never fire.
    pub fn with_order(order: Vec<RuleId>) -> Self {
        Engine { order, cache: RefCell::new(HashMap::new()) }
    }

    pub fn order(&self) -> &[RuleId] {
        &self.order
    }

    /// Validates `spec`, then evaluates it.
    pub fn evaluate(&self, spec: &AVSpec) -> Result<SeshadriResult, EvalError> {
        let diags = validate(spec);
        if !diags.is_empty() {
            return Err(EvalError::Invalid(diags));
        }
        self.cache.borrow_mut().clear();
        let out = self.run(spec);
        self.cache.borrow_mut().clear();
        Ok(out)
    }

    fn run(&self, spec: &AVSpec) -> SeshadriResult {
        let ctx = RuleContext::new(spec, self);
        let mut st = State::default();
        let budget = firing_budget(spec);
        let mut applied = 0usize;
        'outer: while st.inconsistencies.is_empty() {
            for &id in &self.order {
                let mut changed = false;
                for f in run_rule(id, &ctx, &st.k) {
                    let mut this = false;
                    for e in &f.effects {
                        this |= st.apply(e, id);
                        if !st.inconsistencies.is_empty() {
                            st.steps.push(f);
                            break 'outer;
                        }
                    }
                    if this {
                        st.steps.push(f);
                        changed = true;
                        applied += 1;
                    }
                }
                if changed {
                    if applied >= budget {
                        st.blocked.push(format!("firing budget of {budget} exhausted"));
                        break 'outer;
                    }
                    continue 'outer;
                }
            }
            break;
        }
        self.finish(spec, &ctx, st, applied)
    }

    fn finish(&self, spec: &AVSpec, ctx: &RuleContext<'_>, mut st: State, applied: usize) -> SeshadriResult {
        if st.inconsistencies.is_empty() {
            if let (Some(v), Some(c)) = (&st.k.pinned, &st.k.candidates) {
                if !c.contains(v) {
                    st.inconsistencies.push(format!("ε = {v} is not in the candidate set"));
                }
            }
        }
        let status = if !st.inconsistencies.is_empty() {
            Status::Inconsistent(st.inconsistencies.clone())
        } else if let Some(v) = &st.k.pinned {
            Status::Exact(v.clone())
        } else {
            let lo = st.k.lo.clone().unwrap_or_else(Radical::one);
            let hi = st.k.hi.clone().unwrap_or_else(|| ctx.root.clone());
            Status::Bounds { lo, hi }
        };
        let submaximality = if spec.dim == 0 {
            None
        } else {
            let t = ctx.nakamaye_threshold();
            match &status {
                Status::Exact(v) => Some(match rad(v).cmp(&t) {
                    std::cmp::Ordering::Less => Submaximality::Below,
                    std::cmp::Ordering::Equal => Submaximality::Equal,
                    std::cmp::Ordering::Greater => Submaximality::Above,
                }),
                Status::Bounds { lo, hi } => {
                    if *hi < t {
                        Some(Submaximality::Below)
                    } else if *lo > t {
                        Some(Submaximality::Above)
                    } else {
                        None
                    }
                }
                Status::Inconsistent(_) => None,
            }
        };
        let summary = InstanceSummary {
            id: spec.id.clone(),
            dim: spec.dim,
            degree: spec.degree,
            status: status.to_string(),
        };
        let mut steps: Vec<ProofTree> = st
            .steps
            .into_iter()
            .map(|f| ProofTree { instance: None, node: f.application, children: f.children })
            .collect();
        let proof = if steps.len() == 1 {
            let mut only = steps.remove(0);
            only.instance = Some(summary);
            only
        } else {
            let node = RuleApplication {
                rule_name: "evaluate".into(),
                citation: "fixpoint of the rule library".into(),
                premises: vec![format!("{}: dimension {}, L^{} = {}", spec.id, spec.dim, spec.dim, spec.degree)],
                effect: format!("ε({},L) = {status}", spec.id),
                witnesses: Vec::new(),
            };
            ProofTree { instance: Some(summary), node, children: steps }
        };
        SeshadriResult {
            id: spec.id.clone(),
            dim: spec.dim,
            degree: spec.degree,
            status,
            proof,
            candidate_set: st.k.candidates,
            blocked: st.blocked,
            facts: st.facts,
            firings: applied,
            submaximality,
        }
    }
}

impl SubEvaluator for Engine {
    fn evaluate_child(&self, spec: &AVSpec) -> SeshadriResult {
        let key = spec as *const AVSpec as usize;
        if let Some(r) = self.cache.borrow().get(&key) {
            return r.clone();
        }
        let r = self.run(spec);
        self.cache.borrow_mut().insert(key, r.clone());
        r
    }
}

/// Evaluates with the default rule order.
pub fn evaluate(spec: &AVSpec) -> Result<SeshadriResult, EvalError> {
    Engine::default().evaluate(spec)
}

/// Evaluates with a custom rule order.
pub fn evaluate_with_order(spec: &AVSpec, order: Vec<RuleId>) -> Result<SeshadriResult, EvalError> {
    Engine::with_order(order).evaluate(spec)
}

/// Human-readable report of a result and its proof tree.
pub fn explain(result: &SeshadriResult) -> String {
    let mut s = summary(result);
    let _ = writeln!(s, "proof:");
    render(&result.proof, 1, &mut s);
    s
}

/// Status, candidates, blocked notes and facts, without the proof.
pub fn summary(result: &SeshadriResult) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "instance {} (dimension {}, L^{} = {})", result.id, result.dim, result.dim, result.degree);
    match &result.status {
        Status::Exact(v) => {
            let _ = writeln!(s, "ε = {v} (exact)");
        }
        Status::Bounds { lo, hi } => {
            let _ = writeln!(s, "ε ∈ [{lo}, {hi}] ≈ [{}, {}]", lo.to_decimal(6), hi.to_decimal(6));
        }
        Status::Inconsistent(d) => {
            let _ = writeln!(s, "INCONSISTENT input");
            for x in d {
                let _ = writeln!(s, "  ! {x}");
            }
        }
    }
    if let Some(c) = &result.candidate_set {
        let list = c.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ");
        let _ = writeln!(s, "candidate set: {{{list}}}");
    }
    if let Some(p) = result.submaximality {
        let word = match p {
            Submaximality::Below => "below",
            Submaximality::Equal => "equal to",
            Submaximality::Above => "above",
        };
        let _ = writeln!(s, "ε is {word} (L^n)^(1/n)/n");
    }
    if !result.blocked.is_empty() {
        let _ = writeln!(s, "blocked:");
        for b in &result.blocked {
            let _ = writeln!(s, "  - {b}");
        }
    }
    if !result.facts.is_empty() {
        let _ = writeln!(s, "facts:");
        for f in &result.facts {
            let _ = writeln!(s, "  - {f}");
        }
    }
    s
}

fn render(t: &ProofTree, depth: usize, s: &mut String) {
    let pad = "  ".repeat(depth);
    if let Some(i) = &t.instance {
        let _ = writeln!(s, "{pad}▸ {} (dimension {}, degree {}): {}", i.id, i.dim, i.degree, i.status);
    }
    let _ = writeln!(s, "{pad}[{}] {}", t.node.rule_name, t.node.citation);
    for p in &t.node.premises {
        let _ = writeln!(s, "{pad}    premise: {p}");
    }
    for w in &t.node.witnesses {
        let _ = writeln!(s, "{pad}    witness: {w}");
    }
    if !t.node.effect.is_empty() {
        let _ = writeln!(s, "{pad}    ⇒ {}", t.node.effect);
    }
    for c in &t.children {
        render(c, depth + 1, s);
    }
}
