//! Independent cross-checks: fixed-point evaluation of radicals, permuted rule
//! orders, an exhaustive recomputation of the descent minimum, and a generator of
//! synthetic instances with known Seshadri constants.
//!
//! Nothing here is consulted by [`crate::engine`].

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::engine::{Engine, SeshadriResult, Status};
use crate::error::EvalError;
use crate::model::{factorial, AVSpec, CurveCert, PpavType};
use crate::radical::Radical;
use crate::rational::Rational;
use crate::rules::RuleId;

// ---------------------------------------------------------------------------
// Fixed-point evaluation

/// `floor(x^(1/m))` by integer Newton iteration.
fn iroot(x: &BigUint, m: u32) -> BigUint {
    if x.is_zero() || m == 1 {
        return x.clone();
    }
    let bits = x.bits();
    let mut y = BigUint::one() << bits.div_ceil(m as u64);
    loop {
        let ym1 = y.pow(m - 1);
        let next = (&y * BigUint::from(m - 1) + x / &ym1) / BigUint::from(m);
        if next >= y {
            break;
        }
        y = next;
    }
    while y.pow(m) > *x {
        y -= 1u32;
    }
    y
}

/// `floor(value · 10^places)`.
pub fn fixed_point(r: &Radical, places: u32) -> BigUint {
    let n = r.coeff().numer().magnitude().clone();
    let d = r.coeff().denom().magnitude().clone();
    let m = r.index();
    let x = n.pow(m) * r.radicand() * BigUint::from(10u32).pow(places * m);
    iroot(&x, m) / d
}

fn decimal_text(v: &BigUint, places: u32, shown: u32) -> String {
    let s = v.to_string();
    let p = places as usize;
    let padded = if s.len() <= p { format!("{}{}", "0".repeat(p + 1 - s.len()), s) } else { s };
    let (int, frac) = padded.split_at(padded.len() - p);
    format!("{int}.{}…", &frac[..shown.min(places) as usize])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FloatCheck {
    pub exact: Ordering,
    /// Ordering of the fixed-point values, or `None` for a tie within tolerance.
    pub numeric: Option<Ordering>,
    pub report: String,
}

impl FloatCheck {
    pub fn agrees(&self) -> bool {
        self.numeric.is_none_or(|o| o == self.exact)
    }

    pub fn is_tie(&self) -> bool {
        self.numeric.is_none()
    }
}

/// Compares `a` and `b` at `digits` decimal places against the exact comparator.
///
/// Gaps below `10^(6-digits)` are ties; the exact answer is authoritative there.
pub fn float_check(a: &Radical, b: &Radical, digits: u32) -> FloatCheck {
    let digits = digits.max(30);
    let x = fixed_point(a, digits);
    let y = fixed_point(b, digits);
    let exact = a.cmp(b);
    let gap = if x > y { &x - &y } else { &y - &x };
    let tol = BigUint::from(10u32).pow(6);
    let sym = |o: Ordering| match o {
        Ordering::Less => "<",
        Ordering::Equal => "=",
        Ordering::Greater => ">",
    };
    let (xs, ys) = (decimal_text(&x, digits, 4), decimal_text(&y, digits, 4));
    if gap <= tol {
        let report = format!("tie within tolerance — exact path authoritative: {a} {} {b}", sym(exact));
        return FloatCheck { exact, numeric: None, report };
    }
    let numeric = x.cmp(&y);
    let verdict = if numeric == exact { "agree" } else { "DISAGREE" };
    let report = format!("{verdict}: {xs} {} {ys}", sym(numeric));
    FloatCheck { exact, numeric: Some(numeric), report }
}

/// Random positive radical for comparator checks.
pub fn random_radical(rng: &mut impl Rng) -> Radical {
    let coeff = Rational::new(rng.gen_range(1..=1000i64), rng.gen_range(1..=1000i64));
    let radicand: u64 = rng.gen_range(1..=1_000_000);
    let index = rng.gen_range(1..=12u32);
    Radical::new(coeff, radicand, index).expect("positive")
}

/// Random pair, with a share of exact and near ties.
pub fn random_pair(rng: &mut impl Rng) -> (Radical, Radical) {
    let a = random_radical(rng);
    let b = match rng.gen_range(0..10) {
        0 => {
            // same value, different presentation: (c·r)^(1/m) with c = s^m
            let s = rng.gen_range(1..=9u64);
            let m = a.index();
            let inner = a.radicand() * BigUint::from(s).pow(m);
            Radical::new(a.coeff() / &Rational::from_integer(s), inner, m).expect("positive")
        }
        1 => a.scale(&Rational::new(1_000_000_001i64, 1_000_000_000i64)).expect("positive"),
        _ => random_radical(rng),
    };
    (a, b)
}

// ---------------------------------------------------------------------------
// Permuted evaluation

/// Rule order drawn from `seed`.
pub fn permuted_order(seed: u64) -> Vec<RuleId> {
    let mut order = RuleId::DEFAULT_ORDER.to_vec();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    order
}

/// Evaluates `spec` with the rule order drawn from `seed`.
pub fn permuted_evaluate(spec: &AVSpec, seed: u64) -> Result<SeshadriResult, EvalError> {
    Engine::with_order(permuted_order(seed)).evaluate(spec)
}

/// Compares the default evaluation with a permuted one: status and candidate set must match.
/// Inconsistent runs only need to agree on the verdict; the first contradiction found depends on order.
pub fn confluence_check(spec: &AVSpec, seed: u64) -> Result<(), String> {
    let base = Engine::default().evaluate(spec).map_err(|e| e.to_string())?;
    let other = permuted_evaluate(spec, seed).map_err(|e| e.to_string())?;
    let candidates_agree = base.status.is_inconsistent() || base.candidate_set == other.candidate_set;
    if base.status.same_verdict(&other.status) && candidates_agree {
        return Ok(());
    }
    Err(format!(
        "confluence failure on {} with order seed {seed}: default gives {} (candidates {:?}), permuted gives {} (candidates {:?})\n\
         default proof:\n{}\npermuted proof:\n{}",
        spec.id,
        base.status,
        base.candidate_set,
        other.status,
        other.candidate_set,
        crate::engine::explain(&base),
        crate::engine::explain(&other),
    ))
}

// ---------------------------------------------------------------------------
// Exhaustive descent minimum

/// Independent value of a subvariety, as a closed interval.
pub type Leaf<'a> = &'a dyn Fn(&AVSpec) -> Option<(Radical, Radical)>;

/// Value from structure alone: elliptic curves, principal tags, products with a known factor.
pub fn structural_value(spec: &AVSpec) -> Option<Rational> {
    if spec.dim == 1 {
        return Some(Rational::from_integer(spec.degree));
    }
    match &spec.tags.ppav_type {
        Some(PpavType::JacobianGenus2) => return Some(Rational::new(4, 3)),
        Some(PpavType::ProductOfTwoElliptic) => return Some(Rational::one()),
        Some(PpavType::KnownEpsilon(v)) => return Some(v.clone()),
        None => {}
    }
    let p = spec.tags.product_decomposition.as_ref()?;
    let b = spec.subvariety(&p.factor_id)?;
    let v = structural_value(&b.spec)?;
    Some(v.min(Rational::from_integer(p.elliptic_degree)))
}

#[derive(Clone, Debug)]
pub struct DescentCheck {
    /// `(i, a_i)` from `i = n` (the Nakamaye threshold) down to `1`, as intervals.
    pub sequence: Vec<(u32, Radical, Radical)>,
    /// Catalogued subvarieties below their threshold `r_i`.
    pub qualifying: Vec<String>,
    /// The engine's result.
    pub engine: Status,
    /// The engine certified `ε < (L^n)^(1/n)/n`.
    pub hypothesis_certified: bool,
}

impl fmt::Display for DescentCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a: Vec<String> = self.sequence.iter().map(|(i, lo, hi)| format!("a_{i} ∈ [{lo}, {hi}]")).collect();
        write!(f, "{}; qualifying {:?}; engine {}", a.join(", "), self.qualifying, self.engine)
    }
}

/// `d < r_i = (i·(L^n)^(1/n)/n)^i`, i.e. `d^n · n^(i·n) < i^(i·n) · (L^n)^i`.
fn below_r(d: u64, i: u32, n: u32, degree: u64) -> bool {
    let lhs = BigUint::from(d).pow(n) * BigUint::from(n).pow(i * n);
    let rhs = BigUint::from(i).pow(i * n) * BigUint::from(degree).pow(i);
    lhs < rhs
}

/// Recomputes `a_{n} = (L^n)^(1/n)/n`, `a_i = min{min E_{i,r_i}, a_{i+1}}` by exhaustive search
/// of the catalog, and checks the engine's answer against it.
///
/// Leaf values come from [`structural_value`], falling back to the engine's own evaluation of the leaf.
pub fn exhaustive_min_check(spec: &AVSpec) -> Result<DescentCheck, String> {
    let fallback = |b: &AVSpec| -> Option<(Radical, Radical)> {
        if let Some(v) = structural_value(b) {
            let r = Radical::from_rational(v).ok()?;
            return Some((r.clone(), r));
        }
        Engine::default().evaluate(b).ok()?.interval()
    };
    exhaustive_min_check_with(spec, &fallback)
}

/// As [`exhaustive_min_check`], with caller-supplied leaf values.
pub fn exhaustive_min_check_with(spec: &AVSpec, leaf: Leaf<'_>) -> Result<DescentCheck, String> {
    let n = spec.dim;
    if n < 2 {
        return Err("descent needs dimension at least 2".into());
    }
    for i in 1..n {
        let r = Radical::root(spec.degree, n)
            .and_then(|x| x.scale(&Rational::new(i as i64, n as i64)))
            .map(|x| x.pow(i))
            .map_err(|e| e.to_string())?;
        if !spec.attestation_covers(i, &r) {
            return Err(format!("catalog of dimension-{i} subvarieties is not attested up to {r}"));
        }
    }
    let threshold = Radical::root(spec.degree, n)
        .and_then(|r| r.scale(&Rational::new(1, n as i64)))
        .map_err(|e| e.to_string())?;
    let mut lo = threshold.clone();
    let mut hi = threshold.clone();
    let mut sequence = vec![(n, lo.clone(), hi.clone())];
    let mut qualifying = Vec::new();
    for i in (1..n).rev() {
        for sub in spec.subvarieties.iter().filter(|s| s.spec.dim == i) {
            if !below_r(sub.spec.degree, i, n, spec.degree) {
                continue;
            }
            let (l, h) = leaf(&sub.spec).ok_or_else(|| format!("no value for leaf {}", sub.spec.id))?;
            qualifying.push(sub.spec.id.clone());
            if l < lo {
                lo = l;
            }
            if h < hi {
                hi = h;
            }
        }
        sequence.push((i, lo.clone(), hi.clone()));
    }
    let result = Engine::default().evaluate(spec).map_err(|e| e.to_string())?;
    let (elo, ehi) = result.interval().ok_or_else(|| format!("engine reports {}", result.status))?;
    let hypothesis_certified = ehi < threshold;
    let check = DescentCheck { sequence, qualifying, engine: result.status.clone(), hypothesis_certified };

    if hypothesis_certified {
        // ε = a_1, which must lie below the threshold and meet the engine's interval.
        if check.qualifying.is_empty() {
            return Err(format!("engine certifies ε < (L^n)^(1/n)/n but no subvariety qualifies: {check}"));
        }
        if hi < elo || ehi < lo || lo >= threshold {
            return Err(format!("engine interval [{elo}, {ehi}] misses a_1 ∈ [{lo}, {hi}]: {check}"));
        }
        if lo == hi && elo == ehi && lo != elo {
            return Err(format!("engine value {elo} differs from a_1 = {lo}: {check}"));
        }
    } else if check.qualifying.is_empty() && elo < threshold {
        return Err(format!("no subvariety below threshold, yet engine lower bound {elo} < {threshold}: {check}"));
    }
    Ok(check)
}

// ---------------------------------------------------------------------------
// Synthetic instances

/// A simple factor of a product world: pairwise non-isogenous, so abelian subvarieties are sub-products.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factor {
    /// Elliptic curve with a polarization of degree `k`.
    Elliptic(u64),
    /// Jacobian of a genus-two curve with its theta divisor.
    Jacobian(u8),
    /// Principally polarized threefold with known Seshadri constant.
    Ppav3(Rational),
}

impl Factor {
    fn dim(&self) -> u32 {
        match self {
            Factor::Elliptic(_) => 1,
            Factor::Jacobian(_) => 2,
            Factor::Ppav3(_) => 3,
        }
    }

    /// `L^p` on the factor.
    fn degree(&self) -> u64 {
        match self {
            Factor::Elliptic(k) => *k,
            Factor::Jacobian(_) => 2,
            Factor::Ppav3(_) => 6,
        }
    }

    fn epsilon(&self) -> Rational {
        match self {
            Factor::Elliptic(k) => Rational::from_integer(*k),
            Factor::Jacobian(_) => Rational::new(4, 3),
            Factor::Ppav3(v) => v.clone(),
        }
    }

    fn name(&self) -> String {
        match self {
            Factor::Elliptic(k) => format!("E{k}"),
            Factor::Jacobian(i) => format!("J{i}"),
            Factor::Ppav3(v) => format!("P{}", v.to_string().replace('/', "_")),
        }
    }

    /// A curve through the origin computing the factor's Seshadri constant.
    fn seshadri_curve(&self) -> CurveCert {
        match self {
            Factor::Elliptic(k) => CurveCert::elliptic(*k),
            Factor::Jacobian(_) => CurveCert::new(4, 3),
            Factor::Ppav3(v) => {
                let n: u64 = v.numer().try_into().expect("small");
                let d: u64 = v.denom().try_into().expect("small");
                CurveCert::new(n, d)
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct SyntheticInstance {
    pub seed: u64,
    pub spec: AVSpec,
    /// Product factors, empty for unstructured instances.
    pub factors: Vec<Factor>,
    /// True Seshadri constant of every sub-product, keyed by id.
    pub truths: BTreeMap<String, Rational>,
    /// A curve certificate contradicting the truth was added.
    pub planted: bool,
    /// Attestations cover every dimension at every level.
    pub fully_attested: bool,
}

impl SyntheticInstance {
    pub fn truth(&self) -> Option<&Rational> {
        if self.planted {
            None
        } else {
            self.truths.get(&self.spec.id)
        }
    }
}

const MAX_DEGREE: u64 = 10_000;
/// Attestation bound used for complete catalogs; large enough to cover every threshold.
const COMPLETE_BOUND: u64 = 1_000_000_000;

fn product_degree(factors: &[&Factor]) -> u64 {
    let n: u32 = factors.iter().map(|f| f.dim()).sum();
    let denom: u64 = factors.iter().map(|f| factorial(f.dim())).product();
    factorial(n) / denom * factors.iter().map(|f| f.degree()).product::<u64>()
}

struct World<'a> {
    factors: &'a [Factor],
    attest: &'a dyn Fn(u32, u32) -> bool,
    curve_mask: u32,
    truths: BTreeMap<String, Rational>,
}

impl<'a> World<'a> {
    fn id(&self, mask: u32) -> String {
        self.members(mask).iter().map(|f| f.name()).collect::<Vec<_>>().join("x")
    }

    fn members(&self, mask: u32) -> Vec<&'a Factor> {
        self.factors.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, f)| f).collect()
    }

    fn build(&mut self, mask: u32) -> AVSpec {
        let members = self.members(mask);
        let dim: u32 = members.iter().map(|f| f.dim()).sum();
        let mut spec = AVSpec::new(self.id(mask), dim, product_degree(&members));
        let truth = members.iter().map(|f| f.epsilon()).min().expect("non-empty");
        self.truths.insert(spec.id.clone(), truth);
        for k in 1..dim {
            if (self.attest)(dim, k) {
                spec = spec.with_attestation(k, Radical::from_int(COMPLETE_BOUND).expect("positive"));
            }
        }
        if members.len() == 1 {
            match members[0] {
                Factor::Jacobian(_) => spec = spec.with_ppav_type(PpavType::JacobianGenus2),
                Factor::Ppav3(v) => spec = spec.with_ppav_type(PpavType::KnownEpsilon(v.clone())),
                Factor::Elliptic(_) => {}
            }
            return spec;
        }
        let mut sub = (mask - 1) & mask;
        let mut subs = Vec::new();
        while sub != 0 {
            subs.push(sub);
            sub = (sub - 1) & mask;
        }
        subs.sort_unstable();
        for s in subs {
            let child = self.build(s);
            spec = spec.with_subvariety(child);
        }
        // product tag through the first elliptic factor
        if let Some(pos) = self.factors.iter().enumerate().position(|(i, f)| mask & (1 << i) != 0 && matches!(f, Factor::Elliptic(_))) {
            if let Factor::Elliptic(k) = self.factors[pos] {
                spec = spec.with_product(self.id(mask & !(1 << pos)), k);
            }
        }
        for (i, f) in self.factors.iter().enumerate() {
            if mask & (1 << i) != 0 && self.curve_mask & (1 << i) != 0 {
                let mut c = f.seshadri_curve();
                c.contained_in = Some(self.id(1 << i));
                spec = spec.with_curve(c);
            }
        }
        spec
    }
}

fn random_factors(rng: &mut ChaCha8Rng) -> Vec<Factor> {
    const SHAPES: [&[u32]; 7] = [&[1, 1], &[1, 2], &[1, 3], &[2, 2], &[1, 1, 1], &[1, 1, 2], &[2]];
    loop {
        let shape = SHAPES[rng.gen_range(0..SHAPES.len())];
        let mut used = Vec::new();
        let mut jac = 0u8;
        let mut out = Vec::new();
        for &d in shape {
            out.push(match d {
                1 => {
                    let mut k = rng.gen_range(1..=40u64);
                    while used.contains(&k) {
                        k = rng.gen_range(1..=40u64);
                    }
                    used.push(k);
                    Factor::Elliptic(k)
                }
                2 => {
                    jac += 1;
                    Factor::Jacobian(jac)
                }
                _ => Factor::Ppav3(if rng.gen_bool(0.5) { Rational::new(3, 2) } else { Rational::new(12, 7) }),
            });
        }
        let refs: Vec<&Factor> = out.iter().collect();
        if product_degree(&refs) <= MAX_DEGREE {
            return out;
        }
    }
}

/// Deterministic synthetic instance for `seed`.
///
/// Most instances are products of simple factors with complete catalogs, so the true value is known.
/// About one in ten carries a planted curve certificate contradicting that value; the rest are
/// unstructured instances with harmless certificates.
pub fn generate(seed: u64) -> SyntheticInstance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if rng.gen_bool(0.15) {
        let n = rng.gen_range(1..=4u32);
        let unit = factorial(n);
        let degree = unit * rng.gen_range(1..=MAX_DEGREE / unit);
        let mut spec = AVSpec::new(format!("X{seed}"), n, degree);
        let root = spec.degree_root();
        for _ in 0..rng.gen_range(0..=2) {
            // ε_C above (L^n)^(1/n) carries no information beyond the volume bound
            let mult = if n == 1 { 1 } else { rng.gen_range(1..=5u64) };
            let floor = root.floor_scaled(&BigUint::from(mult)).to_string().parse::<u64>().expect("small");
            spec = spec.with_curve(CurveCert::new(floor + rng.gen_range(1..=10), mult));
        }
        return SyntheticInstance {
            seed,
            spec,
            factors: Vec::new(),
            truths: BTreeMap::new(),
            planted: false,
            fully_attested: false,
        };
    }
    let factors = random_factors(&mut rng);
    let fully_attested = rng.gen_bool(0.6);
    let partial: Vec<bool> = (0..16).map(|_| rng.gen_bool(0.5)).collect();
    let attest = move |dim: u32, k: u32| fully_attested || partial[(dim * 4 + k) as usize % 16];
    let curve_mask: u32 = rng.gen_range(0..(1 << factors.len()));
    let mut world = World { factors: &factors, attest: &attest, curve_mask, truths: BTreeMap::new() };
    let full = (1u32 << factors.len()) - 1;
    let mut spec = world.build(full);
    let truths = world.truths;
    let mut planted = false;
    if rng.gen_bool(0.1) && truths[&spec.id] > Rational::new(5, 4) {
        spec = spec.with_curve(CurveCert::new(5, 4));
        planted = true;
    }
    SyntheticInstance { seed, spec, factors, truths, planted, fully_attested }
}

// ---------------------------------------------------------------------------
// Self-check

#[derive(Clone, Debug, Default)]
pub struct SelfcheckReport {
    pub iterations: u64,
    pub float_pairs: u64,
    pub ties: u64,
    pub confluence_runs: u64,
    pub descent_checks: u64,
    pub descent_hypothesis_certified: u64,
    pub soundness_checks: u64,
    pub planted: u64,
    pub planted_detected: u64,
    pub failures: Vec<String>,
}

impl SelfcheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn merge(&mut self, o: SelfcheckReport) {
        self.iterations += o.iterations;
        self.float_pairs += o.float_pairs;
        self.ties += o.ties;
        self.confluence_runs += o.confluence_runs;
        self.descent_checks += o.descent_checks;
        self.descent_hypothesis_certified += o.descent_hypothesis_certified;
        self.soundness_checks += o.soundness_checks;
        self.planted += o.planted;
        self.planted_detected += o.planted_detected;
        self.failures.extend(o.failures);
    }
}

impl fmt::Display for SelfcheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "iterations:            {}", self.iterations)?;
        writeln!(f, "radical pairs checked: {} ({} ties resolved exactly)", self.float_pairs, self.ties)?;
        writeln!(f, "permuted evaluations:  {}", self.confluence_runs)?;
        writeln!(
            f,
            "descent recomputations: {} ({} with ε below (L^n)^(1/n)/n)",
            self.descent_checks, self.descent_hypothesis_certified
        )?;
        writeln!(f, "known-value checks:    {}", self.soundness_checks)?;
        writeln!(f, "planted inconsistencies: {} ({} detected)", self.planted, self.planted_detected)?;
        if self.failures.is_empty() {
            write!(f, "PASS")
        } else {
            writeln!(f, "FAIL ({} failure(s))", self.failures.len())?;
            for x in &self.failures {
                writeln!(f, "  {x}")?;
            }
            Ok(())
        }
    }
}

/// Seed of iteration `i` in a run started with `seed`.
pub fn iteration_seed(seed: u64, i: u64) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(i)
}

/// Runs every oracle on one synthetic instance and one radical pair.
pub fn selfcheck_one(seed: u64, orders: u64, report: &mut SelfcheckReport) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5EED);
    let (a, b) = random_pair(&mut rng);
    let fc = float_check(&a, &b, 50);
    report.float_pairs += 1;
    if fc.is_tie() {
        report.ties += 1;
    }
    if !fc.agrees() {
        report.failures.push(format!("seed {seed}: comparator disagreement on {a} vs {b}: {}", fc.report));
    }

    let inst = generate(seed);
    let result = match Engine::default().evaluate(&inst.spec) {
        Ok(r) => r,
        Err(e) => {
            report.failures.push(format!("seed {seed}: generated instance rejected: {e}"));
            return;
        }
    };
    for j in 0..orders {
        report.confluence_runs += 1;
        if let Err(e) = confluence_check(&inst.spec, seed.wrapping_add(j)) {
            report.failures.push(format!("seed {seed}: {e}"));
        }
    }
    if inst.planted {
        report.planted += 1;
        let again = Engine::default().evaluate(&inst.spec).ok().map(|r| r.status);
        if again.as_ref() != Some(&result.status) {
            report.failures.push(format!("seed {seed}: evaluation is not deterministic"));
        }
        if result.status.is_inconsistent() {
            report.planted_detected += 1;
        }
        return;
    }
    if let Some(t) = inst.truth() {
        report.soundness_checks += 1;
        let ok = result.interval().is_some_and(|(lo, hi)| {
            let t = Radical::from_rational(t.clone()).expect("positive");
            lo <= t && t <= hi
        }) && result.candidate_set.as_ref().is_none_or(|c| c.contains(t));
        if !ok {
            report.failures.push(format!("seed {seed}: true value {t} not certified by engine result {}", result.status));
        }
    }
    if inst.fully_attested && inst.spec.dim >= 2 {
        let truths = &inst.truths;
        let leaf = |b: &AVSpec| -> Option<(Radical, Radical)> {
            let r = Radical::from_rational(truths.get(&b.id)?.clone()).ok()?;
            Some((r.clone(), r))
        };
        report.descent_checks += 1;
        match exhaustive_min_check_with(&inst.spec, &leaf) {
            Ok(c) => report.descent_hypothesis_certified += u64::from(c.hypothesis_certified),
            Err(e) => report.failures.push(format!("seed {seed}: descent mismatch: {e}")),
        }
    }
}

/// Runs `iterations` oracle rounds from `seed`, in parallel; the report does not depend on scheduling.
pub fn selfcheck(iterations: u64, seed: u64) -> SelfcheckReport {
    let parts: Vec<SelfcheckReport> = (0..iterations)
        .into_par_iter()
        .map(|i| {
            let mut r = SelfcheckReport { iterations: 1, ..Default::default() };
            selfcheck_one(iteration_seed(seed, i), 3, &mut r);
            r
        })
        .collect();
    let mut report = SelfcheckReport::default();
    for p in parts {
        report.merge(p);
    }
    report
}
