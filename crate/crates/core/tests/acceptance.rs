//! One line per acceptance criterion; exits non-zero if any fails.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::time::Instant;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use seshadri::engine::Submaximality;
use seshadri::model::DiagnosticKind;
use seshadri::oracle::{exhaustive_min_check, exhaustive_min_check_with, generate, permuted_evaluate, random_pair};
use seshadri::rules::rule_nef_threshold;
use seshadri::{evaluate, validate, AVSpec, CurveCert, EvalError, PpavType, Radical, Rational, Status};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn exact(v: Rational) -> Status {
    Status::Exact(v)
}

fn jacobian() -> AVSpec {
    AVSpec::new("J", 2, 2).with_ppav_type(PpavType::JacobianGenus2)
}

fn criterion_1() -> Outcome {
    let t = Instant::now();
    let mut n = 0;
    for d in (18..=174).step_by(6) {
        let jac = AVSpec::new("A", 3, d).with_subvariety(jacobian());
        let prod = AVSpec::new("A", 3, d)
            .with_subvariety(AVSpec::new("E1xE2", 2, 2).with_ppav_type(PpavType::ProductOfTwoElliptic));
        let a = evaluate(&jac).map_err(|e| e.to_string())?;
        let b = evaluate(&prod).map_err(|e| e.to_string())?;
        if a.status != exact(Rational::new(4, 3)) {
            return Err(format!("L³ = {d} with Jacobian divisor gave {}", a.status));
        }
        if b.status != exact(Rational::one()) {
            return Err(format!("L³ = {d} with product divisor gave {}", b.status));
        }
        n += 1;
    }
    let elapsed = t.elapsed();
    if n != 27 {
        return Err(format!("expected 27 degrees, swept {n}"));
    }
    if elapsed.as_secs_f64() >= 1.0 {
        return Err(format!("sweep took {elapsed:?}"));
    }
    Ok(format!("27 degrees × 2 divisor types exact, {elapsed:?}"))
}

fn criterion_2() -> Outcome {
    let set: BTreeSet<Rational> = [Rational::one(), Rational::new(3, 2), Rational::new(12, 7)].into();
    for v in &set {
        let d = AVSpec::new("D", 3, 6).with_ppav_type(PpavType::KnownEpsilon(v.clone()));
        let r = evaluate(&AVSpec::new("A", 4, 72).with_subvariety(d)).map_err(|e| e.to_string())?;
        if r.status != exact(v.clone()) {
            return Err(format!("tagged {v} gave {}", r.status));
        }
    }
    let r = evaluate(&AVSpec::new("A", 4, 72).with_subvariety(AVSpec::new("D", 3, 6))).map_err(|e| e.to_string())?;
    if r.candidate_set.as_ref() != Some(&set) || r.status.exact().is_some() {
        return Err(format!("untagged gave {} with candidates {:?}", r.status, r.candidate_set));
    }
    Ok("tags 1, 3/2, 12/7 exact; untagged candidates {1, 3/2, 12/7}".into())
}

fn criterion_3() -> Outcome {
    for k in 2..=20u64 {
        let spec = AVSpec::new("A", 3, 6 * k).with_subvariety(jacobian()).with_product("J", k);
        let r = evaluate(&spec).map_err(|e| e.to_string())?;
        if r.status != exact(Rational::new(4, 3)) {
            return Err(format!("k = {k} gave {}", r.status));
        }
        let want = if k <= 10 { Submaximality::Above } else { Submaximality::Below };
        if r.submaximality != Some(want) {
            return Err(format!("k = {k}: flag {:?}, expected {want:?}", r.submaximality));
        }
    }
    Ok("k = 2..20 exact 4/3; flag above for k ≤ 10, below for k ≥ 11".into())
}

fn third_root(d: u64) -> Radical {
    Radical::root(d, 3).unwrap().scale(&Rational::new(1, 3)).unwrap()
}

fn criterion_4() -> Outcome {
    let mut pinned = 0;
    for d in (6..=60).step_by(6) {
        let t = third_root(d);
        // every ε_C = p/q ≥ 1 below (L³)^(1/3)/3, q ≤ 12
        for q in 1..=12u64 {
            for p in q..=2 * q {
                let c = Radical::from_rational(Rational::new(p, q)).unwrap();
                if c >= t {
                    continue;
                }
                let r = evaluate(&AVSpec::new("A", 3, d).with_curve(CurveCert::new(p, q))).map_err(|e| e.to_string())?;
                if r.status != exact(Rational::one()) {
                    return Err(format!("L³ = {d}, ε_C = {p}/{q} gave {}", r.status));
                }
                pinned += 1;
            }
        }
        if t > Radical::one() {
            let spec = AVSpec::new("A", 3, d).with_subvariety(AVSpec::new("E", 1, 1));
            let r = evaluate(&spec).map_err(|e| e.to_string())?;
            if r.status != exact(Rational::one()) {
                return Err(format!("L³ = {d} with elliptic subvariety gave {}", r.status));
            }
        }
    }
    let want: BTreeSet<Rational> = [Rational::one(), Rational::new(4, 3)].into();
    let mut sets = 0;
    for d in (66..=174).step_by(6) {
        let t = third_root(d);
        for q in 1..=12u64 {
            for p in q..=2 * q {
                let v = Rational::new(p, q);
                let c = Radical::from_rational(v.clone()).unwrap();
                if c >= t || v < Rational::new(4, 3) {
                    continue;
                }
                let r = evaluate(&AVSpec::new("A", 3, d).with_curve(CurveCert::new(p, q))).map_err(|e| e.to_string())?;
                if r.candidate_set.as_ref() != Some(&want) {
                    return Err(format!("L³ = {d}, ε_C = {v}: candidates {:?}, status {}", r.candidate_set, r.status));
                }
                sets += 1;
            }
        }
    }
    Ok(format!("{pinned} instances with L³ ≤ 60 exact 1; {sets} instances with 66 ≤ L³ ≤ 174 give {{1, 4/3}}"))
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for i in 0..1000 {
        let n = rng.gen_range(2..=6u32);
        let f = |k: u32| (1..=k as u64).product::<u64>();
        let d = f(n - 1) * rng.gen_range(1..=500u64);
        let big = f(n) * rng.gen_range(1..=5000u64);
        let s = rule_nef_threshold(big, n, d).map_err(|e| e.to_string())?;
        let back = &s * &Rational::from_integer(n as u64 * d);
        if !back.is_integer() || back != Rational::from_integer(big) {
            return Err(format!("case {i}: σ = {s}, σ·{n}·{d} = {back} ≠ {big}"));
        }
    }
    Ok("1000 configurations, σ·n·(L|_D)^(n-1) = L^n exactly".into())
}

/// `floor(x^(1/m))`, Newton from a floating-point estimate.
fn int_root(x: &BigUint, m: u32) -> BigUint {
    if x.is_zero() || m == 1 {
        return x.clone();
    }
    let bits = x.bits();
    let shift = bits.saturating_sub(60 * m as u64);
    let shift = shift - shift % m as u64;
    let est = (x >> shift).to_f64().unwrap().powf(1.0 / m as f64);
    let mut y = BigUint::from(est.max(1.0) as u128 + 1) << (shift / m as u64);
    // ensure the start is above the root
    while y.pow(m) <= *x {
        y <<= 1;
    }
    loop {
        let next = (&y * (m - 1) + x / y.pow(m - 1)) / m;
        if next >= y {
            return y;
        }
        y = next;
    }
}

/// `floor(value · 10^p)`.
fn scaled(r: &Radical, p: u32) -> BigUint {
    let n = r.coeff().numer().to_biguint().unwrap();
    let d = r.coeff().denom().to_biguint().unwrap();
    let m = r.index();
    int_root(&(n.pow(m) * r.radicand() * BigUint::from(10u32).pow(p * m)), m) / d
}

fn criterion_6() -> Outcome {
    const DIGITS: u32 = 50;
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let tol = BigUint::from(10u32).pow(6);
    let mut ties = 0;
    for i in 0..10_000 {
        let (a, b) = random_pair(&mut rng);
        let (x, y) = (scaled(&a, DIGITS), scaled(&b, DIGITS));
        let gap = if x > y { &x - &y } else { &y - &x };
        let exact = a.cmp(&b);
        if gap <= tol {
            ties += 1;
            continue;
        }
        if x.cmp(&y) != exact {
            return Err(format!("pair {i}: {a} vs {b}: exact {exact:?}, numeric {:?}", x.cmp(&y)));
        }
        if exact == Ordering::Equal {
            return Err(format!("pair {i}: exact equality with numeric gap {gap}"));
        }
    }
    Ok(format!("10000 pairs, 0 disagreements, {ties} ties resolved by the exact path"))
}

fn criterion_7() -> Outcome {
    let mut runs = 0;
    for seed in 0..100u64 {
        let spec = generate(1000 + seed).spec;
        let base = evaluate(&spec).map_err(|e| e.to_string())?;
        for j in 0..20u64 {
            let other = permuted_evaluate(&spec, seed * 100 + j).map_err(|e| e.to_string())?;
            let same = base.status.same_verdict(&other.status)
                && (base.status.is_inconsistent() || base.candidate_set == other.candidate_set);
            if !same {
                return Err(format!(
                    "instance seed {}, order seed {}: {} vs {}",
                    1000 + seed,
                    seed * 100 + j,
                    base.status,
                    other.status
                ));
            }
            runs += 1;
        }
    }
    Ok(format!("{runs} permuted evaluations, 0 mismatches"))
}

fn criterion_8() -> Outcome {
    let mut checked = 0;
    let mut certified = 0;
    let mut seed = 0u64;
    while checked < 100 {
        let inst = generate(seed);
        seed += 1;
        if !inst.fully_attested || inst.planted || inst.spec.dim < 2 {
            continue;
        }
        let truths = &inst.truths;
        let leaf = |b: &AVSpec| {
            let r = Radical::from_rational(truths.get(&b.id)?.clone()).ok()?;
            Some((r.clone(), r))
        };
        let c = exhaustive_min_check_with(&inst.spec, &leaf).map_err(|e| format!("seed {}: {e}", seed - 1))?;
        exhaustive_min_check(&inst.spec).map_err(|e| format!("seed {}: {e}", seed - 1))?;
        if c.hypothesis_certified {
            certified += 1;
            let lo = c.sequence.last().unwrap().1.clone();
            let truth = Radical::from_rational(truths[&inst.spec.id].clone()).unwrap();
            if c.engine != Status::Exact(truths[&inst.spec.id].clone()) || lo != truth {
                return Err(format!("seed {}: a_1 = {lo}, engine {}, truth {truth}", seed - 1, c.engine));
            }
        }
        checked += 1;
    }
    if certified == 0 {
        return Err("no instance exercised the descent".into());
    }
    Ok(format!("100 attested instances, 0 mismatches ({certified} with ε below (L^n)^(1/n)/n, all equal to a_1)"))
}

fn criterion_9() -> Outcome {
    let low = AVSpec::new("A", 2, 4).with_curve(CurveCert::new(1, 2));
    let gen = AVSpec::new("A", 3, 216).with_curve(CurveCert { generates_dim: Some(3), ..CurveCert::new(3, 2) });
    for (spec, kind, cite) in [
        (&low, DiagnosticKind::LowerBound, "ε(A,L) ≥ 1"),
        (&gen, DiagnosticKind::SubvarietyLemma, "proper abelian subvariety"),
    ] {
        let d = validate(spec);
        let hit = d.iter().any(|x| x.kind == kind && x.citation.as_deref().is_some_and(|c| c.contains(cite)));
        if !hit {
            return Err(format!("expected {kind:?} citing {cite:?}, got {d:?}"));
        }
        if !matches!(evaluate(spec), Err(EvalError::Invalid(_))) {
            return Err("evaluate accepted an invalid instance".into());
        }
    }
    Ok("ε_C < 1 and submaximal generating curve both rejected with citations".into())
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("principal threefold sweep", criterion_1),
        ("principal fourfold", criterion_2),
        ("product family", criterion_3),
        ("threefold classifier", criterion_4),
        ("nef threshold identity", criterion_5),
        ("radical comparator", criterion_6),
        ("confluence", criterion_7),
        ("descent oracle", criterion_8),
        ("consistency policing", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(msg) => println!("criterion {}: PASS  {name}: {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {msg}", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} criterion(s) failed");
        std::process::exit(1);
    }
}
