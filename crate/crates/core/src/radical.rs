//! Exact positive numbers of the form `q · r^(1/m)`.
//!
//! Every inequality the rule library needs reduces to comparing two such
//! numbers. Comparison raises both sides to `lcm(m₁, m₂)` and compares two
//! integers, so no decision ever touches floating point.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::DomainError;
use crate::rational::Rational;

/// Largest trial divisor used when extracting perfect powers from a radicand.
///
/// Normal forms are unique for radicands below `TRIAL_LIMIT^(m+1)`; beyond
/// that the value is still exact and comparisons stay correct, only the
/// structural fast path may miss an equality.
const TRIAL_LIMIT: u64 = 1 << 20;

/// A positive real `coeff · radicand^(1/index)` in normal form.
///
/// Normal form: `radicand` has no nontrivial `index`-th power divisor and the
/// index is minimal, i.e. the radicand is not a perfect `p`-th power for any
/// prime `p | index`. Rational values have `radicand = 1, index = 1`.
#[derive(Clone, Debug)]
pub struct Radical {
    coeff: Rational,
    radicand: BigUint,
    index: u32,
}

impl Radical {
    pub fn new(coeff: Rational, radicand: impl Into<BigUint>, index: u32) -> Result<Self, DomainError> {
        let radicand = radicand.into();
        if !coeff.is_positive() {
            return Err(DomainError::NonPositiveCoefficient(coeff.to_string()));
        }
        if radicand.is_zero() {
            return Err(DomainError::NonPositiveRadicand);
        }
        if index == 0 {
            return Err(DomainError::ZeroIndex);
        }
        Ok(normalize(coeff, radicand, index))
    }

    pub fn one() -> Self {
        Radical { coeff: Rational::one(), radicand: BigUint::one(), index: 1 }
    }

    pub fn from_rational(q: Rational) -> Result<Self, DomainError> {
        Radical::new(q, 1u32, 1)
    }

    pub fn from_int(n: u64) -> Result<Self, DomainError> {
        Radical::from_rational(Rational::from_integer(n))
    }

    /// `radicand^(1/index)`.
    pub fn root(radicand: impl Into<BigUint>, index: u32) -> Result<Self, DomainError> {
        Radical::new(Rational::one(), radicand, index)
    }

    /// `q^(1/index)` for a positive rational `q = p/s`, written as `(p·s^(index-1))^(1/index) / s`.
    pub fn root_of_rational(q: &Rational, index: u32) -> Result<Self, DomainError> {
        if !q.is_positive() {
            return Err(DomainError::NonPositiveRadicand);
        }
        if index == 0 {
            return Err(DomainError::ZeroIndex);
        }
        let p = positive_part(q.numer());
        let s = positive_part(q.denom());
        let radicand = p * s.pow(index - 1);
        Radical::new(Rational::new(BigInt::one(), BigInt::from(s)), radicand, index)
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn radicand(&self) -> &BigUint {
        &self.radicand
    }

    pub fn index(&self) -> u32 {
        self.index
    }

    pub fn is_rational(&self) -> bool {
        self.index == 1
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.coeff)
    }

    pub fn scale(&self, q: &Rational) -> Result<Self, DomainError> {
        if !q.is_positive() {
            return Err(DomainError::NonPositiveScale(q.to_string()));
        }
        Ok(Radical { coeff: &self.coeff * q, radicand: self.radicand.clone(), index: self.index })
    }

    pub fn mul(&self, other: &Radical) -> Radical {
        let l = self.index.lcm(&other.index);
        let radicand = self.radicand.pow(l / self.index) * other.radicand.pow(l / other.index);
        normalize(&self.coeff * &other.coeff, radicand, l)
    }

    pub fn div(&self, other: &Radical) -> Radical {
        let l = self.index.lcm(&other.index);
        let top = self.radicand.pow(l / self.index);
        let bottom = other.radicand.pow(l / other.index);
        // (top/bottom)^(1/l) = (top·bottom^(l-1))^(1/l) / bottom
        let radicand = top * bottom.pow(l - 1);
        let coeff = &(&self.coeff / &other.coeff) / &Rational::from_integer(BigInt::from(bottom));
        normalize(coeff, radicand, l)
    }

    pub fn pow(&self, exp: u32) -> Radical {
        normalize(self.coeff.pow(exp), self.radicand.pow(exp), self.index)
    }

    /// Exact comparison together with the two integers that decide it.
    pub fn compare(&self, other: &Radical) -> Comparison {
        let l = self.index.lcm(&other.index);
        let (n1, d1) = (positive_part(self.coeff.numer()), positive_part(self.coeff.denom()));
        let (n2, d2) = (positive_part(other.coeff.numer()), positive_part(other.coeff.denom()));
        let lhs_base = n1 * &d2;
        let rhs_base = n2 * &d1;
        let lhs_exp = l / self.index;
        let rhs_exp = l / other.index;
        let lhs = lhs_base.pow(l) * self.radicand.pow(lhs_exp);
        let rhs = rhs_base.pow(l) * other.radicand.pow(rhs_exp);
        Comparison {
            ordering: lhs.cmp(&rhs),
            power: l,
            lhs_form: power_form(&lhs_base, self.index, &self.radicand, lhs_exp),
            rhs_form: power_form(&rhs_base, other.index, &other.radicand, rhs_exp),
            lhs,
            rhs,
            lhs_label: self.to_string(),
            rhs_label: other.to_string(),
        }
    }

    /// `floor(value · scale)`, computed with integer roots only.
    pub fn floor_scaled(&self, scale: &BigUint) -> BigUint {
        let n = positive_part(self.coeff.numer());
        let d = positive_part(self.coeff.denom());
        let top = (n * scale).pow(self.index) * &self.radicand;
        let bottom = d.pow(self.index);
        (top / bottom).nth_root(self.index)
    }

    /// Decimal expansion with `digits` fractional digits, rounded to nearest.
    pub fn to_decimal(&self, digits: u32) -> Decimal {
        let scale = BigUint::from(10u32).pow(digits);
        let twice = self.floor_scaled(&(&scale * 2u32));
        let rounded = (twice + 1u32) / 2u32;
        let (int_part, frac_part) = rounded.div_rem(&scale);
        let text = if digits == 0 {
            int_part.to_string()
        } else {
            format!("{}.{:0>width$}", int_part, frac_part.to_string(), width = digits as usize)
        };
        Decimal { text, approximate: self.index > 1 }
    }

    pub fn to_f64(&self) -> f64 {
        let r = self.radicand.to_f64().unwrap_or(f64::INFINITY);
        self.coeff.to_f64() * r.powf(1.0 / self.index as f64)
    }

    pub fn min(self, other: Radical) -> Radical {
        if other < self { other } else { self }
    }

    pub fn max(self, other: Radical) -> Radical {
        if other > self { other } else { self }
    }
}

fn positive_part(n: &BigInt) -> BigUint {
    match n.sign() {
        Sign::Minus => panic!("positive_part of negative integer"),
        _ => n.magnitude().clone(),
    }
}

fn normalize(coeff: Rational, radicand: BigUint, index: u32) -> Radical {
    let mut index = index;
    let (outside, mut inside) = extract_powers(radicand, index);
    let mut coeff = coeff * Rational::from_integer(BigInt::from(outside));
    'reduce: while index > 1 && !inside.is_one() {
        for p in prime_factors(index) {
            if let Some(r) = exact_root(&inside, p) {
                inside = r;
                index /= p;
                continue 'reduce;
            }
        }
        break;
    }
    if inside.is_one() {
        index = 1;
    }
    if index == 1 && !inside.is_one() {
        coeff = coeff * Rational::from_integer(BigInt::from(inside));
        inside = BigUint::one();
    }
    Radical { coeff, radicand: inside, index }
}

/// Splits `r` as `outside^m · inside` with `inside` free of `m`-th powers.
fn extract_powers(r: BigUint, m: u32) -> (BigUint, BigUint) {
    if m == 1 {
        return (r, BigUint::one());
    }
    let mut rest = r;
    let mut outside = BigUint::one();
    let mut inside = BigUint::one();
    let mut d: u64 = 2;
    let mut exhausted = true;
    loop {
        let dm = BigUint::from(d).pow(m);
        if dm > rest {
            break;
        }
        if d > TRIAL_LIMIT {
            exhausted = false;
            break;
        }
        let mut e = 0u32;
        while (&rest % d).is_zero() {
            rest /= d;
            e += 1;
        }
        if e > 0 {
            outside *= BigUint::from(d).pow(e / m);
            inside *= BigUint::from(d).pow(e % m);
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if !exhausted {
        if let Some(root) = exact_root(&rest, m) {
            outside *= root;
            rest = BigUint::one();
        }
    }
    (outside, inside * rest)
}

fn exact_root(r: &BigUint, p: u32) -> Option<BigUint> {
    let s = r.nth_root(p);
    (s.pow(p) == *r).then_some(s)
}

fn prime_factors(mut m: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            out.push(p);
            while m.is_multiple_of(p) {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

fn superscript(n: u32) -> String {
    const SUP: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string().chars().map(|c| SUP[c.to_digit(10).unwrap() as usize]).collect()
}

fn pow_text(base: &BigUint, exp: u32) -> String {
    if exp == 1 { base.to_string() } else { format!("{}{}", base, superscript(exp)) }
}

/// `(base^index · radicand)^exp`, written as a single integer power.
fn power_form(base: &BigUint, index: u32, radicand: &BigUint, exp: u32) -> String {
    pow_text(&(base.pow(index) * radicand), exp)
}

impl PartialEq for Radical {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Radical {}

impl PartialOrd for Radical {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Radical {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.index == other.index && self.radicand == other.radicand {
            return self.coeff.cmp(&other.coeff);
        }
        self.compare(other).ordering
    }
}

impl fmt::Display for Radical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.index == 1 {
            return write!(f, "{}", self.coeff);
        }
        let root = format!("{}^(1/{})", self.radicand, self.index);
        if self.coeff.is_one_value() {
            write!(f, "{root}")
        } else if self.coeff.is_integer() {
            write!(f, "{}·{root}", self.coeff)
        } else {
            write!(f, "({})·{root}", self.coeff)
        }
    }
}

impl Rational {
    fn is_one_value(&self) -> bool {
        self.numer().is_one() && self.denom().is_one()
    }
}

/// Outcome of an exact comparison `a ? b`, with the integers `a^L·c` and `b^L·c` that decide it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub ordering: Ordering,
    pub power: u32,
    pub lhs: BigUint,
    pub rhs: BigUint,
    pub lhs_label: String,
    pub rhs_label: String,
    lhs_form: String,
    rhs_form: String,
}

impl Comparison {
    pub fn is_less(&self) -> bool {
        self.ordering == Ordering::Less
    }

    pub fn is_greater(&self) -> bool {
        self.ordering == Ordering::Greater
    }

    pub fn is_equal(&self) -> bool {
        self.ordering == Ordering::Equal
    }

    /// Integer identity behind the decision, e.g. `18² = 324 > 6³ = 216`.
    pub fn witness(&self) -> String {
        let op = match self.ordering {
            Ordering::Less => "<",
            Ordering::Equal => "=",
            Ordering::Greater => ">",
        };
        let side = |form: &str, v: &BigUint| {
            let v = v.to_string();
            if form == v { v } else { format!("{form} = {v}") }
        };
        format!("{} {} {}", side(&self.lhs_form, &self.lhs), op, side(&self.rhs_form, &self.rhs))
    }
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = match self.ordering {
            Ordering::Less => "<",
            Ordering::Equal => "=",
            Ordering::Greater => ">",
        };
        write!(f, "{} {} {}  [power {}: {}]", self.lhs_label, op, self.rhs_label, self.power, self.witness())
    }
}

/// Decimal rendering of a radical; `approximate` is set when the value is irrational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decimal {
    pub text: String,
    pub approximate: bool,
}

impl fmt::Display for Decimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.approximate {
            write!(f, "~{}", self.text)
        } else {
            f.write_str(&self.text)
        }
    }
}

#[derive(Serialize, Deserialize)]
struct RadicalRepr {
    coeff: Rational,
    radicand: Radicand,
    index: u32,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Radicand {
    Small(u64),
    Big(String),
}

impl Serialize for Radical {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let radicand = match self.radicand.to_u64() {
            Some(v) => Radicand::Small(v),
            None => Radicand::Big(self.radicand.to_string()),
        };
        RadicalRepr { coeff: self.coeff.clone(), radicand, index: self.index }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Radical {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let repr = RadicalRepr::deserialize(deserializer)?;
        let radicand = match repr.radicand {
            Radicand::Small(v) => BigUint::from(v),
            Radicand::Big(s) => s.parse().map_err(|_| D::Error::custom(format!("bad radicand {s:?}")))?,
        };
        Radical::new(repr.coeff, radicand, repr.index).map_err(D::Error::custom)
    }
}
