//! Numerical model of a polarized abelian variety `(A, L)`.
//!
//! Only intersection numbers are represented: the degree `L^n`, restricted
//! degrees of catalogued abelian subvarieties, and curve certificates
//! `(L·C, mult₀ C)`. Catalogs are trusted input; a [`CompletenessAttestation`]
//! is what lets the engine reason about subvarieties that are *not* listed.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::radical::Radical;
use crate::rational::Rational;
use crate::rules::citation;

/// One polarized abelian variety instance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AVSpec {
    pub id: String,
    pub dim: u32,
    /// Self-intersection `L^n`.
    pub degree: u64,
    #[serde(default)]
    pub subvarieties: Vec<SubvarietyDatum>,
    #[serde(default)]
    pub curves: Vec<CurveCert>,
    #[serde(default)]
    pub tags: StructureTags,
    #[serde(default)]
    pub attestations: Vec<CompletenessAttestation>,
}

/// An abelian subvariety `B ⊂ A` with the restricted polarization `L|_B`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SubvarietyDatum {
    pub spec: AVSpec,
    pub is_divisor: bool,
}

/// A curve through the origin with its intersection data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveCert {
    pub l_degree: u64,
    pub mult: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generates_dim: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub contained_in: Option<String>,
}

impl CurveCert {
    pub fn new(l_degree: u64, mult: u64) -> Self {
        CurveCert { l_degree, mult, generates_dim: None, contained_in: None }
    }

    pub fn elliptic(l_degree: u64) -> Self {
        CurveCert { l_degree, mult: 1, generates_dim: Some(1), contained_in: None }
    }

    /// `ε_C = L·C / mult₀ C`. Zero multiplicity is reported by [`validate`]; here it reads as `L·C`.
    pub fn epsilon(&self) -> Rational {
        Rational::new(self.l_degree, self.mult.max(1))
    }

    pub fn is_elliptic(&self) -> bool {
        self.generates_dim == Some(1)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct StructureTags {
    /// `(A, L) ≅ (B × E, p*L_B ⊗ q*M_k)`.
    #[serde(rename = "product", default, skip_serializing_if = "Option::is_none")]
    pub product_decomposition: Option<ProductDecomposition>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ppav_type: Option<PpavType>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductDecomposition {
    pub factor_id: String,
    pub elliptic_degree: u64,
}

/// Known isomorphism type of a principally polarized instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PpavType {
    /// Jacobian of a genus-two curve with its theta divisor.
    JacobianGenus2,
    /// `E₁ × E₂` with the product of degree-one bundles.
    #[serde(rename = "product_elliptic")]
    ProductOfTwoElliptic,
    /// Principally polarized instance whose Seshadri constant is known from elsewhere.
    KnownEpsilon(Rational),
}

/// Every abelian subvariety of dimension `dim_k` with `(L|_B)^k < bound` is listed.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CompletenessAttestation {
    pub dim_k: u32,
    pub bound: Radical,
}

pub fn factorial(n: u32) -> u64 {
    (1..=n as u64).product()
}

impl AVSpec {
    pub fn new(id: impl Into<String>, dim: u32, degree: u64) -> Self {
        AVSpec {
            id: id.into(),
            dim,
            degree,
            subvarieties: Vec::new(),
            curves: Vec::new(),
            tags: StructureTags::default(),
            attestations: Vec::new(),
        }
    }

    pub fn with_subvariety(mut self, spec: AVSpec) -> Self {
        let is_divisor = spec.dim + 1 == self.dim;
        self.subvarieties.push(SubvarietyDatum { spec, is_divisor });
        self
    }

    pub fn with_curve(mut self, curve: CurveCert) -> Self {
        self.curves.push(curve);
        self
    }

    pub fn with_ppav_type(mut self, t: PpavType) -> Self {
        self.tags.ppav_type = Some(t);
        self
    }

    pub fn with_product(mut self, factor_id: impl Into<String>, elliptic_degree: u64) -> Self {
        self.tags.product_decomposition =
            Some(ProductDecomposition { factor_id: factor_id.into(), elliptic_degree });
        self
    }

    pub fn with_attestation(mut self, dim_k: u32, bound: Radical) -> Self {
        self.attestations.push(CompletenessAttestation { dim_k, bound });
        self
    }

    /// `(L^n)^(1/n)`, the universal upper bound for ε.
    pub fn degree_root(&self) -> Radical {
        Radical::root(self.degree.max(1), self.dim.max(1)).expect("positive degree and dimension")
    }

    pub fn is_principal(&self) -> bool {
        self.degree == factorial(self.dim)
    }

    pub fn subvariety(&self, id: &str) -> Option<&SubvarietyDatum> {
        self.subvarieties.iter().find(|s| s.spec.id == id)
    }

    pub fn divisors(&self) -> impl Iterator<Item = &AVSpec> {
        self.subvarieties.iter().filter(|s| s.is_divisor).map(|s| &s.spec)
    }

    pub fn subvarieties_of_dim(&self, k: u32) -> impl Iterator<Item = &AVSpec> {
        self.subvarieties.iter().filter(move |s| s.spec.dim == k).map(|s| &s.spec)
    }

    /// Largest attested bound for dimension `k`, if any attestation covers it.
    pub fn attested_bound(&self, k: u32) -> Option<&Radical> {
        self.attestations.iter().filter(|a| a.dim_k == k).map(|a| &a.bound).max()
    }

    /// True iff some attestation for dimension `k` has bound `≥ r`.
    pub fn attestation_covers(&self, k: u32, r: &Radical) -> bool {
        self.attested_bound(k).is_some_and(|b| b >= r)
    }
}

/// Category of a validation failure.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DiagnosticKind {
    Dimension,
    Divisibility,
    DuplicateId,
    DivisorFlag,
    CurveDegree,
    LowerBound,
    SubvarietyLemma,
    EllipticMultiplicity,
    DanglingReference,
    Tag,
    ProductDegree,
    Attestation,
}

/// One violated invariant, located by the path of instance ids from the root.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Diagnostic {
    pub path: String,
    pub kind: DiagnosticKind,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub citation: Option<String>,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.path, self.message)?;
        if let Some(c) = &self.citation {
            write!(f, " [{c}]")?;
        }
        Ok(())
    }
}

/// Returns every violation found in `spec` and its nested subvarieties, sorted.
pub fn validate(spec: &AVSpec) -> Vec<Diagnostic> {
    let mut out = BTreeSet::new();
    validate_into(spec, &spec.id, &mut out);
    out.into_iter().collect()
}

fn validate_into(spec: &AVSpec, path: &str, out: &mut BTreeSet<Diagnostic>) {
    let mut push = |kind, message: String, citation: Option<&str>| {
        out.insert(Diagnostic {
            path: path.to_string(),
            kind,
            message,
            citation: citation.map(str::to_string),
        });
    };

    let n = spec.dim;
    if n == 0 {
        push(DiagnosticKind::Dimension, "dimension must be at least 1".into(), None);
        return;
    }
    if spec.degree == 0 {
        push(DiagnosticKind::Divisibility, "degree L^n must be positive".into(), None);
        return;
    }
    let nf = factorial(n);
    if !spec.degree.is_multiple_of(nf) {
        push(
            DiagnosticKind::Divisibility,
            format!("{n}! does not divide {}", spec.degree),
            Some(citation::RIEMANN_ROCH),
        );
    }

    let mut seen = BTreeSet::new();
    for sub in &spec.subvarieties {
        if !seen.insert(sub.spec.id.as_str()) {
            push(DiagnosticKind::DuplicateId, format!("duplicate subvariety id {:?}", sub.spec.id), None);
        }
        if sub.spec.dim >= n {
            push(
                DiagnosticKind::Dimension,
                format!("subvariety {:?} has dimension {} not below {n}", sub.spec.id, sub.spec.dim),
                None,
            );
        } else if sub.is_divisor != (sub.spec.dim + 1 == n) {
            push(
                DiagnosticKind::DivisorFlag,
                format!(
                    "subvariety {:?} of dimension {} has is_divisor = {}",
                    sub.spec.id, sub.spec.dim, sub.is_divisor
                ),
                None,
            );
        }
    }

    let root = spec.degree_root();
    let nakamaye_threshold = root.scale(&Rational::new(1, n as i64)).expect("positive");
    for (i, c) in spec.curves.iter().enumerate() {
        if c.l_degree == 0 || c.mult == 0 {
            push(DiagnosticKind::CurveDegree, format!("curve #{i}: L·C and mult₀C must be positive"), None);
            continue;
        }
        let eps = c.epsilon();
        if eps < Rational::one() {
            push(
                DiagnosticKind::LowerBound,
                format!("curve #{i}: ε_C = {eps} < 1 contradicts lower bound ε(A,L) ≥ 1"),
                Some(citation::NAKAMAYE_LOWER),
            );
        }
        let eps_rad = Radical::from_rational(eps.clone()).expect("positive");
        // On an elliptic curve the only curve through 0 is the curve itself.
        let generates = if n == 1 { Some(1) } else { c.generates_dim };
        match generates {
            Some(0) => push(DiagnosticKind::Dimension, format!("curve #{i}: generates_dim must be positive"), None),
            Some(g) if g > n => push(
                DiagnosticKind::Dimension,
                format!("curve #{i}: generates_dim {g} exceeds dimension {n}"),
                None,
            ),
            Some(g) if g == n => {
                let cmp = eps_rad.compare(&nakamaye_threshold);
                if cmp.is_less() {
                    push(
                        DiagnosticKind::SubvarietyLemma,
                        format!(
                            "curve #{i} generates A but ε_C = {eps} < {nakamaye_threshold} = (L^n)^(1/n)/n ({})",
                            cmp.witness()
                        ),
                        Some(citation::NAKAMAYE_LEMMA),
                    );
                }
            }
            _ => {}
        }
        if generates == Some(1) && c.mult != 1 {
            push(
                DiagnosticKind::EllipticMultiplicity,
                format!("curve #{i} is elliptic but has multiplicity {}", c.mult),
                None,
            );
        }
        if let Some(target) = &c.contained_in {
            match spec.subvariety(target) {
                None => push(
                    DiagnosticKind::DanglingReference,
                    format!("curve #{i}: contained_in {target:?} is not a catalogued subvariety"),
                    None,
                ),
                Some(sub) => {
                    if let Some(g) = c.generates_dim.filter(|g| *g > sub.spec.dim) {
                        push(
                            DiagnosticKind::Dimension,
                            format!("curve #{i} generates dimension {g} but lies in {target:?} of dimension {}", sub.spec.dim),
                            None,
                        );
                    }
                    if c.generates_dim == Some(sub.spec.dim) && sub.spec.dim > 0 {
                        let k = sub.spec.dim;
                        let sub_threshold = Radical::root(sub.spec.degree.max(1), k)
                            .expect("positive")
                            .scale(&Rational::new(1, k as i64))
                            .expect("positive");
                        if eps_rad < sub_threshold {
                            push(
                                DiagnosticKind::SubvarietyLemma,
                                format!(
                                    "curve #{i} generates {target:?} but ε_C = {eps} < {sub_threshold} = ((L|_B)^k)^(1/k)/k"
                                ),
                                Some(citation::NAKAMAYE_LEMMA),
                            );
                        }
                    }
                }
            }
        }
    }

    if let Some(t) = &spec.tags.ppav_type {
        if !spec.is_principal() {
            push(
                DiagnosticKind::Tag,
                format!("ppav_type set but degree {} ≠ {n}! (not principally polarized)", spec.degree),
                None,
            );
        }
        match t {
            PpavType::JacobianGenus2 | PpavType::ProductOfTwoElliptic if n != 2 => push(
                DiagnosticKind::Tag,
                format!("ppav_type {t:?} requires dimension 2, got {n}"),
                None,
            ),
            PpavType::KnownEpsilon(v) => {
                let allowed = crate::rules::ppav::principal_value_set(n);
                if let Some(set) = allowed {
                    if !set.contains(v) {
                        let list: Vec<String> = set.iter().map(|x| x.to_string()).collect();
                        push(
                            DiagnosticKind::Tag,
                            format!("known_epsilon {v} is not in {{{}}} for dimension {n}", list.join(", ")),
                            Some(citation::PPAV_FOURFOLD),
                        );
                    }
                }
                if v < &Rational::one() {
                    push(DiagnosticKind::Tag, format!("known_epsilon {v} < 1"), Some(citation::NAKAMAYE_LOWER));
                } else if Radical::from_rational(v.clone()).expect("positive") > root {
                    push(
                        DiagnosticKind::Tag,
                        format!("known_epsilon {v} exceeds (L^n)^(1/n) = {root}"),
                        Some(citation::UPPER_ROOT),
                    );
                }
            }
            _ => {}
        }
    }

    if let Some(p) = &spec.tags.product_decomposition {
        match spec.subvariety(&p.factor_id) {
            None => push(
                DiagnosticKind::DanglingReference,
                format!("product factor {:?} is not a catalogued subvariety", p.factor_id),
                None,
            ),
            Some(f) if f.spec.dim + 1 != n => push(
                DiagnosticKind::ProductDegree,
                format!("product factor {:?} must have dimension {}", p.factor_id, n - 1),
                None,
            ),
            Some(f) => {
                if p.elliptic_degree == 0 {
                    push(DiagnosticKind::ProductDegree, "elliptic factor degree must be positive".into(), None);
                } else {
                    let expected = BigUint::from(n) * p.elliptic_degree * f.spec.degree;
                    if expected != BigUint::from(spec.degree) {
                        push(
                            DiagnosticKind::ProductDegree,
                            format!(
                                "product degree mismatch: n·k·(L_B)^(n-1) = {n}·{}·{} = {expected} ≠ {}",
                                p.elliptic_degree, f.spec.degree, spec.degree
                            ),
                            Some(citation::PRODUCT),
                        );
                    }
                }
            }
        }
    }

    for a in &spec.attestations {
        if a.dim_k == 0 || a.dim_k >= n {
            push(
                DiagnosticKind::Attestation,
                format!("attestation dimension {} must lie in 1..{}", a.dim_k, n),
                None,
            );
        }
    }

    for sub in &spec.subvarieties {
        if sub.spec.dim < n {
            validate_into(&sub.spec, &format!("{path}/{}", sub.spec.id), out);
        }
    }
}

/// `min_C ε_C` over curve certificates, as an exact rational radical.
pub fn epsilon_upper_from_curves(spec: &AVSpec) -> Option<Radical> {
    spec.curves
        .iter()
        .filter(|c| c.l_degree > 0 && c.mult > 0)
        .map(|c| c.epsilon())
        .min()
        .map(|q| Radical::from_rational(q).expect("positive"))
}

/// Minimal degree among catalogued elliptic curves (`ε₀`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EllipticMinimum {
    pub degree: u64,
    /// An attestation for dimension 1 reaches beyond `degree`, so no smaller elliptic curve exists.
    pub attested_complete: bool,
}

pub fn min_elliptic_degree(spec: &AVSpec) -> Option<EllipticMinimum> {
    let degree = spec.subvarieties_of_dim(1).map(|e| e.degree).min()?;
    let value = Radical::from_int(degree.max(1)).expect("positive");
    let attested_complete = spec.attested_bound(1).is_some_and(|b| *b > value);
    Some(EllipticMinimum { degree, attested_complete })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kinds(spec: &AVSpec) -> Vec<DiagnosticKind> {
        validate(spec).into_iter().map(|d| d.kind).collect()
    }

    #[test]
    fn divisibility() {
        assert!(validate(&AVSpec::new("A", 3, 30)).is_empty());
        let d = validate(&AVSpec::new("A", 3, 20));
        assert_eq!(d.len(), 1);
        assert!(d[0].message.contains("3! does not divide 20"));
    }

    #[test]
    fn curve_below_one() {
        let spec = AVSpec::new("A", 2, 4).with_curve(CurveCert::new(1, 2));
        let d = validate(&spec);
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].kind, DiagnosticKind::LowerBound);
        assert!(d[0].message.contains("ε_C = 1/2 < 1"));
        assert_eq!(d[0].citation.as_deref(), Some(citation::NAKAMAYE_LOWER));
    }

    #[test]
    fn generating_curve_below_nakamaye_threshold() {
        // (L^3)^(1/3)/3 = 30^(1/3)/3 ≈ 1.036 > 1
        let mut c = CurveCert::new(1, 1);
        c.generates_dim = Some(3);
        let spec = AVSpec::new("A", 3, 30).with_curve(c);
        assert_eq!(kinds(&spec), vec![DiagnosticKind::SubvarietyLemma]);
        assert_eq!(validate(&spec)[0].citation.as_deref(), Some(citation::NAKAMAYE_LEMMA));
    }

    #[test]
    fn elliptic_case_curve_must_match_degree() {
        let spec = AVSpec::new("E", 1, 5).with_curve(CurveCert::new(4, 1));
        assert_eq!(kinds(&spec), vec![DiagnosticKind::SubvarietyLemma]);
        assert!(validate(&AVSpec::new("E", 1, 5).with_curve(CurveCert::new(5, 1))).is_empty());
    }

    #[test]
    fn tags_and_references() {
        let spec = AVSpec::new("S", 2, 4).with_ppav_type(PpavType::JacobianGenus2);
        assert_eq!(kinds(&spec), vec![DiagnosticKind::Tag]);
        let spec = AVSpec::new("T", 3, 6).with_ppav_type(PpavType::KnownEpsilon(Rational::new(5, 4)));
        assert_eq!(kinds(&spec), vec![DiagnosticKind::Tag]);
        let spec = AVSpec::new("T", 3, 6).with_ppav_type(PpavType::KnownEpsilon(Rational::new(12, 7)));
        assert!(validate(&spec).is_empty());

        let mut c = CurveCert::new(2, 1);
        c.contained_in = Some("nope".into());
        assert_eq!(kinds(&AVSpec::new("A", 2, 4).with_curve(c)), vec![DiagnosticKind::DanglingReference]);

        let spec = AVSpec::new("A", 3, 60).with_product("J", 10);
        assert_eq!(kinds(&spec), vec![DiagnosticKind::DanglingReference]);
        let j = AVSpec::new("J", 2, 2).with_ppav_type(PpavType::JacobianGenus2);
        assert!(validate(&AVSpec::new("A", 3, 60).with_subvariety(j.clone()).with_product("J", 10)).is_empty());
        assert_eq!(
            kinds(&AVSpec::new("A", 3, 66).with_subvariety(j).with_product("J", 10)),
            vec![DiagnosticKind::ProductDegree]
        );
    }

    #[test]
    fn nested_and_structural() {
        let bad_child = AVSpec::new("S", 2, 3);
        let spec = AVSpec::new("A", 3, 18).with_subvariety(bad_child);
        let d = validate(&spec);
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].path, "A/S");

        let mut spec = AVSpec::new("A", 3, 18).with_subvariety(AVSpec::new("S", 2, 2));
        spec.subvarieties[0].is_divisor = false;
        assert_eq!(kinds(&spec), vec![DiagnosticKind::DivisorFlag]);

        let spec = AVSpec::new("A", 2, 2)
            .with_subvariety(AVSpec::new("E", 1, 1))
            .with_subvariety(AVSpec::new("E", 1, 1));
        assert_eq!(kinds(&spec), vec![DiagnosticKind::DuplicateId]);

        let spec = AVSpec::new("A", 2, 2).with_attestation(2, Radical::one());
        assert_eq!(kinds(&spec), vec![DiagnosticKind::Attestation]);
    }

    #[test]
    fn order_insensitive() {
        let a = AVSpec::new("A", 3, 20).with_curve(CurveCert::new(1, 2)).with_curve(CurveCert::new(0, 1));
        let mut b = a.clone();
        b.curves.reverse();
        // curve indices differ, so compare kinds as multisets
        let mut ka = kinds(&a);
        let mut kb = kinds(&b);
        ka.sort();
        kb.sort();
        assert_eq!(ka, kb);
        assert_eq!(validate(&a), validate(&a));
    }

    #[test]
    fn curve_upper() {
        let spec = AVSpec::new("A", 3, 30).with_curve(CurveCert::new(4, 3)).with_curve(CurveCert::new(2, 1));
        assert_eq!(epsilon_upper_from_curves(&spec), Some(Radical::from_rational(Rational::new(4, 3)).unwrap()));
        assert_eq!(epsilon_upper_from_curves(&AVSpec::new("A", 3, 30)), None);
        let spec = AVSpec::new("A", 2, 4).with_curve(CurveCert::new(1, 1));
        assert_eq!(epsilon_upper_from_curves(&spec), Some(Radical::one()));
    }

    #[test]
    fn elliptic_minimum() {
        let spec = AVSpec::new("A", 3, 6 * 42)
            .with_subvariety(AVSpec::new("E1", 1, 3))
            .with_subvariety(AVSpec::new("E2", 1, 2))
            .with_subvariety(AVSpec::new("E3", 1, 7));
        assert_eq!(min_elliptic_degree(&spec), Some(EllipticMinimum { degree: 2, attested_complete: false }));
        assert_eq!(min_elliptic_degree(&AVSpec::new("A", 2, 2)), None);
        let spec = AVSpec::new("S", 2, 8)
            .with_subvariety(AVSpec::new("E", 1, 2))
            .with_attestation(1, Radical::from_int(4).unwrap());
        assert_eq!(min_elliptic_degree(&spec), Some(EllipticMinimum { degree: 2, attested_complete: true }));
    }
}
