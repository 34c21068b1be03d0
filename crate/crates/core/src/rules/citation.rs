//! Statements cited by rule applications and diagnostics.

pub const NAKAMAYE_LOWER: &str = "Nakamaye lower bound: ε(A,L) ≥ 1";
pub const NAKAMAYE_EQUALITY: &str =
    "Nakamaye equality case: ε(A,L) = 1 ⟺ (A,L) ≅ (E,L₁) × (B,L₂) with deg L₁ = 1";
pub const NAKAMAYE_LEMMA: &str =
    "Nakamaye's lemma: ε_{C,0}(L) < (L^n)^(1/n)/n ⟹ C lies in a proper abelian subvariety";
pub const ELLIPTIC_BASE: &str = "elliptic curve: ε(E,L) = deg L";
pub const UPPER_ROOT: &str = "volume bound: ε(X,L;x) ≤ (L^n)^(1/n)";
pub const CURVE_DEFINITION: &str = "definition: ε(A,L) = inf over curves C ∋ 0 of L·C / mult₀C";
pub const SUBVARIETY_BOUND: &str = "curves on B ⊂ A are curves on A: ε(A,L) ≤ ε(B,L|_B)";
pub const PRODUCT: &str = "product polarization: ε(B × E, p*L ⊗ q*M_k) = min{ε(B,L), k}, L_k^n = n·k·L^(n-1)";
pub const NEF_THRESHOLD: &str = "nef threshold of an abelian divisor: σ(L,D)·(L|_D)^(n-1) = L^n/n";
pub const DIVISOR_REDUCTION: &str =
    "divisor reduction: (L^n)^(1/n) > (n·(L|_D)^(n-1))^(1/(n-1)) ⟹ ε(A,L) = ε(D,L|_D)";
pub const DIVISOR_REDUCTION_PARAM: &str = "divisor reduction with parameter a: (L^n)^(1/n) ≥ (a·(L|_D)^(n-1))^(1/(n-1)) \
     and ε(A,L) < a·(L^n)^(1/n)/n ⟹ ε(A,L) = ε(D,L|_D)";
pub const CONTAINMENT: &str = "containment in divisors: (L^n)^(1/n) > (resp. ≥) (a·(L|_D)^(n-1))^(1/(n-1)) ⟹ \
     every curve with ε_C ≤ (resp. <) a·(L^n)^(1/n)/n lies in D";
pub const DESCENT: &str = "descent: ε(A,L) < (L^n)^(1/n)/n ⟹ ε(A,L) = min ε(B,L|_B) over abelian subvarieties B \
     of dimension i with (L|_B)^i < r_i = (i·(L^n)^(1/n)/n)^i";
pub const SURFACE_UNIQUE: &str = "abelian surfaces: ε(S,L) < (L²)^(1/2)/2 ⟹ exactly one submaximal curve; \
     it is elliptic and computes ε(S,L)";
pub const BAUER: &str = "Bauer's bound for surfaces: ε(S,L) ≥ min{ε₀, (14·L²)^(1/2)/4}, ε₀ = minimal elliptic degree";
pub const THREEFOLD_DICHOTOMY: &str = "threefolds with ε(A,L) < (L³)^(1/3)/3: if (L³)^(1/3) > 3·(14·(L|_S)²)^(1/2)/4 \
     then ε(A,L) = ε(S,L|_S), otherwise ε(A,L) is computed by an elliptic curve";
pub const THREEFOLD_CLASSIFIER: &str =
    "threefolds with L³ ≤ 174 and ε(A,L) < (L³)^(1/3)/3: ε(A,L) ∈ {1, 4/3}, and ε(A,L) = 1 if L³ ≤ 60";
pub const TWO_DIVISORS: &str = "threefolds with two abelian divisors satisfying (L³)^(1/3) > (a·(L|_D)²)^(1/2): \
     at most one curve has ε_C ≤ a·(L³)^(1/3)/3 and it is elliptic; for a = 3 it exists and is the Seshadri curve";
pub const PPAV_SURFACE: &str = "principally polarized surfaces: Jacobian of a genus-2 curve has ε = 4/3, \
     E₁ × E₂ with degree-one factors has ε = 1";
pub const PPAV_THREEFOLD_VALUES: &str = "principally polarized threefolds: ε ∈ {1, 3/2, 12/7}";
pub const PPAV_KNOWN: &str = "known Seshadri constant of a principally polarized instance (input tag)";
pub const PPAV_THREEFOLD: &str =
    "threefolds with L³ ≥ 18 containing a principally polarized surface S: ε(A,L) = ε(S,L|_S) ∈ {1, 4/3}";
pub const PPAV_FOURFOLD: &str =
    "fourfolds with L⁴ ≥ 72 containing a principally polarized threefold D: ε(A,L) = ε(D,L|_D) ∈ {1, 3/2, 12/7}";
pub const RIEMANN_ROCH: &str = "Riemann–Roch: L^n = n!·χ(L), hence n! | L^n";
pub const CANDIDATES: &str = "finite candidate set intersected with the certified interval";
