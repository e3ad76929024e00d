//! Tiered checker for hyperplane-fleeing orbits.
//!
//! `A(x)` qualifies when `vᵗ(A(x) − A(0))w` is a nonzero polynomial for all
//! nonzero integer `v, w`. For a fixed `w` this holds for every `v` exactly
//! when the `d × D` matrix `M(w) = [B₁w | … | B_Dw]` has rank `d`. The
//! universal statement over all `w` is not decided here; instead a verdict
//! carries one of three tiers:
//!
//! * `ViolationFound`: an explicit `(v, w)` whose polynomial vanishes, re-verified exactly.
//! * `ClearedToHeight`: every primitive `w` with `‖w‖∞ ≤ H` was checked exhaustively.
//! * `CertifiedGenericRank`: random `w` all gave full rank. Evidence, not proof.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::exact::{factorial, gcd_vec, height, left_kernel_integer, rank_mod_p, rank_rational, IntMat};
use crate::poly::{IntPoly, PolyMat};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum VerdictStatus {
    ViolationFound,
    ClearedToHeight,
    CertifiedGenericRank,
}

/// A pair with `vᵗ(A(x) − A(0))w ≡ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    #[serde(with = "crate::serde_big::int_vec")]
    pub v: Vec<BigInt>,
    #[serde(with = "crate::serde_big::int_vec")]
    pub w: Vec<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlasnerVerdict {
    pub status: VerdictStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub height: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trials: Option<usize>,
}

impl GlasnerVerdict {
    fn violation(witness: Witness) -> Self {
        GlasnerVerdict {
            status: VerdictStatus::ViolationFound,
            witness: Some(witness),
            height: None,
            trials: None,
        }
    }
}

fn require_nonzero(v: &[BigInt]) -> Result<()> {
    if v.iter().all(Zero::is_zero) {
        Err(Error::ZeroVector)
    } else {
        Ok(())
    }
}

fn require_len(a: &PolyMat, v: &[BigInt]) -> Result<()> {
    if v.len() != a.dim() {
        return Err(Error::DimensionMismatch(format!(
            "vector of length {} for dimension {}",
            v.len(),
            a.dim()
        )));
    }
    Ok(())
}

/// True iff `vᵗ(A(x) − A(0))w` is not identically zero.
pub fn check_pair(a: &PolyMat, v: &[BigInt], w: &[BigInt]) -> Result<bool> {
    require_len(a, v)?;
    require_len(a, w)?;
    require_nonzero(v)?;
    require_nonzero(w)?;
    Ok(!a.bilinear_poly(v, w)?.without_constant().is_zero())
}

/// The `d × D` matrix with columns `B₁w, …, B_Dw`.
///
/// For rational-coefficient (integer-valued) `A` the coefficient matrices are
/// first scaled by their common denominator, which changes neither rank nor
/// left kernel.
pub fn fleeing_matrix(a: &PolyMat, w: &[BigInt]) -> Result<IntMat> {
    require_len(a, w)?;
    let (_, mats) = a.scaled_coeff_matrices();
    let columns = mats[1..]
        .iter()
        .map(|b| b.mul_vec(w))
        .collect::<Result<Vec<_>>>()?;
    IntMat::from_columns(a.dim(), &columns)
}

fn full_rank(m: &IntMat, d: usize) -> bool {
    m.cols() >= d && (rank_mod_p(m) == d || rank_rational(m) == d)
}

/// Entries of `(A(x) − A(0))w` linearly independent over Z.
pub fn entries_independent(a: &PolyMat, w: &[BigInt]) -> Result<bool> {
    require_nonzero(w)?;
    Ok(full_rank(&fleeing_matrix(a, w)?, a.dim()))
}

/// Entries of the row `vᵗ(A(x) − A(0))` linearly independent over Z.
pub fn row_entries_independent(a: &PolyMat, v: &[BigInt]) -> Result<bool> {
    entries_independent(&a.transpose(), v)
}

/// `D(A − A(0)) < d` forces every `w` to violate.
pub fn degree_shortcut(a: &PolyMat) -> bool {
    a.minus_constant().degree() < a.dim()
}

/// A `v` with `vᵗ(A(x) − A(0))w ≡ 0`, if one exists for this `w`.
pub fn violation_at(a: &PolyMat, w: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
    let m = fleeing_matrix(a, w)?;
    if full_rank(&m, a.dim()) {
        return Ok(None);
    }
    let v = left_kernel_integer(&m)
        .into_iter()
        .next()
        .expect("rank-deficient matrix has a left kernel");
    assert!(
        !check_pair(a, &v, w)?,
        "left kernel vector does not cancel the bilinear form"
    );
    Ok(Some(v))
}

/// Primitive `w` with `‖w‖∞ = h` and first nonzero coordinate positive, in
/// lexicographic order.
pub fn primitive_shell(d: usize, h: u64) -> Vec<Vec<BigInt>> {
    let h = h as i64;
    let mut out = Vec::new();
    if d == 0 || h == 0 {
        return out;
    }
    let mut cur = vec![-h; d];
    loop {
        let first_nonzero = cur.iter().find(|&&x| x != 0);
        if first_nonzero.is_some_and(|&x| x > 0) && cur.iter().any(|&x| x.abs() == h) {
            let big: Vec<BigInt> = cur.iter().map(|&x| BigInt::from(x)).collect();
            if gcd_vec(&big) == BigInt::from(1) {
                out.push(big);
            }
        }
        let mut i = d;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < h {
                cur[i] += 1;
                break;
            }
            cur[i] = -h;
        }
    }
}

/// First violating `w` (by height, then lexicographically) with `‖w‖∞ ≤ H`.
pub fn find_violation(a: &PolyMat, max_height: u64) -> Option<Witness> {
    (1..=max_height).find_map(|h| {
        primitive_shell(a.dim(), h).into_par_iter().find_map_first(|w| {
            violation_at(a, &w)
                .expect("lengths match")
                .map(|v| Witness { v, w })
        })
    })
}

/// Random search for rank-deficient `M(w)` with coordinates in `[−B, B]`.
pub fn certify_generic(a: &PolyMat, trials: usize, coord_bound: u64, seed: u64) -> GlasnerVerdict {
    if degree_shortcut(a) {
        let witness = find_violation(a, 1).expect("degree shortcut guarantees a violation");
        return GlasnerVerdict::violation(witness);
    }
    let mut rng = crate::seed::rng(seed, &[0x0067_656e_6572_6963]);
    let b = coord_bound.max(1) as i64;
    for t in 0..trials {
        let w: Vec<BigInt> = loop {
            let w: Vec<i64> = (0..a.dim()).map(|_| rng.gen_range(-b..=b)).collect();
            if w.iter().any(|&x| x != 0) {
                break w.into_iter().map(BigInt::from).collect();
            }
        };
        if let Some(v) = violation_at(a, &w).expect("lengths match") {
            let mut verdict = GlasnerVerdict::violation(Witness { v, w });
            verdict.trials = Some(t + 1);
            return verdict;
        }
    }
    GlasnerVerdict {
        status: VerdictStatus::CertifiedGenericRank,
        witness: None,
        height: None,
        trials: Some(trials),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckConfig {
    pub height: u64,
    pub trials: usize,
    pub coord_bound: u64,
    pub seed: u64,
}

impl CheckConfig {
    pub fn with_seed(seed: u64) -> Self {
        CheckConfig { height: 5, trials: 100, coord_bound: 1_000_000, seed }
    }
}

/// Outcome of running every tier that applies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub degree_shortcut: bool,
    pub verdicts: Vec<GlasnerVerdict>,
}

impl CheckReport {
    pub fn violation(&self) -> Option<&Witness> {
        self.verdicts
            .iter()
            .find(|v| v.status == VerdictStatus::ViolationFound)
            .and_then(|v| v.witness.as_ref())
    }

    pub fn has_status(&self, status: VerdictStatus) -> bool {
        self.verdicts.iter().any(|v| v.status == status)
    }

    /// No violation and at least one clearing tier.
    pub fn is_clear(&self) -> bool {
        self.violation().is_none() && !self.verdicts.is_empty()
    }
}

pub fn check(a: &PolyMat, cfg: &CheckConfig) -> CheckReport {
    if degree_shortcut(a) {
        let witness = find_violation(a, 1).expect("degree shortcut guarantees a violation");
        return CheckReport {
            degree_shortcut: true,
            verdicts: vec![GlasnerVerdict::violation(witness)],
        };
    }
    if let Some(witness) = find_violation(a, cfg.height) {
        let mut verdict = GlasnerVerdict::violation(witness);
        verdict.height = Some(cfg.height);
        return CheckReport { degree_shortcut: false, verdicts: vec![verdict] };
    }
    let mut verdicts = vec![GlasnerVerdict {
        status: VerdictStatus::ClearedToHeight,
        witness: None,
        height: Some(cfg.height),
        trials: None,
    }];
    if cfg.trials > 0 {
        verdicts.push(certify_generic(a, cfg.trials, cfg.coord_bound, cfg.seed));
    }
    CheckReport { degree_shortcut: false, verdicts }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexityBound {
    #[serde(with = "crate::serde_big::int")]
    pub q: BigInt,
    pub d: usize,
    #[serde(with = "crate::serde_big::int")]
    pub norm: BigInt,
    #[serde(with = "crate::serde_big::int")]
    pub w_height: BigInt,
}

/// `Q = d!·(d·‖A(x) − A(0)‖·‖w‖∞)^d`, valid when the entries of the row
/// `wᵗ(A(x) − A(0))` are independent.
pub fn complexity_bound(a: &PolyMat, w: &[BigInt]) -> Result<ComplexityBound> {
    require_len(a, w)?;
    let norm = a.minus_constant().coeff_norm()?;
    if !row_entries_independent(a, w)? {
        return Err(Error::HypothesisFailed(
            "entries of wᵗ(A(x) − A(0)) are linearly dependent".into(),
        ));
    }
    let d = a.dim();
    let w_height = height(w);
    let base = BigInt::from(d) * &norm * &w_height;
    let q = factorial(d) * num_traits::pow(base, d);
    Ok(ComplexityBound { q, d, norm, w_height })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexityRecord {
    #[serde(with = "crate::serde_big::int")]
    pub g: BigInt,
    pub ok: bool,
}

/// Forms `(P(x) − P(0))·a = Σ bⱼxʲ` and checks `gcd(b₁, …, b_D, q) ≤ bound`.
pub fn verify_multiplicative_complexity(
    p: &[IntPoly],
    a: &[BigInt],
    q: &BigInt,
    bound: &BigInt,
) -> Result<ComplexityRecord> {
    if p.len() != a.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} polynomials against {} coefficients",
            p.len(),
            a.len()
        )));
    }
    if !q.is_positive() {
        return Err(Error::BadGcd("q must be positive".into()));
    }
    if gcd_vec(a.iter().chain(std::iter::once(q))) != BigInt::from(1) {
        return Err(Error::BadGcd("gcd(a, q) must be 1".into()));
    }
    let combo = p
        .iter()
        .zip(a)
        .fold(IntPoly::zero(), |acc, (pi, ai)| &acc + &pi.without_constant().scale(ai));
    let b = combo.integer_coeffs().ok_or(Error::NonIntegerCoefficients)?;
    let g = gcd_vec(b.iter().skip(1).chain(std::iter::once(q)));
    Ok(ComplexityRecord { ok: &g <= bound, g })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn check_pair_examples() {
        let xi = PolyMat::scalar_x(2);
        assert!(!check_pair(&xi, &big(&[1, 0]), &big(&[0, 1])).unwrap());
        let sym = fixtures::symmetric_quadratic();
        assert!(!check_pair(&sym, &big(&[1, 1]), &big(&[1, -1])).unwrap());
        let pw = fixtures::power_matrix();
        assert!(check_pair(&pw, &big(&[1, 1]), &big(&[1, 1])).unwrap());
        assert_eq!(check_pair(&pw, &big(&[0, 0]), &big(&[1, 1])), Err(Error::ZeroVector));
    }

    #[test]
    fn fleeing_matrix_examples() {
        let m = fleeing_matrix(&fixtures::power_matrix(), &big(&[1, 0])).unwrap();
        assert_eq!(m, IntMat::from_rows(&[[1, 0, 0, 0], [0, 0, 1, 0]]));
        let m = fleeing_matrix(&PolyMat::scalar_x(2), &big(&[1, 0])).unwrap();
        assert_eq!(m, IntMat::from_rows(&[[1], [0]]));
        let c = PolyMat::constant(&IntMat::identity(2));
        assert_eq!(fleeing_matrix(&c, &big(&[1, 0])).unwrap().cols(), 0);
    }

    #[test]
    fn independence_examples() {
        assert!(entries_independent(&fixtures::power_matrix(), &big(&[1, 0])).unwrap());
        assert!(!entries_independent(&PolyMat::scalar_x(2), &big(&[1, 0])).unwrap());
        assert!(!entries_independent(&fixtures::symmetric_quadratic(), &big(&[1, -1])).unwrap());
    }

    #[test]
    fn shells_are_primitive_and_normalized() {
        let s = primitive_shell(2, 1);
        assert_eq!(s, vec![big(&[0, 1]), big(&[1, -1]), big(&[1, 0]), big(&[1, 1])]);
        let s2 = primitive_shell(2, 2);
        assert!(s2.iter().all(|w| gcd_vec(w) == BigInt::from(1)));
        assert!(!s2.contains(&big(&[2, 2])));
        assert!(s2.contains(&big(&[1, 2])));
        assert_eq!(s2.len(), 4);
    }

    #[test]
    fn find_violation_examples() {
        let w = find_violation(&PolyMat::scalar_x(2), 1).unwrap();
        assert_eq!((w.v, w.w), (big(&[1, 0]), big(&[0, 1])));
        let w = find_violation(&fixtures::symmetric_quadratic(), 1).unwrap();
        assert_eq!((w.v, w.w), (big(&[1, 1]), big(&[1, -1])));
        assert!(find_violation(&fixtures::power_matrix(), 10).is_none());
    }

    #[test]
    fn certify_generic_examples() {
        let v = certify_generic(&fixtures::power_matrix(), 50, 1_000_000, 7);
        assert_eq!(v.status, VerdictStatus::CertifiedGenericRank);
        let v = certify_generic(&PolyMat::scalar_x(2), 50, 1_000_000, 7);
        assert_eq!(v.status, VerdictStatus::ViolationFound);
        let c = PolyMat::constant(&IntMat::from_rows(&[[1, 2], [3, 4]]));
        let v = certify_generic(&c, 5, 10, 7);
        assert_eq!(v.status, VerdictStatus::ViolationFound);
        let wit = v.witness.unwrap();
        assert!(!check_pair(&c, &wit.v, &wit.w).unwrap());
    }

    #[test]
    fn complexity_bound_examples() {
        // d = 2, ‖A − A(0)‖ = 1, ‖w‖∞ = 1
        let q = complexity_bound(&fixtures::power_matrix(), &big(&[1, 0])).unwrap();
        assert_eq!(q.q, BigInt::from(8));
        let one = PolyMat::from_int_entries(vec![vec![vec![0, 1]]]).unwrap();
        assert_eq!(complexity_bound(&one, &big(&[1])).unwrap().q, BigInt::from(1));
        // d = 2, ‖A − A(0)‖ = 3, ‖w‖∞ = 2
        let a = PolyMat::from_int_entries(vec![
            vec![vec![5, 3], vec![0, 0, 1]],
            vec![vec![0, 0, 0, -2], vec![1, 0, 0, 0, 1]],
        ])
        .unwrap();
        assert_eq!(complexity_bound(&a, &big(&[2, 1])).unwrap().q, BigInt::from(288));
        assert!(matches!(
            complexity_bound(&PolyMat::scalar_x(2), &big(&[1, 0])),
            Err(Error::HypothesisFailed(_))
        ));
    }

    #[test]
    fn multiplicative_complexity_examples() {
        let x = IntPoly::x();
        let x2 = IntPoly::from_ints(&[0, 0, 1]);
        let r = verify_multiplicative_complexity(std::slice::from_ref(&x), &big(&[5]), &BigInt::from(7), &BigInt::from(1)).unwrap();
        assert_eq!((r.g, r.ok), (BigInt::from(1), true));
        let r = verify_multiplicative_complexity(&[x.clone(), x2.clone()], &big(&[2, 3]), &BigInt::from(5), &BigInt::from(8)).unwrap();
        assert_eq!((r.g, r.ok), (BigInt::from(1), true));
        let r = verify_multiplicative_complexity(&[x.scale(&BigInt::from(2)), x2.scale(&BigInt::from(2))], &big(&[1, 1]), &BigInt::from(4), &BigInt::from(8)).unwrap();
        assert_eq!(r.g, BigInt::from(2));
        assert!(matches!(
            verify_multiplicative_complexity(&[x], &big(&[2]), &BigInt::from(4), &BigInt::from(1)),
            Err(Error::BadGcd(_))
        ));
    }

    #[test]
    fn full_check_tiers() {
        let r = check(&fixtures::power_matrix(), &CheckConfig { height: 4, trials: 20, coord_bound: 1000, seed: 1 });
        assert!(r.is_clear());
        assert!(r.has_status(VerdictStatus::ClearedToHeight));
        assert!(r.has_status(VerdictStatus::CertifiedGenericRank));
        let r = check(&PolyMat::scalar_x(2), &CheckConfig::with_seed(1));
        assert!(r.degree_shortcut);
        assert!(r.violation().is_some());
    }
}
