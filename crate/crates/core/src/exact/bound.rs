//! The gcd bound for integer combinations of independent vectors.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{factorial, gcd_vec, height, rank_rational, IntMat};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GcdBoundRecord {
    /// `gcd(a₁v₁ + … + a_dv_d, q)`
    #[serde(with = "crate::serde_big::int")]
    pub lhs: BigInt,
    /// `d! · (maxᵢ ‖vᵢ‖∞)^d`
    #[serde(with = "crate::serde_big::int")]
    pub rhs: BigInt,
    pub ok: bool,
}

/// Checks `gcd(Σ aᵢvᵢ, q) ≤ d!·(maxᵢ‖vᵢ‖∞)^d` for independent `v₁..v_d ∈ Z^r`
/// and `gcd(a, q) = 1`.
pub fn verify_gcd_bound(vs: &[Vec<BigInt>], a: &[BigInt], q: &BigInt) -> Result<GcdBoundRecord> {
    let d = vs.len();
    if a.len() != d {
        return Err(Error::DimensionMismatch(format!("{} coefficients for {d} vectors", a.len())));
    }
    if !q.is_positive() {
        return Err(Error::BadGcd("q must be positive".into()));
    }
    let r = vs.first().map_or(0, Vec::len);
    let m = IntMat::from_big_rows(vs.to_vec())?;
    if rank_rational(&m) < d {
        return Err(Error::DependentVectors);
    }
    if gcd_vec(a.iter().chain(std::iter::once(q))) != BigInt::from(1) {
        return Err(Error::BadGcd("gcd(a, q) must be 1".into()));
    }

    let combo: Vec<BigInt> = (0..r)
        .map(|k| vs.iter().zip(a).map(|(v, ai)| &v[k] * ai).sum())
        .collect();
    let lhs = gcd_vec(combo.iter().chain(std::iter::once(q)));
    let max_height = vs.iter().map(|v| height(v)).max().unwrap_or_else(BigInt::zero);
    let rhs = factorial(d) * num_traits::pow(max_height, d);
    Ok(GcdBoundRecord { ok: lhs <= rhs, lhs, rhs })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn run(vs: &[&[i64]], a: &[i64], q: i64) -> Result<GcdBoundRecord> {
        let vs: Vec<Vec<BigInt>> = vs.iter().map(|v| big(v)).collect();
        verify_gcd_bound(&vs, &big(a), &BigInt::from(q))
    }

    #[test]
    fn examples() {
        let r = run(&[&[1, 0], &[0, 1]], &[3, 5], 7).unwrap();
        assert_eq!((r.lhs, r.rhs, r.ok), (BigInt::from(1), BigInt::from(2), true));
        let r = run(&[&[2, 0], &[0, 2]], &[1, 1], 4).unwrap();
        assert_eq!((r.lhs, r.rhs, r.ok), (BigInt::from(2), BigInt::from(8), true));
        let r = run(&[&[1, 1], &[1, -1]], &[1, 0], 2).unwrap();
        assert_eq!((r.lhs, r.rhs, r.ok), (BigInt::from(1), BigInt::from(2), true));
    }

    #[test]
    fn errors() {
        assert_eq!(run(&[&[1, 2], &[2, 4]], &[1, 0], 3), Err(Error::DependentVectors));
        assert!(matches!(run(&[&[1, 0], &[0, 1]], &[2, 4], 6), Err(Error::BadGcd(_))));
        assert!(matches!(run(&[&[1, 0], &[0, 1]], &[1, 1], 0), Err(Error::BadGcd(_))));
    }
}
