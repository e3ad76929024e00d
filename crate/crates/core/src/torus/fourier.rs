use std::f64::consts::TAU;

use crate::exact::IntMat;
use crate::{Error, Result};

use super::points::TorusPointSet;

/// `D_M(t) = Σ_{|m| ≤ M} e(mt)`.
fn dirichlet(m_max: u64, t: f64) -> f64 {
    1.0 + 2.0 * (1..=m_max).map(|m| (TAU * m as f64 * t).cos()).sum::<f64>()
}

/// `(1/N) Σ_n Σ_{i,j} Σ_{m ∈ B(M)} e(m·γ_n(x_i − x_j))` with `M = ⌊d/ε⌋` and
/// `B(M)` the nonzero integer vectors of sup-norm at most `M`.
///
/// The inner sum over the box factors as `Π_k D_M(z_k) − 1`.
pub fn fourier_statistic(gammas: &[IntMat], y: &TorusPointSet, epsilon: f64) -> Result<f64> {
    if !(epsilon > 0.0 && epsilon.is_finite()) {
        return Err(Error::BadEpsilon(epsilon));
    }
    if gammas.is_empty() {
        return Err(Error::InvalidInput("no matrices given".into()));
    }
    let d = y.dim();
    let m_max = (d as f64 / epsilon).floor() as u64;
    let mut total = 0.0;
    for g in gammas {
        let img = y.apply(g)?.to_f64();
        for a in &img {
            for b in &img {
                let prod: f64 = a.iter().zip(b).map(|(s, t)| dirichlet(m_max, s - t)).product();
                total += prod - 1.0;
            }
        }
    }
    Ok(total / gammas.len() as f64)
}
