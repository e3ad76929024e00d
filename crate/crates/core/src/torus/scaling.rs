use serde::{Deserialize, Serialize};

use crate::poly::PolyMat;
use crate::seed;
use crate::{Error, Result};

use super::density::orbit_density_search;
use super::points::TorusPointSet;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScalingConfig {
    pub epsilons: Vec<f64>,
    pub samples: usize,
    pub seed: u64,
    pub n_min: i64,
    pub n_max: i64,
    /// Give up when no `k ≤ k_max` succeeds.
    pub k_max: usize,
}

impl ScalingConfig {
    pub fn new(epsilons: Vec<f64>, samples: usize, seed: u64) -> Self {
        ScalingConfig { epsilons, samples, seed, n_min: 1, n_max: 10_000, k_max: 4096 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScalingRow {
    pub epsilon: f64,
    pub k_min: Option<usize>,
    /// `⌈1/(2ε)⌉`: fewer points cannot be ε-dense on a circle coordinate.
    pub floor: usize,
    pub respects_floor: bool,
    pub searches: usize,
}

/// Smallest `⌈1/(2ε)⌉` consistent with floating error in `1/(2ε)`.
pub(crate) fn floor_for(epsilon: f64) -> usize {
    let x = 0.5 / epsilon;
    if (x - x.round()).abs() < 1e-9 {
        x.round() as usize
    } else {
        x.ceil() as usize
    }
}

/// For each ε, the least `k` found by doubling then bisection such that every
/// one of `samples` seeded uniform `k`-point sets has an ε-dense image
/// `A(n)·Y` for some `n` in range. Point sets depend on `(seed, k, sample)`
/// only, so they are shared across ε.
pub fn k_min_scaling(a: &PolyMat, cfg: &ScalingConfig) -> Result<Vec<ScalingRow>> {
    if cfg.samples == 0 || cfg.k_max == 0 {
        return Err(Error::InvalidInput("samples and k_max must be positive".into()));
    }
    if cfg.n_min > cfg.n_max {
        return Err(Error::InvalidInput(format!("empty range [{}, {}]", cfg.n_min, cfg.n_max)));
    }
    let d = a.dim();
    let mut rows = Vec::with_capacity(cfg.epsilons.len());
    for &eps in &cfg.epsilons {
        if !(eps > 0.0 && eps < 0.5) {
            return Err(Error::BadEpsilon(eps));
        }
        let mut searches = 0usize;
        let mut succeeds = |k: usize| -> Result<bool> {
            for s in 0..cfg.samples {
                let mut rng = seed::rng(cfg.seed, &[k as u64, s as u64]);
                let y = TorusPointSet::random_float(d, k, &mut rng);
                searches += 1;
                if orbit_density_search(a, &y, eps, None, cfg.n_min, cfg.n_max)?.is_none() {
                    return Ok(false);
                }
            }
            Ok(true)
        };
        let mut lo = 0usize; // largest k known to fail
        let mut hi = None;
        let mut k = 1usize;
        while k <= cfg.k_max {
            if succeeds(k)? {
                hi = Some(k);
                break;
            }
            lo = k;
            k *= 2;
        }
        if hi.is_none() && lo < cfg.k_max && succeeds(cfg.k_max)? {
            hi = Some(cfg.k_max);
        }
        if let Some(mut h) = hi {
            while h - lo > 1 {
                let mid = lo + (h - lo) / 2;
                if succeeds(mid)? {
                    h = mid;
                } else {
                    lo = mid;
                }
            }
            hi = Some(h);
        }
        let floor = floor_for(eps);
        rows.push(ScalingRow {
            epsilon: eps,
            k_min: hi,
            floor,
            respects_floor: hi.is_none_or(|k| k >= floor),
            searches,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floors() {
        assert_eq!(floor_for(0.2), 3);
        assert_eq!(floor_for(0.1), 5);
        assert_eq!(floor_for(0.05), 10);
        assert_eq!(floor_for(0.3), 2);
    }

    #[test]
    fn small_run_is_deterministic() {
        let a = PolyMat::scalar_x(1);
        let mut cfg = ScalingConfig::new(vec![0.2], 2, 7);
        cfg.n_max = 200;
        let r1 = k_min_scaling(&a, &cfg).unwrap();
        let r2 = k_min_scaling(&a, &cfg).unwrap();
        assert_eq!(r1, r2);
        assert!(r1[0].respects_floor);
        assert!(r1[0].k_min.is_some());
    }
}
