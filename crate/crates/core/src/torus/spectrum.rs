use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

use super::points::TorusPointSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumEntry {
    #[serde(with = "crate::serde_big::int")]
    pub q: BigInt,
    pub count: u64,
}

/// Tally of ordered pairs `i ≠ j` by the torsion order of `x_i − x_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairSpectrum {
    pub d: usize,
    pub k: usize,
    pub counts: Vec<SpectrumEntry>,
    /// Ordered pairs (diagonal included) whose difference is torsion.
    pub rational_pairs: u64,
}

/// Torsion order of a rational point of `T^d`: the lcm of its denominators.
pub(crate) fn torsion_order(diff: &[BigRational]) -> BigInt {
    diff.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

pub fn pair_spectrum(y: &TorusPointSet) -> Result<PairSpectrum> {
    let pts = y.exact_points().ok_or(Error::NotExact)?;
    let mut map: BTreeMap<BigInt, u64> = BTreeMap::new();
    for (i, a) in pts.iter().enumerate() {
        for (j, b) in pts.iter().enumerate() {
            if i == j {
                continue;
            }
            let diff: Vec<BigRational> = a.iter().zip(b).map(|(s, t)| s - t).collect();
            *map.entry(torsion_order(&diff)).or_insert(0) += 1;
        }
    }
    let k = pts.len();
    Ok(PairSpectrum {
        d: y.dim(),
        k,
        counts: map.into_iter().map(|(q, count)| SpectrumEntry { q, count }).collect(),
        rational_pairs: (k * k) as u64,
    })
}

impl PairSpectrum {
    /// `h_q`; `h_1` is the diagonal count `k`.
    pub fn h(&self, q: &BigInt) -> u64 {
        if q.is_one() {
            return self.k as u64;
        }
        self.counts.iter().find(|e| &e.q == q).map_or(0, |e| e.count)
    }

    /// `H_m = Σ_{q=2..m} h_q`.
    pub fn cumulative(&self, m: &BigInt) -> u64 {
        self.counts.iter().take_while(|e| &e.q <= m).map(|e| e.count).sum()
    }

    /// First `(m, H_m, k·m^{d+1})` with `H_m > k·m^{d+1}`, if any.
    ///
    /// `H_m` only jumps at recorded `q` while the bound grows with `m`, so
    /// checking those points covers every `m`.
    pub fn counting_bound_violation(&self) -> Option<(BigInt, u64, BigInt)> {
        let mut running = 0u64;
        for e in &self.counts {
            running += e.count;
            let bound = BigInt::from(self.k) * num_traits::pow(e.q.clone(), self.d + 1);
            if BigInt::from(running) > bound {
                return Some((e.q.clone(), running, bound));
            }
        }
        None
    }

    pub fn counting_bound_holds(&self) -> bool {
        self.counting_bound_violation().is_none()
    }
}

/// `Σ_{q≥2} h_q q^{-r}` over the recorded orders.
pub fn weighted_spectrum_sum(s: &PairSpectrum, r: f64) -> Result<f64> {
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::InvalidInput(format!("weight exponent {r} must be positive")));
    }
    Ok(s.counts
        .iter()
        .map(|e| e.count as f64 * e.q.to_f64().unwrap_or(f64::INFINITY).powf(-r))
        .sum())
}
