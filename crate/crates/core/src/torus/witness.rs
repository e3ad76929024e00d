use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::check::check_pair;
use crate::poly::PolyMat;
use crate::{Error, Result};

use super::points::{reduce_rational, TorusPointSet};

/// The open set `{u ∈ T^d : v·u mod 1 ∈ (lo, hi)}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Band {
    #[serde(with = "crate::serde_big::int_vec")]
    pub v: Vec<BigInt>,
    #[serde(with = "crate::serde_big::rat")]
    pub lo: BigRational,
    #[serde(with = "crate::serde_big::rat")]
    pub hi: BigRational,
}

impl Band {
    pub fn contains(&self, u: &[BigRational]) -> bool {
        let f = reduce_rational(
            &self
                .v
                .iter()
                .zip(u)
                .fold(BigRational::zero(), |acc, (a, x)| acc + BigRational::from_integer(a.clone()) * x),
        );
        self.lo < f && f < self.hi
    }
}

/// A finite set whose whole orbit under `A(n)` misses a fixed open band.
#[derive(Clone, Debug, PartialEq)]
pub struct NonGlasnerWitness {
    pub points: TorusPointSet,
    pub band: Band,
    /// `c = v·A(0)w`; the orbit of `w/m` stays on `v·u = c/m`.
    pub c: BigInt,
}

/// Points `w/m` (m = 1..size, duplicates dropped) and a band avoided by the
/// closure of `{c/m}`: the middle third of the longest gap of
/// `{c/m mod 1 : m ≤ size} ∪ {0}`.
pub fn non_glasner_witness(a: &PolyMat, v: &[BigInt], w: &[BigInt], size: usize) -> Result<NonGlasnerWitness> {
    if size == 0 {
        return Err(Error::InvalidInput("witness size must be positive".into()));
    }
    if check_pair(a, v, w)? {
        return Err(Error::NotAViolation);
    }
    let a0 = a.constant_term();
    let c: BigInt = v.iter().zip(a0.mul_vec(w)?).map(|(s, t)| s * t).sum();

    let mut pts: Vec<Vec<BigRational>> = Vec::new();
    for m in 1..=size {
        let p = super::points::rational_point(w, &BigInt::from(m));
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    let points = TorusPointSet::exact(w.len(), pts)?;

    let mut marks: Vec<BigRational> = (1..=size)
        .map(|m| reduce_rational(&BigRational::new(c.clone(), BigInt::from(m))))
        .collect();
    marks.push(BigRational::zero());
    marks.sort();
    marks.dedup();
    marks.push(BigRational::one());
    let (s, t) = marks
        .windows(2)
        .map(|p| (p[0].clone(), p[1].clone()))
        .fold(None::<(BigRational, BigRational)>, |best, (s, t)| match best {
            Some((bs, bt)) if &bt - &bs >= &t - &s => Some((bs, bt)),
            _ => Some((s, t)),
        })
        .expect("at least one gap");
    let third = (&t - &s) / BigRational::from_integer(3.into());
    let band = Band { v: v.to_vec(), lo: &s + &third, hi: &t - &third };
    Ok(NonGlasnerWitness { points, band, c })
}

impl NonGlasnerWitness {
    /// First `(n, point index)` in `[n_min, n_max]` with `A(n)·y` in the band.
    pub fn first_entry(&self, a: &PolyMat, n_min: i64, n_max: i64) -> Result<Option<(i64, usize)>> {
        let pts = self.points.exact_points().ok_or(Error::NotExact)?;
        for n in n_min..=n_max {
            let g = a.eval_i64(n)?;
            for (i, y) in pts.iter().enumerate() {
                if self.band.contains(&TorusPointSet::apply_exact_point(&g, y)) {
                    return Ok(Some((n, i)));
                }
            }
        }
        Ok(None)
    }

    /// Exact check that no `A(n)·y`, `n ∈ [n_min, n_max]`, enters the band.
    pub fn verify(&self, a: &PolyMat, n_min: i64, n_max: i64) -> Result<bool> {
        Ok(self.first_entry(a, n_min, n_max)?.is_none())
    }
}
