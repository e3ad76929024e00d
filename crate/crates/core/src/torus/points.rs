use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::exact::IntMat;
use crate::frac::{frac, frac_mul};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PointKind {
    Exact,
    Float,
}

#[derive(Clone, Debug, PartialEq)]
enum Coords {
    Exact(Vec<Vec<BigRational>>),
    Float(Vec<Vec<f64>>),
}

/// Points of `T^d`, all exact rationals in `[0, 1)` or all doubles in `[0, 1)`.
///
/// Sets built through the public constructors hold distinct points. Images
/// under [`TorusPointSet::apply`] may repeat points, since a matrix need not
/// be injective on the torus.
#[derive(Clone, Debug, PartialEq)]
pub struct TorusPointSet {
    dim: usize,
    coords: Coords,
}

pub(crate) fn reduce_rational(x: &BigRational) -> BigRational {
    x - x.floor()
}

/// Distance on the circle `R/Z`.
pub fn circle_distance(a: f64, b: f64) -> f64 {
    let t = (a - b).abs().rem_euclid(1.0);
    t.min(1.0 - t)
}

/// ℓ∞ torus distance.
pub fn torus_distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| circle_distance(*x, *y)).fold(0.0, f64::max)
}

fn check_dims<T>(dim: usize, points: &[Vec<T>]) -> Result<()> {
    if dim == 0 {
        return Err(Error::InvalidInput("dimension must be positive".into()));
    }
    if let Some(p) = points.iter().find(|p| p.len() != dim) {
        return Err(Error::DimensionMismatch(format!(
            "point with {} coordinates in dimension {dim}",
            p.len()
        )));
    }
    Ok(())
}

impl TorusPointSet {
    pub fn exact(dim: usize, points: Vec<Vec<BigRational>>) -> Result<Self> {
        check_dims(dim, &points)?;
        let mut reduced: Vec<Vec<BigRational>> = Vec::with_capacity(points.len());
        for p in points {
            let p: Vec<BigRational> = p.iter().map(reduce_rational).collect();
            if reduced.contains(&p) {
                return Err(Error::InvalidInput("duplicate point".into()));
            }
            reduced.push(p);
        }
        Ok(TorusPointSet { dim, coords: Coords::Exact(reduced) })
    }

    pub fn float(dim: usize, points: Vec<Vec<f64>>) -> Result<Self> {
        check_dims(dim, &points)?;
        let mut reduced: Vec<Vec<f64>> = Vec::with_capacity(points.len());
        for p in points {
            if p.iter().any(|x| !x.is_finite()) {
                return Err(Error::InvalidInput("non-finite coordinate".into()));
            }
            let p: Vec<f64> = p.into_iter().map(frac).collect();
            if reduced.contains(&p) {
                return Err(Error::InvalidInput("duplicate point".into()));
            }
            reduced.push(p);
        }
        Ok(TorusPointSet { dim, coords: Coords::Float(reduced) })
    }

    /// `k` independent uniform points; resampled on the (unlikely) collision.
    pub fn random_float<R: Rng>(dim: usize, k: usize, rng: &mut R) -> Self {
        let mut pts: Vec<Vec<f64>> = Vec::with_capacity(k);
        while pts.len() < k {
            let p: Vec<f64> = (0..dim).map(|_| rng.gen::<f64>()).collect();
            if !pts.contains(&p) {
                pts.push(p);
            }
        }
        TorusPointSet { dim, coords: Coords::Float(pts) }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        match &self.coords {
            Coords::Exact(p) => p.len(),
            Coords::Float(p) => p.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn kind(&self) -> PointKind {
        match self.coords {
            Coords::Exact(_) => PointKind::Exact,
            Coords::Float(_) => PointKind::Float,
        }
    }

    pub fn exact_points(&self) -> Option<&[Vec<BigRational>]> {
        match &self.coords {
            Coords::Exact(p) => Some(p),
            Coords::Float(_) => None,
        }
    }

    pub fn float_points(&self) -> Option<&[Vec<f64>]> {
        match &self.coords {
            Coords::Float(p) => Some(p),
            Coords::Exact(_) => None,
        }
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        match &self.coords {
            Coords::Float(p) => p.clone(),
            Coords::Exact(p) => p
                .iter()
                .map(|x| x.iter().map(|c| c.to_f64().unwrap_or(0.0)).collect())
                .collect(),
        }
    }

    /// Image `{g·x mod 1}`, computed exactly for rational points and with exact
    /// dyadic range reduction for doubles.
    pub fn apply(&self, g: &IntMat) -> Result<TorusPointSet> {
        if g.rows() != self.dim || g.cols() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix on T^{}",
                g.rows(),
                g.cols(),
                self.dim
            )));
        }
        let coords = match &self.coords {
            Coords::Exact(pts) => Coords::Exact(
                pts.iter()
                    .map(|x| {
                        (0..self.dim)
                            .map(|i| {
                                let s = g.row(i).iter().zip(x).fold(BigRational::zero(), |acc, (a, c)| {
                                    if a.is_zero() {
                                        acc
                                    } else {
                                        acc + BigRational::from_integer(a.clone()) * c
                                    }
                                });
                                reduce_rational(&s)
                            })
                            .collect()
                    })
                    .collect(),
            ),
            Coords::Float(pts) => Coords::Float(
                pts.iter()
                    .map(|x| {
                        (0..self.dim)
                            .map(|i| frac(g.row(i).iter().zip(x).map(|(a, &c)| frac_mul(a, c)).sum()))
                            .collect()
                    })
                    .collect(),
            ),
        };
        Ok(TorusPointSet { dim: self.dim, coords })
    }

    /// Exact image of one point under `g`, reduced mod 1.
    pub(crate) fn apply_exact_point(g: &IntMat, x: &[BigRational]) -> Vec<BigRational> {
        (0..g.rows())
            .map(|i| {
                let s = g
                    .row(i)
                    .iter()
                    .zip(x)
                    .fold(BigRational::zero(), |acc, (a, c)| acc + BigRational::from_integer(a.clone()) * c);
                reduce_rational(&s)
            })
            .collect()
    }
}

pub(crate) fn rational_point(num: &[BigInt], den: &BigInt) -> Vec<BigRational> {
    num.iter()
        .map(|x| reduce_rational(&BigRational::new(x.clone(), den.clone())))
        .collect()
}
