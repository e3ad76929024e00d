use serde::{Deserialize, Serialize};

use crate::poly::PolyMat;
use crate::{Error, Result};

use super::points::{circle_distance, torus_distance, TorusPointSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DensityStatus {
    Dense,
    NotDense,
    InconclusiveAtMesh,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DensityReport {
    pub epsilon: f64,
    pub dense: bool,
    pub status: DensityStatus,
    /// Largest distance from a grid point to the set.
    pub covering_radius_estimate: f64,
    /// Actual grid spacing: `1/c` with `c = ceil(1/mesh)` points per axis.
    pub grid_mesh: f64,
    /// Grid point farthest from the set, present when it lies beyond `epsilon`.
    pub certificate: Option<Vec<f64>>,
}

fn validate(epsilon: f64, mesh: f64) -> Result<usize> {
    if !(epsilon > 0.0 && epsilon < 0.5) {
        return Err(Error::BadEpsilon(epsilon));
    }
    if !(mesh > 0.0 && mesh <= epsilon) {
        return Err(Error::BadMesh(mesh));
    }
    let inv = 1.0 / mesh;
    let c = if (inv - inv.round()).abs() < 1e-9 { inv.round() } else { inv.ceil() };
    Ok(c as usize)
}

/// Odometer over the `c^d` grid points `j/c`.
struct Grid {
    c: usize,
    idx: Vec<usize>,
    point: Vec<f64>,
    done: bool,
}

impl Grid {
    fn new(c: usize, d: usize) -> Self {
        Grid { c, idx: vec![0; d], point: vec![0.0; d], done: false }
    }

    fn next(&mut self) -> Option<&[f64]> {
        if self.done {
            return None;
        }
        for (p, &i) in self.point.iter_mut().zip(&self.idx) {
            *p = i as f64 / self.c as f64;
        }
        let mut k = 0;
        loop {
            if k == self.idx.len() {
                self.done = true;
                break;
            }
            self.idx[k] += 1;
            if self.idx[k] < self.c {
                break;
            }
            self.idx[k] = 0;
            k += 1;
        }
        Some(&self.point)
    }
}

fn nearest(pts: &[Vec<f64>], g: &[f64]) -> f64 {
    pts.iter().map(|p| torus_distance(p, g)).fold(f64::INFINITY, f64::min)
}

/// Full grid scan of `Y` at the given mesh.
///
/// Dense when every grid point is within `epsilon − h/2` of `Y` (`h` the grid
/// spacing, so every point of the torus is within `epsilon`); not dense when
/// some grid point is farther than `epsilon`; inconclusive in between.
pub fn eps_dense(y: &TorusPointSet, epsilon: f64, mesh: f64) -> Result<DensityReport> {
    let c = validate(epsilon, mesh)?;
    let h = 1.0 / c as f64;
    let pts = y.to_f64();
    let mut worst = f64::NEG_INFINITY;
    let mut worst_point = Vec::new();
    let mut grid = Grid::new(c, y.dim());
    while let Some(g) = grid.next() {
        let r = nearest(&pts, g);
        if r > worst {
            worst = r;
            worst_point = g.to_vec();
        }
    }
    let status = if worst > epsilon {
        DensityStatus::NotDense
    } else if worst <= epsilon - h / 2.0 {
        DensityStatus::Dense
    } else {
        DensityStatus::InconclusiveAtMesh
    };
    Ok(DensityReport {
        epsilon,
        dense: status == DensityStatus::Dense,
        status,
        covering_radius_estimate: worst,
        grid_mesh: h,
        certificate: (status == DensityStatus::NotDense).then_some(worst_point),
    })
}

fn dense_1d(pts: &mut [f64], c: usize, threshold: f64) -> bool {
    if pts.is_empty() {
        return false;
    }
    pts.sort_by(|a, b| a.total_cmp(b));
    let k = pts.len();
    let mut ptr = 0;
    for j in 0..c {
        let g = j as f64 / c as f64;
        while ptr < k && pts[ptr] < g {
            ptr += 1;
        }
        let above = pts[ptr % k];
        let below = pts[(ptr + k - 1) % k];
        if circle_distance(above, g).min(circle_distance(below, g)) > threshold {
            return false;
        }
    }
    true
}

/// `eps_dense(..).dense` with early exit; the same grid and threshold.
pub fn is_eps_dense(y: &TorusPointSet, epsilon: f64, mesh: f64) -> Result<bool> {
    let c = validate(epsilon, mesh)?;
    let threshold = epsilon - 0.5 / c as f64;
    let mut pts = y.to_f64();
    Ok(dense_with(&mut pts, y.dim(), c, threshold))
}

fn dense_with(pts: &mut [Vec<f64>], d: usize, c: usize, threshold: f64) -> bool {
    if d == 1 {
        let mut flat: Vec<f64> = pts.iter().map(|p| p[0]).collect();
        return dense_1d(&mut flat, c, threshold);
    }
    let mut grid = Grid::new(c, d);
    while let Some(g) = grid.next() {
        if nearest(pts, g) > threshold {
            return false;
        }
    }
    true
}

/// Integers of `[n_min, n_max]` by increasing `|n|`, positive first on ties.
pub fn search_order(n_min: i64, n_max: i64) -> impl Iterator<Item = i64> {
    let start: i64 = if n_min > 0 {
        n_min
    } else if n_max < 0 {
        -n_max
    } else {
        0
    };
    let end = n_min.unsigned_abs().max(n_max.unsigned_abs()) as i64;
    (start..=end)
        .flat_map(|m| if m == 0 { vec![0] } else { vec![m, -m] })
        .filter(move |n| (n_min..=n_max).contains(n))
}

/// Smallest `|n|` in range (positive first) with `A(n)·Y` ε-dense at the
/// given mesh (default `epsilon/4`).
pub fn orbit_density_search(
    a: &PolyMat,
    y: &TorusPointSet,
    epsilon: f64,
    mesh: Option<f64>,
    n_min: i64,
    n_max: i64,
) -> Result<Option<i64>> {
    if a.dim() != y.dim() {
        return Err(Error::DimensionMismatch(format!(
            "matrix of size {} on T^{}",
            a.dim(),
            y.dim()
        )));
    }
    if n_min > n_max {
        return Err(Error::InvalidInput(format!("empty range [{n_min}, {n_max}]")));
    }
    let c = validate(epsilon, mesh.unwrap_or(epsilon / 4.0))?;
    let threshold = epsilon - 0.5 / c as f64;
    for n in search_order(n_min, n_max) {
        let g = a.eval_i64(n)?;
        let mut pts = y.apply(&g)?.to_f64();
        if dense_with(&mut pts, y.dim(), c, threshold) {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn grid_set(d: usize, m: i64) -> TorusPointSet {
        let mut pts = Vec::new();
        let total = (m as usize).pow(d as u32);
        for t in 0..total {
            let mut p = Vec::new();
            let mut r = t;
            for _ in 0..d {
                p.push(BigRational::new(((r % m as usize) as i64).into(), m.into()));
                r /= m as usize;
            }
            pts.push(p);
        }
        TorusPointSet::exact(d, pts).unwrap()
    }

    #[test]
    fn tenths_are_dense() {
        let y = grid_set(1, 10);
        let r = eps_dense(&y, 0.1, 0.05).unwrap();
        assert!(r.dense);
        assert!((r.covering_radius_estimate - 0.05).abs() < 1e-12);
        assert!(is_eps_dense(&y, 0.1, 0.05).unwrap());
    }

    #[test]
    fn singleton_not_dense() {
        let y = TorusPointSet::float(1, vec![vec![0.0]]).unwrap();
        let r = eps_dense(&y, 0.1, 0.025).unwrap();
        assert_eq!(r.status, DensityStatus::NotDense);
        assert!((r.certificate.unwrap()[0] - 0.5).abs() < 1e-12);
        assert!(!is_eps_dense(&y, 0.1, 0.025).unwrap());
    }

    #[test]
    fn planar_grid_covering_radius() {
        let m = 5;
        let y = grid_set(2, m);
        let eps = 1.0 / m as f64;
        let r = eps_dense(&y, eps, eps / 2.0).unwrap();
        assert!(r.dense);
        assert!(is_eps_dense(&y, eps, eps / 2.0).unwrap());
    }

    #[test]
    fn inconclusive_band() {
        // covering radius 0.05; threshold 0.06 - 0.0125 < 0.05 <= 0.06
        let y = grid_set(1, 10);
        let r = eps_dense(&y, 0.06, 0.025).unwrap();
        assert_eq!(r.status, DensityStatus::InconclusiveAtMesh);
        assert!(!r.dense && r.certificate.is_none());
    }

    #[test]
    fn parameter_errors() {
        let y = grid_set(1, 3);
        assert!(matches!(eps_dense(&y, 0.5, 0.1), Err(Error::BadEpsilon(_))));
        assert!(matches!(eps_dense(&y, 0.1, 0.2), Err(Error::BadMesh(_))));
        assert!(matches!(eps_dense(&y, 0.1, 0.0), Err(Error::BadMesh(_))));
    }

    #[test]
    fn order_of_search() {
        let v: Vec<i64> = search_order(-2, 3).collect();
        assert_eq!(v, vec![0, 1, -1, 2, -2, 3]);
        let v: Vec<i64> = search_order(2, 4).collect();
        assert_eq!(v, vec![2, 3, 4]);
        let v: Vec<i64> = search_order(-4, -3).collect();
        assert_eq!(v, vec![-3, -4]);
    }

    #[test]
    fn orbit_search_examples() {
        let a = PolyMat::scalar_x(1);
        let y = grid_set(1, 101);
        assert_eq!(orbit_density_search(&a, &y, 0.01, None, 1, 10).unwrap(), Some(1));
        let half = grid_set(1, 2);
        assert_eq!(orbit_density_search(&a, &half, 0.2, None, -50, 50).unwrap(), None);
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        let pts = (1..=25).map(|j| vec![crate::frac::frac(j as f64 * phi)]).collect();
        let y = TorusPointSet::float(1, pts).unwrap();
        assert!(orbit_density_search(&a, &y, 0.05, None, 1, 10_000).unwrap().is_some());
    }
}
