//! Unipotent generators, their symbolic powers, and the construction of a
//! univariate `A(x)` whose values lie in the generated group.

mod cayley;
mod construct;
mod irreducible;

pub use cayley::{cayley_affine_dim, cayley_span_dim};
pub use construct::{
    construct_polynomial, substitution_plan, ConstructOptions, Construction, SubstitutionPlan,
};
pub use irreducible::{certify_irreducible, IrreducibilityStatus, IrreducibilityVerdict};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::{determinant, IntMat};
use crate::poly::{IntPoly, MPoly, MPolyMat, PolyMat};
use crate::{Error, Result};

/// True iff `(u − I)^d = 0`. Non-square input is not unipotent.
pub fn is_unipotent(u: &IntMat) -> bool {
    if !u.is_square() {
        return false;
    }
    let d = u.rows();
    u.sub(&IntMat::identity(d)).pow(d as u32).is_zero()
}

/// Nonempty list of unipotent matrices in `SL_d(Z)` of one common size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnipotentSystem {
    dim: usize,
    generators: Vec<IntMat>,
}

impl UnipotentSystem {
    pub fn new(generators: Vec<IntMat>) -> Result<Self> {
        let first = generators
            .first()
            .ok_or_else(|| Error::InvalidInput("no generators".into()))?;
        let dim = first.rows();
        for g in &generators {
            if !g.is_square() || g.rows() != dim || dim == 0 {
                return Err(Error::DimensionMismatch(format!(
                    "generator of shape {}x{} in dimension {dim}",
                    g.rows(),
                    g.cols()
                )));
            }
            if !determinant(g).is_one() {
                return Err(Error::BadDeterminant);
            }
            if !is_unipotent(g) {
                return Err(Error::NotUnipotent);
            }
        }
        Ok(UnipotentSystem { dim, generators })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[IntMat] {
        &self.generators
    }

    /// Generators followed by their inverses.
    pub fn symmetrized(&self) -> Vec<IntMat> {
        let mut out = self.generators.clone();
        out.extend(self.generators.iter().map(unipotent_inverse));
        out
    }
}

fn nilpotent_powers(u: &IntMat) -> Vec<IntMat> {
    let d = u.rows();
    let nil = u.sub(&IntMat::identity(d));
    let mut out = vec![IntMat::identity(d)];
    for j in 1..d {
        out.push(out[j - 1].checked_mul(&nil).expect("square"));
    }
    out
}

/// `u⁻¹ = Σ_j (−1)^j (u − I)^j`.
fn unipotent_inverse(u: &IntMat) -> IntMat {
    let d = u.rows();
    nilpotent_powers(u)
        .into_iter()
        .enumerate()
        .fold(IntMat::zeros(d, d), |acc, (j, p)| if j % 2 == 0 { acc.add(&p) } else { acc.sub(&p) })
}

/// `u^n = Σ_{j<d} C(n, j)(u − I)^j` as a polynomial in `n_var` among `nvars`
/// variables. Exact for negative `n` too.
pub fn symbolic_power(u: &IntMat, var: usize, nvars: usize) -> Result<MPolyMat> {
    if !is_unipotent(u) {
        return Err(Error::NotUnipotent);
    }
    if var >= nvars {
        return Err(Error::InvalidInput(format!("variable {var} of {nvars}")));
    }
    let d = u.rows();
    let binoms: Vec<MPoly> = (0..d)
        .map(|j| MPoly::from_univariate(nvars, var, &IntPoly::binomial(j)))
        .collect();
    let powers = nilpotent_powers(u);
    let entries = (0..d * d)
        .map(|k| {
            powers.iter().zip(&binoms).fold(MPoly::zero(nvars), |acc, (p, b)| {
                let c = &p[(k / d, k % d)];
                if c.is_zero() {
                    acc
                } else {
                    acc.add(&b.mul(&MPoly::constant(nvars, c.clone().into())))
                }
            })
        })
        .collect();
    Ok(MPolyMat::new_unchecked(d, nvars, entries))
}

/// The univariate matrix `x ↦ u^x`.
pub fn power_polymat(u: &IntMat) -> Result<PolyMat> {
    if !is_unipotent(u) {
        return Err(Error::NotUnipotent);
    }
    let d = u.rows();
    let powers = nilpotent_powers(u);
    let entries = (0..d * d)
        .map(|k| {
            powers.iter().enumerate().fold(IntPoly::zero(), |acc, (j, p)| {
                &acc + &IntPoly::binomial(j).scale(&p[(k / d, k % d)])
            })
        })
        .collect();
    PolyMat::new(d, entries)
}

/// `Π_{i=1..N} u_i^{n_i}` with generators indexed cyclically.
pub fn word_product(sys: &UnipotentSystem, length: usize) -> Result<MPolyMat> {
    if length == 0 {
        return Err(Error::InvalidInput("word length must be positive".into()));
    }
    let m = sys.generators.len();
    let mut acc = MPolyMat::identity(sys.dim, length);
    for i in 0..length {
        acc = acc.mul(&symbolic_power(&sys.generators[i % m], i, length)?);
    }
    MPolyMat::new(sys.dim, length, acc.entries().to_vec())
}

/// Matrix of `X ↦ gXg⁻¹` on trace-zero 2×2 matrices in coordinates
/// `(x, y, z) ↔ [[z, −y], [x, −z]]`.
pub fn adjoint_rep(g: &IntMat) -> Result<IntMat> {
    if g.rows() != 2 || g.cols() != 2 {
        return Err(Error::DimensionMismatch("adjoint action needs a 2x2 matrix".into()));
    }
    if !determinant(g).is_one() {
        return Err(Error::BadDeterminant);
    }
    let (a, b, c, d) = (&g[(0, 0)], &g[(0, 1)], &g[(1, 0)], &g[(1, 1)]);
    let ginv = IntMat::from_big_rows(vec![vec![d.clone(), -b], vec![-c, a.clone()]])?;
    let basis = [
        IntMat::from_rows(&[[0, 0], [1, 0]]),
        IntMat::from_rows(&[[0, -1], [0, 0]]),
        IntMat::from_rows(&[[1, 0], [0, -1]]),
    ];
    let cols: Vec<Vec<BigInt>> = basis
        .iter()
        .map(|e| {
            let img = g.checked_mul(e)?.checked_mul(&ginv)?;
            Ok(vec![img[(1, 0)].clone(), -&img[(0, 1)], img[(0, 0)].clone()])
        })
        .collect::<Result<_>>()?;
    IntMat::from_columns(3, &cols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| x.into()).collect()
    }

    #[test]
    fn unipotency() {
        assert!(is_unipotent(&IntMat::from_rows(&[[1, 1], [0, 1]])));
        assert!(!is_unipotent(&IntMat::from_rows(&[[2, 0], [0, 1]])));
        assert!(is_unipotent(&IntMat::from_rows(&[[1, 2], [0, 1]])));
        assert_eq!(UnipotentSystem::new(vec![IntMat::from_rows(&[[2, 0], [0, 1]])]), Err(Error::BadDeterminant));
        assert_eq!(
            UnipotentSystem::new(vec![IntMat::from_rows(&[[0, 1], [-1, 0]])]),
            Err(Error::NotUnipotent)
        );
    }

    #[test]
    fn symbolic_powers() {
        let u = IntMat::from_rows(&[[1, 2], [0, 1]]);
        let p = power_polymat(&u).unwrap();
        assert_eq!(p.entry(0, 1), &IntPoly::from_ints(&[0, 2]));
        assert_eq!(power_polymat(&IntMat::identity(3)).unwrap(), PolyMat::constant(&IntMat::identity(3)));
        let j = IntMat::from_rows(&[[1, 1, 0], [0, 1, 1], [0, 0, 1]]);
        let s = symbolic_power(&j, 0, 1).unwrap();
        let inv = unipotent_inverse(&j);
        for n in -6i64..=6 {
            let expect = if n >= 0 { j.pow(n as u32) } else { inv.pow((-n) as u32) };
            assert_eq!(s.eval(&big(&[n])).unwrap(), expect);
        }
    }

    #[test]
    fn two_letter_word() {
        let w = word_product(&fixtures::sl2_pair(), 2).unwrap();
        for (n1, n2) in [(0, 0), (2, -3), (-1, 5)] {
            let expect = IntMat::from_rows(&[[1 + n1 * n2, n1], [n2, 1]]);
            assert_eq!(w.eval(&big(&[n1, n2])).unwrap(), expect);
        }
        assert!(w.is_integral());
    }

    #[test]
    fn adjoint_matrices() {
        assert_eq!(adjoint_rep(&IntMat::identity(2)).unwrap(), IntMat::identity(3));
        let ad = adjoint_rep(&IntMat::from_rows(&[[1, 1], [0, 1]])).unwrap();
        // (x, y, z) ↦ (x, y + 2z + x, z + x)
        assert_eq!(ad, IntMat::from_rows(&[[1, 0, 0], [1, 1, 2], [1, 0, 1]]));
        assert!(is_unipotent(&ad));
        let g = IntMat::from_rows(&[[2, 1], [1, 1]]);
        let h = IntMat::from_rows(&[[1, 3], [0, 1]]);
        assert_eq!(
            adjoint_rep(&g.checked_mul(&h).unwrap()).unwrap(),
            adjoint_rep(&g).unwrap().checked_mul(&adjoint_rep(&h).unwrap()).unwrap()
        );
        assert_eq!(adjoint_rep(&IntMat::from_rows(&[[2, 0], [0, 1]])), Err(Error::BadDeterminant));
    }
}
