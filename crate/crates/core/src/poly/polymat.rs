use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::IntPoly;
use crate::exact::IntMat;
use crate::{Error, Result};

/// Square matrix `A(x)` of integer-valued univariate polynomials.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMat {
    dim: usize,
    entries: Vec<IntPoly>,
}

impl PolyMat {
    pub fn new(dim: usize, entries: Vec<IntPoly>) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {dim}x{dim} polynomial matrix",
                entries.len()
            )));
        }
        if !entries.iter().all(IntPoly::is_integer_valued) {
            return Err(Error::NotIntegerValued);
        }
        Ok(PolyMat { dim, entries })
    }

    /// Rows of entries, each entry an ascending coefficient list.
    pub fn from_int_entries(rows: Vec<Vec<Vec<i64>>>) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch("polynomial matrix must be square".into()));
        }
        let entries = rows.into_iter().flatten().map(|c| IntPoly::from_ints(&c)).collect();
        Self::new(dim, entries)
    }

    /// `x · I_d`
    pub fn scalar_x(dim: usize) -> Self {
        let mut entries = vec![IntPoly::zero(); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = IntPoly::x();
        }
        PolyMat { dim, entries }
    }

    pub fn constant(m: &IntMat) -> Self {
        assert!(m.is_square());
        PolyMat {
            dim: m.rows(),
            entries: m.entries().iter().map(|c| IntPoly::constant(c.clone())).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize) -> &IntPoly {
        &self.entries[i * self.dim + j]
    }

    pub fn entries(&self) -> &[IntPoly] {
        &self.entries
    }

    /// Maximum entry degree; 0 for constant matrices.
    pub fn degree(&self) -> usize {
        self.entries.iter().filter_map(IntPoly::degree).max().unwrap_or(0)
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(IntPoly::is_integral)
    }

    pub fn common_denominator(&self) -> BigInt {
        self.entries.iter().fold(BigInt::one(), |acc, p| acc.lcm(p.denominator()))
    }

    pub fn eval(&self, n: &BigInt) -> Result<IntMat> {
        let data = self.entries.iter().map(|p| p.eval(n)).collect::<Result<Vec<_>>>()?;
        IntMat::new(self.dim, self.dim, data)
    }

    pub fn eval_i64(&self, n: i64) -> Result<IntMat> {
        self.eval(&BigInt::from(n))
    }

    /// `A(0)`
    pub fn constant_term(&self) -> IntMat {
        self.eval(&BigInt::zero()).expect("integer-valued entries are integral at 0")
    }

    /// `A(x) − A(0)`
    pub fn minus_constant(&self) -> PolyMat {
        PolyMat {
            dim: self.dim,
            entries: self.entries.iter().map(IntPoly::without_constant).collect(),
        }
    }

    pub fn transpose(&self) -> PolyMat {
        let d = self.dim;
        let entries = (0..d * d).map(|k| self.entry(k % d, k / d).clone()).collect();
        PolyMat { dim: d, entries }
    }

    /// `[B₀, …, B_D]` with `A(x) = Σ B_k x^k`; requires integer coefficients.
    pub fn coeff_matrices(&self) -> Result<Vec<IntMat>> {
        if !self.is_integral() {
            return Err(Error::NonIntegerCoefficients);
        }
        Ok(self.scaled_coeff_matrices().1)
    }

    /// `(L, [C₀, …, C_D])` with `A(x) = (1/L) Σ C_k x^k` and `L` the common
    /// denominator of all coefficients.
    pub fn scaled_coeff_matrices(&self) -> (BigInt, Vec<IntMat>) {
        let l = self.common_denominator();
        let mats = (0..=self.degree())
            .map(|k| {
                let data = self
                    .entries
                    .iter()
                    .map(|p| {
                        let c = p.coeff(k);
                        (c.numer() * (&l / c.denom())).clone()
                    })
                    .collect();
                IntMat::new(self.dim, self.dim, data).expect("square")
            })
            .collect();
        (l, mats)
    }

    fn check_len(&self, v: &[BigInt]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} for dimension {}",
                v.len(),
                self.dim
            )));
        }
        Ok(())
    }

    /// `A(x) w` as a column of polynomials.
    pub fn apply(&self, w: &[BigInt]) -> Result<Vec<IntPoly>> {
        self.check_len(w)?;
        Ok((0..self.dim)
            .map(|i| {
                (0..self.dim).fold(IntPoly::zero(), |acc, j| &acc + &self.entry(i, j).scale(&w[j]))
            })
            .collect())
    }

    /// `wᵗ A(x)` as a row of polynomials.
    pub fn row_combination(&self, w: &[BigInt]) -> Result<Vec<IntPoly>> {
        self.check_len(w)?;
        Ok((0..self.dim)
            .map(|j| {
                (0..self.dim).fold(IntPoly::zero(), |acc, i| &acc + &self.entry(i, j).scale(&w[i]))
            })
            .collect())
    }

    /// `vᵗ A(x) w`
    pub fn bilinear_poly(&self, v: &[BigInt], w: &[BigInt]) -> Result<IntPoly> {
        self.check_len(v)?;
        let col = self.apply(w)?;
        Ok(col
            .iter()
            .zip(v)
            .fold(IntPoly::zero(), |acc, (p, vi)| &acc + &p.scale(vi)))
    }

    /// `‖A(x)‖`: largest absolute coefficient. Requires integer coefficients.
    pub fn coeff_norm(&self) -> Result<BigInt> {
        self.entries
            .iter()
            .map(IntPoly::coeff_norm)
            .try_fold(BigInt::zero(), |acc, n| n.map(|n| acc.max(n)))
    }

    pub fn checked_mul(&self, rhs: &PolyMat) -> Result<PolyMat> {
        if self.dim != rhs.dim {
            return Err(Error::DimensionMismatch("polynomial matrix product".into()));
        }
        let d = self.dim;
        let entries = (0..d * d)
            .map(|k| {
                let (i, j) = (k / d, k % d);
                (0..d).fold(IntPoly::zero(), |acc, l| &acc + &(self.entry(i, l) * rhs.entry(l, j)))
            })
            .collect();
        Ok(PolyMat { dim: d, entries })
    }
}

impl fmt::Debug for PolyMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyMat{self}")
    }
}

impl fmt::Display for PolyMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.dim {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.dim {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.entry(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn powers() -> PolyMat {
        PolyMat::from_int_entries(vec![
            vec![vec![0, 1], vec![0, 0, 1]],
            vec![vec![0, 0, 0, 1], vec![0, 0, 0, 0, 1]],
        ])
        .unwrap()
    }

    #[test]
    fn evaluation_examples() {
        assert_eq!(PolyMat::scalar_x(2).eval_i64(3).unwrap(), IntMat::diagonal(&[3, 3]));
        assert_eq!(powers().eval_i64(2).unwrap(), IntMat::from_rows(&[[2, 4], [8, 16]]));
        let half = |p, q| BigRational::new(BigInt::from(p), BigInt::from(q));
        let c2 = IntPoly::from_rationals(&[half(0, 1), half(-1, 2), half(1, 2)]).unwrap();
        let a = PolyMat::new(2, vec![IntPoly::one(), c2, IntPoly::zero(), IntPoly::one()]).unwrap();
        assert_eq!(a.eval_i64(5).unwrap(), IntMat::from_rows(&[[1, 10], [0, 1]]));
    }

    #[test]
    fn coefficient_matrices() {
        let b = PolyMat::scalar_x(2).coeff_matrices().unwrap();
        assert_eq!(b, vec![IntMat::zeros(2, 2), IntMat::identity(2)]);
        let b = powers().coeff_matrices().unwrap();
        assert_eq!(b.len(), 5);
        assert!(b[0].is_zero());
        assert_eq!(b[1], IntMat::from_rows(&[[1, 0], [0, 0]]));
        assert_eq!(b[2], IntMat::from_rows(&[[0, 1], [0, 0]]));
        assert_eq!(b[3], IntMat::from_rows(&[[0, 0], [1, 0]]));
        assert_eq!(b[4], IntMat::from_rows(&[[0, 0], [0, 1]]));
        let c = IntMat::from_rows(&[[1, 2], [3, 4]]);
        assert_eq!(PolyMat::constant(&c).coeff_matrices().unwrap(), vec![c]);
    }

    #[test]
    fn bilinear_examples() {
        let p = PolyMat::scalar_x(2).bilinear_poly(&big(&[1, 0]), &big(&[0, 1])).unwrap();
        assert!(p.is_zero());
        let sym = PolyMat::from_int_entries(vec![
            vec![vec![0, 1], vec![0, 0, 1]],
            vec![vec![0, 0, 1], vec![0, 1]],
        ])
        .unwrap();
        assert!(sym.bilinear_poly(&big(&[1, 1]), &big(&[1, -1])).unwrap().is_zero());
        assert_eq!(powers().bilinear_poly(&big(&[1, 0]), &big(&[1, 0])).unwrap(), IntPoly::x());
        assert!(matches!(
            powers().bilinear_poly(&big(&[1]), &big(&[1, 0])),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn coeff_norm_examples() {
        assert_eq!(PolyMat::scalar_x(2).coeff_norm().unwrap(), BigInt::from(1));
        let a = PolyMat::from_int_entries(vec![vec![vec![-5, 0, 3]]]).unwrap();
        assert_eq!(a.coeff_norm().unwrap(), BigInt::from(5));
        assert_eq!(PolyMat::constant(&IntMat::zeros(2, 2)).coeff_norm().unwrap(), BigInt::from(0));
    }
}
