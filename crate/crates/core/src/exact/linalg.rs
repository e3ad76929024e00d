//! Ranks, determinants, kernels and incremental rational spans.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::snf::snf_with_left_inverse;
use super::{gcd_vec, IntMat};

/// Fraction-free elimination; returns the echelonized copy and its rank.
fn bareiss(m: &IntMat) -> (IntMat, usize, bool) {
    let (r, c) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut prev = BigInt::one();
    let mut rank = 0;
    let mut flipped = false;
    for col in 0..c {
        if rank == r {
            break;
        }
        let Some(p) = (rank..r).find(|&i| !a[(i, col)].is_zero()) else {
            continue;
        };
        if p != rank {
            a.swap_rows(p, rank);
            flipped = !flipped;
        }
        let pivot = a[(rank, col)].clone();
        for i in rank + 1..r {
            let lead = a[(i, col)].clone();
            for j in col + 1..c {
                let v = (&a[(i, j)] * &pivot - &lead * &a[(rank, j)]) / &prev;
                a[(i, j)] = v;
            }
            a[(i, col)] = BigInt::zero();
        }
        // Rows above stay untouched; entries left of `col` in lower rows are already zero.
        prev = pivot;
        rank += 1;
    }
    (a, rank, flipped)
}

/// Rank over Q.
pub fn rank_rational(m: &IntMat) -> usize {
    if m.rows() > m.cols() {
        return bareiss(&m.transpose()).1;
    }
    bareiss(m).1
}

const MERSENNE_61: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
}

/// Rank modulo the prime 2⁶¹ − 1. Never exceeds [`rank_rational`].
pub fn rank_mod_p(m: &IntMat) -> usize {
    let p = MERSENNE_61;
    let big_p = BigInt::from(p);
    let (r, c) = (m.rows(), m.cols());
    let mut a: Vec<Vec<u64>> = (0..r)
        .map(|i| {
            m.row(i)
                .iter()
                .map(|x| x.mod_floor(&big_p).to_u64().expect("reduced"))
                .collect()
        })
        .collect();
    let mut rank = 0;
    for col in 0..c {
        if rank == r {
            break;
        }
        let Some(piv) = (rank..r).find(|&i| a[i][col] != 0) else {
            continue;
        };
        a.swap(piv, rank);
        let inv = powmod(a[rank][col], p - 2, p);
        for i in rank + 1..r {
            if a[i][col] == 0 {
                continue;
            }
            let f = mulmod(a[i][col], inv, p);
            for j in col..c {
                let t = mulmod(f, a[rank][j], p);
                a[i][j] = (a[i][j] + p - t) % p;
            }
        }
        rank += 1;
    }
    rank
}

pub fn determinant(m: &IntMat) -> BigInt {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.rows();
    if n == 0 {
        return BigInt::one();
    }
    let (a, rank, flipped) = bareiss(m);
    if rank < n {
        return BigInt::zero();
    }
    let det = a[(n - 1, n - 1)].clone();
    if flipped {
        -det
    } else {
        det
    }
}

/// Lattice basis of `{v ∈ Z^rows : vᵗ M = 0}`; each vector primitive with
/// first nonzero entry positive. Empty iff the rows are independent over Q.
pub fn left_kernel_integer(m: &IntMat) -> Vec<Vec<BigInt>> {
    if m.cols() == 0 {
        return (0..m.rows())
            .map(|i| {
                let mut e = vec![BigInt::zero(); m.rows()];
                e[i] = BigInt::one();
                e
            })
            .collect();
    }
    let (snf, left_inv) = snf_with_left_inverse(m);
    let rank = snf.rank();
    (rank..m.rows())
        .map(|i| normalize_sign(left_inv.row(i).to_vec()))
        .collect()
}

pub(crate) fn normalize_sign(mut v: Vec<BigInt>) -> Vec<BigInt> {
    if v.iter().find(|x| !x.is_zero()).is_some_and(Signed::is_negative) {
        for x in &mut v {
            *x = -std::mem::take(x);
        }
    }
    v
}

/// Inverse over Z when it exists (|det| = 1), via Gauss–Jordan over Q.
pub fn inverse_integral(m: &IntMat) -> Option<IntMat> {
    if !m.is_square() {
        return None;
    }
    let n = m.rows();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigRational> =
                m.row(i).iter().map(|x| BigRational::from_integer(x.clone())).collect();
            row.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&i| !a[i][col].is_zero())?;
        a.swap(piv, col);
        let inv = a[col][col].recip();
        for x in &mut a[col] {
            *x = &*x * &inv;
        }
        for i in 0..n {
            if i != col && !a[i][col].is_zero() {
                let f = a[i][col].clone();
                for j in 0..2 * n {
                    let t = &f * &a[col][j];
                    a[i][j] -= t;
                }
            }
        }
    }
    let mut out = IntMat::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let x = &a[i][n + j];
            if !x.is_integer() {
                return None;
            }
            out[(i, j)] = x.to_integer();
        }
    }
    Some(out)
}

/// Subspace of Q^dim maintained in reduced row echelon form.
#[derive(Clone, Debug)]
pub struct RationalSpan {
    dim: usize,
    rows: Vec<Vec<BigRational>>,
    pivots: Vec<usize>,
}

impl RationalSpan {
    pub fn new(dim: usize) -> Self {
        RationalSpan { dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rank() == self.dim
    }

    fn reduce(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(v.len(), self.dim, "vector length");
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[BigRational]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    pub fn contains_int(&self, v: &[BigInt]) -> bool {
        self.contains(&to_rational(v))
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[BigRational]) -> bool {
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].recip();
        for x in &mut v {
            *x = &*x * &inv;
        }
        for row in &mut self.rows {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for (x, y) in row.iter_mut().zip(&v) {
                    *x -= &f * y;
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    pub fn insert_int(&mut self, v: &[BigInt]) -> bool {
        self.insert(&to_rational(v))
    }

    pub fn basis(&self) -> &[Vec<BigRational>] {
        &self.rows
    }

    /// Basis rows scaled to primitive integer vectors.
    pub fn integer_basis(&self) -> Vec<Vec<BigInt>> {
        self.rows.iter().map(|r| primitive_integer(r)).collect()
    }
}

pub(crate) fn to_rational(v: &[BigInt]) -> Vec<BigRational> {
    v.iter().map(|x| BigRational::from_integer(x.clone())).collect()
}

/// Smallest integer multiple of a rational vector with gcd 1, sign preserved.
pub(crate) fn primitive_integer(v: &[BigRational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * BigRational::from_integer(l.clone())).to_integer()).collect();
    let g = gcd_vec(&ints);
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}
