use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{IntPoly, PolyMat};
use crate::exact::IntMat;
use crate::{Error, Result};

/// Exponent vector, one entry per variable.
pub type Monomial = Vec<u32>;

/// Sparse multivariate polynomial in `n₁..n_N` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigRational::one())
    }

    /// The variable `n_i` (0-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(e, BigRational::one());
        p
    }

    /// Lifts a univariate polynomial into variable `i`.
    pub fn from_univariate(nvars: usize, i: usize, p: &IntPoly) -> Self {
        let mut out = Self::zero(nvars);
        for (k, c) in p.coeffs().into_iter().enumerate() {
            let mut e = vec![0; nvars];
            e[i] = k as u32;
            out.add_term(e, c);
        }
        out
    }

    fn add_term(&mut self, e: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn var_degree(&self, i: usize) -> u32 {
        self.terms.keys().map(|e| e[i]).max().unwrap_or(0)
    }

    pub fn max_var_degree(&self) -> u32 {
        (0..self.nvars).map(|i| self.var_degree(i)).max().unwrap_or(0)
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(BigRational::is_integer)
    }

    pub fn add(&self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut acc: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Monomial = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                *acc.entry(e).or_insert_with(BigRational::zero) += ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        MPoly { nvars: self.nvars, terms: acc }
    }

    pub fn eval(&self, x: &[BigInt]) -> BigRational {
        assert_eq!(x.len(), self.nvars, "point dimension");
        let mut total = BigRational::zero();
        for (e, c) in &self.terms {
            let m: BigInt = e
                .iter()
                .zip(x)
                .map(|(&k, xi)| num_traits::pow(xi.clone(), k as usize))
                .product();
            total += c * BigRational::from_integer(m);
        }
        total
    }

    pub fn eval_int(&self, x: &[BigInt]) -> Result<BigInt> {
        let v = self.eval(x);
        if v.is_integer() {
            Ok(v.to_integer())
        } else {
            Err(Error::NonIntegerValue(format!("{x:?}")))
        }
    }

    /// Integer-valued iff integral on the box `Π {0..deg_i}`.
    pub fn is_integer_valued(&self) -> bool {
        if self.is_integral() {
            return true;
        }
        let degs: Vec<u32> = (0..self.nvars).map(|i| self.var_degree(i)).collect();
        let mut point = vec![0u32; self.nvars];
        loop {
            let x: Vec<BigInt> = point.iter().map(|&p| BigInt::from(p)).collect();
            if !self.eval(&x).is_integer() {
                return false;
            }
            let mut i = 0;
            loop {
                if i == self.nvars {
                    return true;
                }
                if point[i] < degs[i] {
                    point[i] += 1;
                    break;
                }
                point[i] = 0;
                i += 1;
            }
        }
    }

    /// Replaces `n_i` with `x^{exps[i]}`.
    pub fn substitute(&self, exps: &[u64]) -> IntPoly {
        assert_eq!(exps.len(), self.nvars, "one exponent per variable");
        let mut acc: BTreeMap<usize, BigRational> = BTreeMap::new();
        for (e, c) in &self.terms {
            let deg: u64 = e.iter().zip(exps).map(|(&k, &x)| k as u64 * x).sum();
            *acc.entry(deg as usize).or_insert_with(BigRational::zero) += c;
        }
        let top = acc.keys().next_back().copied().unwrap_or(0);
        let mut dense = vec![BigRational::zero(); top + 1];
        for (k, c) in acc {
            dense[k] = c;
        }
        IntPoly::from_rationals_unchecked(&dense)
    }
}

/// Square matrix of [`MPoly`] entries sharing one variable set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPolyMat {
    dim: usize,
    nvars: usize,
    entries: Vec<MPoly>,
}

impl MPolyMat {
    pub fn new(dim: usize, nvars: usize, entries: Vec<MPoly>) -> Result<Self> {
        if entries.len() != dim * dim || entries.iter().any(|p| p.nvars != nvars) {
            return Err(Error::DimensionMismatch("multivariate polynomial matrix".into()));
        }
        if !entries.iter().all(MPoly::is_integer_valued) {
            return Err(Error::NotIntegerValued);
        }
        Ok(MPolyMat { dim, nvars, entries })
    }

    pub(crate) fn new_unchecked(dim: usize, nvars: usize, entries: Vec<MPoly>) -> Self {
        MPolyMat { dim, nvars, entries }
    }

    pub fn identity(dim: usize, nvars: usize) -> Self {
        let entries = (0..dim * dim)
            .map(|k| if k / dim == k % dim { MPoly::one(nvars) } else { MPoly::zero(nvars) })
            .collect();
        MPolyMat { dim, nvars, entries }
    }

    pub fn constant(m: &IntMat, nvars: usize) -> Self {
        assert!(m.is_square());
        let entries = m
            .entries()
            .iter()
            .map(|c| MPoly::constant(nvars, BigRational::from_integer(c.clone())))
            .collect();
        MPolyMat { dim: m.rows(), nvars, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn entry(&self, i: usize, j: usize) -> &MPoly {
        &self.entries[i * self.dim + j]
    }

    pub fn entries(&self) -> &[MPoly] {
        &self.entries
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(MPoly::is_integral)
    }

    pub fn max_var_degree(&self) -> u32 {
        self.entries.iter().map(MPoly::max_var_degree).max().unwrap_or(0)
    }

    /// Every exponent vector occurring in some entry.
    pub fn monomials(&self) -> BTreeSet<Monomial> {
        self.entries.iter().flat_map(|p| p.terms.keys().cloned()).collect()
    }

    pub fn mul(&self, rhs: &MPolyMat) -> MPolyMat {
        assert_eq!((self.dim, self.nvars), (rhs.dim, rhs.nvars));
        let d = self.dim;
        let entries = (0..d * d)
            .map(|k| {
                let (i, j) = (k / d, k % d);
                (0..d).fold(MPoly::zero(self.nvars), |acc, l| {
                    acc.add(&self.entry(i, l).mul(rhs.entry(l, j)))
                })
            })
            .collect();
        MPolyMat { dim: d, nvars: self.nvars, entries }
    }

    pub fn eval(&self, x: &[BigInt]) -> Result<IntMat> {
        if x.len() != self.nvars {
            return Err(Error::DimensionMismatch(format!(
                "{} values for {} variables",
                x.len(),
                self.nvars
            )));
        }
        let data = self.entries.iter().map(|p| p.eval_int(x)).collect::<Result<Vec<_>>>()?;
        IntMat::new(self.dim, self.dim, data)
    }

    /// Univariate matrix with `n_i ↦ x^{exps[i]}`.
    pub fn substitute(&self, exps: &[u64]) -> Result<PolyMat> {
        if exps.len() != self.nvars {
            return Err(Error::DimensionMismatch("one exponent per variable".into()));
        }
        PolyMat::new(self.dim, self.entries.iter().map(|p| p.substitute(exps)).collect())
    }
}
