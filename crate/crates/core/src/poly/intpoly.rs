use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Univariate polynomial `(Σ numᵢ xⁱ) / den` with rational coefficients.
///
/// Canonical: no trailing zero numerators, `den > 0`, and `den` coprime to the
/// content of the numerators. Integer coefficients iff `den == 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    num: Vec<BigInt>,
    den: BigInt,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { num: Vec::new(), den: BigInt::one() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut num = vec![BigInt::zero(); k + 1];
        num[k] = c;
        Self::from_coeffs(num)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Integer coefficients, ascending degree.
    pub fn from_coeffs(num: Vec<BigInt>) -> Self {
        Self::normalized(num, BigInt::one())
    }

    /// Rational coefficients; rejected unless the result is integer-valued.
    pub fn from_rationals(coeffs: &[BigRational]) -> Result<Self> {
        let p = Self::from_rationals_unchecked(coeffs);
        if p.is_integer_valued() {
            Ok(p)
        } else {
            Err(Error::NotIntegerValued)
        }
    }

    pub(crate) fn from_rationals_unchecked(coeffs: &[BigRational]) -> Self {
        let den = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        Self::normalized(num, den)
    }

    fn normalized(mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        while num.last().is_some_and(Zero::is_zero) {
            num.pop();
        }
        if num.is_empty() {
            return Self::zero();
        }
        if den.is_negative() {
            den = -den;
            for c in &mut num {
                *c = -std::mem::take(c);
            }
        }
        let g = num.iter().fold(den.clone(), |acc, c| acc.gcd(c));
        if !g.is_one() {
            for c in &mut num {
                *c /= &g;
            }
            den /= &g;
        }
        IntPoly { num, den }
    }

    /// `C(x, j) = x(x−1)…(x−j+1)/j!`
    pub fn binomial(j: usize) -> Self {
        let mut num = IntPoly::one();
        for i in 0..j {
            num = &num * &IntPoly::from_coeffs(vec![-BigInt::from(i), BigInt::one()]);
        }
        let fact = crate::exact::factorial(j);
        Self::normalized(num.num, fact)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.num.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        match self.num.get(k) {
            Some(c) => BigRational::new(c.clone(), self.den.clone()),
            None => BigRational::zero(),
        }
    }

    pub fn coeffs(&self) -> Vec<BigRational> {
        (0..self.num.len()).map(|k| self.coeff(k)).collect()
    }

    pub fn numerators(&self) -> &[BigInt] {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    pub fn integer_coeffs(&self) -> Option<&[BigInt]> {
        self.is_integral().then_some(&self.num[..])
    }

    /// Finite-difference criterion: integer-valued iff integral at `0..=deg`.
    pub fn is_integer_valued(&self) -> bool {
        if self.is_integral() {
            return true;
        }
        let deg = self.degree().unwrap_or(0);
        (0..=deg).all(|n| self.numerator_at(&BigInt::from(n)).is_multiple_of(&self.den))
    }

    fn numerator_at(&self, n: &BigInt) -> BigInt {
        self.num.iter().rev().fold(BigInt::zero(), |acc, c| acc * n + c)
    }

    pub fn eval(&self, n: &BigInt) -> Result<BigInt> {
        let top = self.numerator_at(n);
        if self.den.is_one() {
            return Ok(top);
        }
        let (q, r) = top.div_rem(&self.den);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NonIntegerValue(n.to_string()))
        }
    }

    pub fn eval_i64(&self, n: i64) -> Result<BigInt> {
        self.eval(&BigInt::from(n))
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let top = self
            .num
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()));
        top / BigRational::from_integer(self.den.clone())
    }

    pub fn constant_term(&self) -> BigRational {
        self.coeff(0)
    }

    /// `p(x) − p(0)`
    pub fn without_constant(&self) -> Self {
        let mut num = self.num.clone();
        if let Some(c) = num.first_mut() {
            *c = BigInt::zero();
        }
        Self::normalized(num, self.den.clone())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::normalized(self.num.iter().map(|x| x * c).collect(), self.den.clone())
    }

    /// Maximum absolute coefficient; requires integer coefficients.
    pub fn coeff_norm(&self) -> Result<BigInt> {
        let c = self.integer_coeffs().ok_or(Error::NonIntegerCoefficients)?;
        Ok(crate::exact::height(c))
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let l = self.den.lcm(&rhs.den);
        let (fa, fb) = (&l / &self.den, &l / &rhs.den);
        let n = self.num.len().max(rhs.num.len());
        let num = (0..n)
            .map(|k| {
                let a = self.num.get(k).map_or_else(BigInt::zero, |c| c * &fa);
                let b = rhs.num.get(k).map_or_else(BigInt::zero, |c| c * &fb);
                a + b
            })
            .collect();
        IntPoly::normalized(num, l)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly { num: self.num.iter().map(|c| -c).collect(), den: self.den.clone() }
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut num = vec![BigInt::zero(); self.num.len() + rhs.num.len() - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.num.iter().enumerate() {
                num[i + j] += a * b;
            }
        }
        IntPoly::normalized(num, &self.den * &rhs.den)
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            first = false;
            let coeff = if k > 0 && mag.is_one() { String::new() } else { mag.to_string() };
            match k {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{coeff}x")?,
                _ => write!(f, "{coeff}x^{k}")?,
            }
        }
        if !self.den.is_one() {
            write!(f, " (/{})", self.den)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    #[test]
    fn display() {
        assert_eq!(IntPoly::from_ints(&[5, -1, 0, 2]).to_string(), "5 - x + 2x^3");
        assert_eq!(IntPoly::from_ints(&[0, 0, -3]).to_string(), "-3x^2");
        assert_eq!(IntPoly::binomial(2).to_string(), "-x + x^2 (/2)");
    }

    #[test]
    fn canonical_form_trims() {
        let p = IntPoly::from_ints(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(IntPoly::from_ints(&[0, 0]), IntPoly::zero());
        assert_eq!(IntPoly::zero().degree(), None);
    }

    #[test]
    fn binomial_polynomials_are_integer_valued() {
        let c2 = IntPoly::binomial(2);
        assert!(!c2.is_integral());
        assert!(c2.is_integer_valued());
        assert_eq!(c2.eval_i64(5).unwrap(), BigInt::from(10));
        assert_eq!(c2.eval_i64(-3).unwrap(), BigInt::from(6));
        assert_eq!(IntPoly::binomial(0), IntPoly::one());
    }

    #[test]
    fn rejects_non_integer_valued() {
        assert_eq!(IntPoly::from_rationals(&[rat(0, 1), rat(1, 2)]), Err(Error::NotIntegerValued));
        let ok = IntPoly::from_rationals(&[rat(0, 1), rat(-1, 2), rat(1, 2)]).unwrap();
        assert_eq!(ok, IntPoly::binomial(2));
    }

    #[test]
    fn arithmetic() {
        let a = IntPoly::from_ints(&[1, 1]);
        let b = IntPoly::from_ints(&[-1, 1]);
        assert_eq!(&a * &b, IntPoly::from_ints(&[-1, 0, 1]));
        assert_eq!(&a - &a, IntPoly::zero());
        assert_eq!(&(&a + &b), &IntPoly::from_ints(&[0, 2]));
        let half = IntPoly::from_rationals_unchecked(&[rat(1, 2)]);
        assert_eq!(&half + &half, IntPoly::one());
    }

    #[test]
    fn norm_requires_integers() {
        assert_eq!(IntPoly::from_ints(&[-5, 0, 3]).coeff_norm().unwrap(), BigInt::from(5));
        assert_eq!(IntPoly::binomial(2).coeff_norm(), Err(Error::NonIntegerCoefficients));
    }
}
