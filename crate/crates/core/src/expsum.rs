//! Exponential sums: complete sums modulo `q`, Weyl averages, periodized orbit
//! averages and the empirical Hua-bound experiment.
//!
//! Polynomial values are always reduced modulo `q` in exact integer
//! arithmetic; only the final `e(r/q)` evaluation is floating point.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::frac::{frac, frac_mul};
use crate::poly::{IntPoly, PolyMat};
use crate::{Error, Result};

/// `e(t) = exp(2πit)`
pub fn e(t: f64) -> Complex64 {
    let (s, c) = (std::f64::consts::TAU * t).sin_cos();
    Complex64::new(c, s)
}

/// `e(r/q)` with the argument folded into `(−1/2, 1/2]`.
fn e_ratio(r: u64, q: u64) -> Complex64 {
    let r = r % q;
    let signed = if 2 * r > q { r as f64 - q as f64 } else { r as f64 };
    e(signed / q as f64)
}

/// Neumaier-compensated complex accumulator.
#[derive(Default)]
struct Accumulator {
    re: f64,
    im: f64,
    c_re: f64,
    c_im: f64,
}

fn neumaier(sum: &mut f64, comp: &mut f64, x: f64) {
    let t = *sum + x;
    if sum.abs() >= x.abs() {
        *comp += (*sum - t) + x;
    } else {
        *comp += (x - t) + *sum;
    }
    *sum = t;
}

impl Accumulator {
    fn add(&mut self, z: Complex64) {
        neumaier(&mut self.re, &mut self.c_re, z.re);
        neumaier(&mut self.im, &mut self.c_im, z.im);
    }

    fn total(&self) -> Complex64 {
        Complex64::new(self.re + self.c_re, self.im + self.c_im)
    }
}

/// A normalized sum `(1/terms) Σ e(·)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SumResult {
    pub re: f64,
    pub im: f64,
    pub terms: u64,
}

impl SumResult {
    fn from_total(total: Complex64, terms: u64) -> Self {
        let v = total / terms as f64;
        SumResult { re: v.re, im: v.im, terms }
    }

    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }

    pub fn norm(&self) -> f64 {
        self.value().norm()
    }
}

/// Residues `f(1), …, f(terms) mod q` in exact arithmetic.
///
/// Works for integer-valued `f = N(x)/L` by evaluating `N` modulo `qL`.
fn residues(f: &IntPoly, q: u64, terms: u64) -> Result<Vec<u64>> {
    let den = f.denominator();
    let modulus = BigInt::from(q) * den;
    let m = modulus
        .to_u64()
        .filter(|&m| m < 1 << 63)
        .ok_or_else(|| Error::InvalidInput(format!("modulus {modulus} too large")))?;
    let den = den.to_u64().expect("den ≤ modulus");
    let big_m = BigInt::from(m);
    let coeffs: Vec<u64> = f
        .numerators()
        .iter()
        .map(|c| c.mod_floor(&big_m).to_u64().expect("reduced"))
        .collect();
    Ok((1..=terms)
        .map(|n| {
            let n = n % m;
            let v = coeffs
                .iter()
                .rev()
                .fold(0u128, |acc, &c| (acc * n as u128 + c as u128) % m as u128) as u64;
            debug_assert_eq!(v % den, 0);
            v / den
        })
        .collect())
}

/// `(1/q) Σ_{n=1}^q e(f(n)/q)`.
pub fn complete_sum(f: &IntPoly, q: u64) -> Result<SumResult> {
    averaged_sum(f, q, q)
}

/// `(1/P) Σ_{n=1}^P e(f(n)/q)` with `P = qL`, `L` the denominator of `f`.
///
/// `f(n) mod q` has period dividing `P`, so this is the Cesàro mean of
/// `e(f(n)/q)`. For integer coefficients it is [`complete_sum`].
pub fn periodic_average(f: &IntPoly, q: u64) -> Result<SumResult> {
    let period = f
        .denominator()
        .to_u64()
        .and_then(|l| l.checked_mul(q))
        .ok_or_else(|| Error::InvalidInput("period too large".into()))?;
    averaged_sum(f, q, period)
}

fn averaged_sum(f: &IntPoly, q: u64, terms: u64) -> Result<SumResult> {
    if q == 0 {
        return Err(Error::InvalidInput("q must be positive".into()));
    }
    let mut counts = vec![0u64; q as usize];
    for r in residues(f, q, terms)? {
        counts[r as usize] += 1;
    }
    let mut acc = Accumulator::default();
    for (r, &c) in counts.iter().enumerate() {
        if c > 0 {
            acc.add(e_ratio(r as u64, q) * c as f64);
        }
    }
    Ok(SumResult::from_total(acc.total(), terms))
}

/// `(1/N) Σ_{n=1}^N e(g(n))` for real coefficients `g` (ascending degree).
///
/// Each `g_k·n^k` is reduced modulo 1 exactly before summation.
pub fn weyl_average(g: &[f64], n_terms: u64) -> Result<SumResult> {
    if n_terms == 0 {
        return Err(Error::InvalidInput("N must be positive".into()));
    }
    if g.iter().any(|c| !c.is_finite()) {
        return Err(Error::InvalidInput("coefficients must be finite".into()));
    }
    let mut acc = Accumulator::default();
    for n in 1..=n_terms {
        let mut power = BigInt::one();
        let mut phase = 0.0;
        for (k, &c) in g.iter().enumerate() {
            if k > 0 {
                power *= n;
            }
            phase += if k == 0 { frac(c) } else { frac_mul(&power, c) };
        }
        acc.add(e(frac(phase)));
    }
    Ok(SumResult::from_total(acc.total(), n_terms))
}

/// Cesàro mean of `n ↦ e(mᵗ A(n) δ)` for a rational point `δ`, computed
/// over one period.
pub fn orbit_average(a: &PolyMat, m: &[BigInt], delta: &[BigRational]) -> Result<SumResult> {
    if delta.len() != a.dim() {
        return Err(Error::DimensionMismatch("delta length".into()));
    }
    let q = delta.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let numer: Vec<BigInt> = delta.iter().map(|x| x.numer() * (&q / x.denom())).collect();
    let f = a.bilinear_poly(m, &numer)?;
    let q = q
        .to_u64()
        .ok_or_else(|| Error::InvalidInput("denominator too large".into()))?;
    periodic_average(&f, q)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HuaSample {
    pub q: u64,
    /// `a₁, …, a_D` (the constant term is fixed at 0).
    pub coeffs: Vec<u64>,
    pub magnitude: f64,
    /// `q^{1/D − δ} · |S|`
    pub rescaled: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HuaReport {
    pub degree: usize,
    pub delta: f64,
    pub samples: Vec<HuaSample>,
    pub empirical_c: f64,
}

impl HuaReport {
    /// Max rescaled value over samples with `q ≤ q_max`.
    pub fn empirical_c_up_to(&self, q_max: u64) -> f64 {
        self.samples
            .iter()
            .filter(|s| s.q <= q_max)
            .map(|s| s.rescaled)
            .fold(0.0, f64::max)
    }
}

/// Samples random `f = a₁x + … + a_Dx^D` with `gcd(a₁, …, a_D, q) = 1` for each
/// `q` and records `|S|` and its rescaling by `q^{1/D − δ}`.
pub fn hua_experiment(
    degree: usize,
    delta: f64,
    q_list: &[u64],
    trials_per_q: usize,
    seed: u64,
) -> Result<HuaReport> {
    if degree == 0 {
        return Err(Error::InvalidInput("degree must be at least 1".into()));
    }
    if !(delta > 0.0 && delta < 1.0 / degree as f64) {
        return Err(Error::BadDelta { delta, degree });
    }
    if q_list.contains(&0) {
        return Err(Error::InvalidInput("moduli must be positive".into()));
    }
    let exponent = 1.0 / degree as f64 - delta;
    let mut samples = Vec::with_capacity(q_list.len() * trials_per_q);
    for &q in q_list {
        let mut rng = crate::seed::rng(seed, &[degree as u64, q]);
        for _ in 0..trials_per_q {
            let coeffs: Vec<u64> = loop {
                let c: Vec<u64> = (0..degree).map(|_| rng.gen_range(0..q)).collect();
                let g = c.iter().fold(q, |acc, &x| acc.gcd(&x));
                if g == 1 {
                    break c;
                }
            };
            let mut num = vec![BigInt::from(0)];
            num.extend(coeffs.iter().map(|&c| BigInt::from(c)));
            let s = complete_sum(&IntPoly::from_coeffs(num), q)?;
            let magnitude = s.norm();
            samples.push(HuaSample {
                q,
                coeffs,
                magnitude,
                rescaled: (q as f64).powf(exponent) * magnitude,
            });
        }
    }
    let empirical_c = samples.iter().map(|s| s.rescaled).fold(0.0, f64::max);
    Ok(HuaReport { degree, delta, samples, empirical_c })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn complete_sum_examples() {
        assert!(complete_sum(&IntPoly::x(), 3).unwrap().norm() < 1e-12);
        let s = complete_sum(&IntPoly::zero(), 5).unwrap();
        assert!((s.re - 1.0).abs() < 1e-15 && s.im.abs() < 1e-15);
        // n² mod 4 over n = 1..4: 1, 0, 1, 0 -> (2 + 2i)/4
        let s = complete_sum(&IntPoly::from_ints(&[0, 0, 1]), 4).unwrap();
        assert!((s.re - 0.5).abs() < 1e-15);
        assert!((s.im - 0.5).abs() < 1e-15);
        assert!((s.norm() - 0.5f64.sqrt()).abs() < 1e-12);
        assert!(complete_sum(&IntPoly::x(), 0).is_err());
    }

    #[test]
    fn integer_valued_polynomials_sum_correctly() {
        // C(n, 2) mod 2 over n = 1..2: 0, 1 -> (1 - 1)/2 = 0
        let s = complete_sum(&IntPoly::binomial(2), 2).unwrap();
        assert!(s.norm() < 1e-12);
        // C(n, 2) mod 4 over n = 1..4: 0, 1, 3, 2 -> 0
        let s = complete_sum(&IntPoly::binomial(2), 4).unwrap();
        assert!(s.norm() < 1e-12);
    }

    #[test]
    fn weyl_examples() {
        assert!(weyl_average(&[0.0, 0.5], 10).unwrap().norm() < 1e-12);
        let s = weyl_average(&[0.0], 10).unwrap();
        assert!((s.re - 1.0).abs() < 1e-15);
        let phi = (5f64.sqrt() - 1.0) / 2.0;
        let n = 100_000u64;
        let got = weyl_average(&[0.0, phi], n).unwrap().norm();
        let closed = ((std::f64::consts::PI * n as f64 * phi).sin()
            / (std::f64::consts::PI * phi).sin())
        .abs()
            / n as f64;
        assert!(got < 2e-5);
        assert!((got - closed).abs() < 1e-9, "{got} vs {closed}");
    }

    #[test]
    fn orbit_average_examples() {
        let xi = PolyMat::scalar_x(2);
        let s = orbit_average(&xi, &big(&[1, 0]), &[rat(1, 2), rat(0, 1)]).unwrap();
        assert!(s.norm() < 1e-12);
        let s = orbit_average(&xi, &big(&[1, 0]), &[rat(0, 1), rat(1, 2)]).unwrap();
        assert!((s.re - 1.0).abs() < 1e-12);
        let s = orbit_average(&crate::fixtures::power_matrix(), &big(&[1, 0]), &[rat(1, 4), rat(0, 1)])
            .unwrap();
        assert!(s.norm() < 1e-12);
    }

    #[test]
    fn orbit_average_uses_full_period() {
        // C(n, 3) mod 2 has period 4, not 2: it is odd exactly for n ≡ 3 mod 4
        let a = PolyMat::new(1, vec![IntPoly::binomial(3)]).unwrap();
        let s = orbit_average(&a, &big(&[1]), &[rat(1, 2)]).unwrap();
        assert!((s.re - 0.5).abs() < 1e-12 && s.im.abs() < 1e-12);
        assert_eq!(s.terms, 12);
    }

    #[test]
    fn hua_linear_sums_vanish() {
        let r = hua_experiment(1, 0.5, &[2, 3, 10, 97], 5, 3).unwrap();
        assert!(r.samples.iter().all(|s| s.magnitude < 1e-12 && s.rescaled < 1e-12));
    }

    #[test]
    fn hua_rejects_bad_delta() {
        assert!(matches!(hua_experiment(2, 0.5, &[5], 1, 0), Err(Error::BadDelta { .. })));
        assert!(matches!(hua_experiment(2, 0.0, &[5], 1, 0), Err(Error::BadDelta { .. })));
    }

    #[test]
    fn hua_is_deterministic() {
        let a = hua_experiment(2, 0.1, &[7, 11, 12], 3, 42).unwrap();
        let b = hua_experiment(2, 0.1, &[7, 11, 12], 3, 42).unwrap();
        assert_eq!(a, b);
    }
}
