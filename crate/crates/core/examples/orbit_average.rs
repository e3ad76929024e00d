//! Weyl averages of real polynomials and exact periodic orbit averages.

use glasner::expsum::{orbit_average, weyl_average};
use glasner::fixtures::power_matrix;
use num_bigint::BigInt;
use num_rational::BigRational;

fn main() {
    let phi = (5f64.sqrt() - 1.0) / 2.0;
    for n in [100u64, 10_000, 1_000_000] {
        let s = weyl_average(&[0.0, 0.0, phi], n).unwrap();
        println!("N = {n:7}: |(1/N) Σ e(φn²)| = {:.2e}", s.norm());
    }

    let a = power_matrix();
    let m = [BigInt::from(1), BigInt::from(2)];
    for q in [3i64, 4, 7] {
        let delta = [BigRational::new(1.into(), q.into()), BigRational::new(2.into(), q.into())];
        let s = orbit_average(&a, &m, &delta).unwrap();
        println!("δ with denominator {q}: mean of e(mᵗA(n)δ) = {:.6} {:+.6}i", s.re, s.im);
    }
}
