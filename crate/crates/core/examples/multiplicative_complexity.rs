//! The complexity bound Q for a row of `A(x) − A(0)` and a measured gcd.

use glasner::check::{complexity_bound, verify_multiplicative_complexity};
use glasner::poly::PolyMat;
use num_bigint::BigInt;

fn main() {
    let a = PolyMat::from_int_entries(vec![
        vec![vec![5, 3], vec![0, 0, 1]],
        vec![vec![0, 0, 0, -2], vec![1, 0, 0, 0, 1]],
    ])
    .unwrap();
    let w = vec![BigInt::from(2), BigInt::from(1)];
    let q_bound = complexity_bound(&a, &w).unwrap();
    println!("A = {a}");
    println!("Q = {} (norm {}, |w| = {})", q_bound.q, q_bound.norm, q_bound.w_height);

    let row = a.minus_constant().row_combination(&w).unwrap();
    for (coeffs, q) in [([1, 2], 4), ([5, 6], 36), ([7, 1], 1000)] {
        let coeffs: Vec<BigInt> = coeffs.iter().map(|&c| BigInt::from(c)).collect();
        let rec = verify_multiplicative_complexity(&row, &coeffs, &BigInt::from(q), &q_bound.q).unwrap();
        println!("a = {coeffs:?}, q = {q}: gcd = {}, within Q: {}", rec.g, rec.ok);
    }
}
