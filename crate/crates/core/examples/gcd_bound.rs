//! `gcd(Σ aᵢvᵢ, q) ≤ d!·max‖vᵢ‖∞^d` for independent integer vectors.

use glasner::exact::verify_gcd_bound;
use num_bigint::BigInt;

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| x.into()).collect()
}

fn main() {
    let vs = vec![big(&[2, 4]), big(&[4, 2])];
    for (a, q) in [(big(&[1, 1]), 12), (big(&[1, 2]), 10), (big(&[3, 1]), 35), (big(&[1, 5]), 36)] {
        let rec = verify_gcd_bound(&vs, &a, &BigInt::from(q)).unwrap();
        println!("a = {a:?}, q = {q}: gcd = {}, bound = {}, ok = {}", rec.lhs, rec.rhs, rec.ok);
    }
    let dependent = vec![big(&[1, 2]), big(&[2, 4])];
    println!("dependent input: {:?}", verify_gcd_bound(&dependent, &big(&[1, 1]), &BigInt::from(5)));
}
