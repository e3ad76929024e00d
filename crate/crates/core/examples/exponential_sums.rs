//! Complete sums: linear sums vanish, quadratic Gauss sums have size √q/q,
//! and the rescaled maxima of random quadratic sums stay bounded.

use glasner::expsum::{complete_sum, hua_experiment};
use glasner::poly::IntPoly;

fn main() {
    let lin = complete_sum(&IntPoly::from_ints(&[0, 3]), 10).unwrap();
    println!("(1/10) Σ e(3n/10) = {:.3e}", lin.norm());

    for q in [3u64, 11, 101, 997] {
        let s = complete_sum(&IntPoly::from_ints(&[0, 0, 1]), q).unwrap();
        println!("q = {q:4}: |S| = {:.12}, √q/q = {:.12}", s.norm(), (q as f64).sqrt() / q as f64);
    }

    let qs: Vec<u64> = (2..=2000).collect();
    let report = hua_experiment(2, 0.1, &qs, 1, 11).unwrap();
    println!(
        "D = 2, δ = 0.1: empirical C over q ≤ 100 is {:.3}, over q ≤ 2000 is {:.3}",
        report.empirical_c_up_to(100),
        report.empirical_c
    );
}
