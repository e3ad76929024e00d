//! From a cancelling pair `(v, w)`, a finite set whose orbit misses a band.

use glasner::check::find_violation;
use glasner::fixtures::symmetric_quadratic;
use glasner::torus::non_glasner_witness;

fn main() {
    let a = symmetric_quadratic();
    let wit = find_violation(&a, 3).expect("this matrix has a cancelling pair");
    println!("v = {:?}, w = {:?}", wit.v, wit.w);
    let g = non_glasner_witness(&a, &wit.v, &wit.w, 10).unwrap();
    println!("{} points, band: {:?}·u mod 1 ∈ ({}, {})", g.points.len(), g.band.v, g.band.lo, g.band.hi);
    println!("avoided for all |n| ≤ 1000: {}", g.verify(&a, -1000, 1000).unwrap());
}
