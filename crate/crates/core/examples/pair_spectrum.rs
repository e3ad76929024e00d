//! Torsion orders of pairwise differences and the counting bound.

use glasner::torus::{pair_spectrum, weighted_spectrum_sum, TorusPointSet};
use num_rational::BigRational;

fn main() {
    let pts: Vec<Vec<BigRational>> = (0..12)
        .map(|i| vec![BigRational::new(i.into(), 12.into()), BigRational::new((i * i).into(), 5.into())])
        .collect();
    let y = TorusPointSet::exact(2, pts).unwrap();
    let s = pair_spectrum(&y).unwrap();
    for e in &s.counts {
        println!("h_{} = {}", e.q, e.count);
    }
    println!("H_m ≤ k·m^(d+1) for all m: {}", s.counting_bound_holds());
    for r in [0.5, 1.0, 3.0] {
        println!("Σ h_q q^-{r} = {:.4}", weighted_spectrum_sum(&s, r).unwrap());
    }
}
