//! Least point count for which seeded random sets on T¹ reach ε-density
//! under `x ↦ nx` for some `n ≤ 10⁴`.

use glasner::poly::PolyMat;
use glasner::torus::{k_min_scaling, ScalingConfig};

fn main() {
    let a = PolyMat::scalar_x(1);
    let cfg = ScalingConfig::new(vec![0.2, 0.1, 0.05, 0.025], 5, 99);
    println!("{:>6} {:>6} {:>6}", "eps", "k_min", "floor");
    for row in k_min_scaling(&a, &cfg).unwrap() {
        let k = row.k_min.map_or("-".to_string(), |k| k.to_string());
        println!("{:>6} {:>6} {:>6}", row.epsilon, k, row.floor);
    }
}
