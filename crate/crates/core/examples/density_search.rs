//! A Kronecker set on the circle, dilated by `n` until it is 0.05-dense.

use glasner::frac::frac;
use glasner::poly::PolyMat;
use glasner::seed;
use glasner::torus::{eps_dense, orbit_density_search, TorusPointSet};

fn main() {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let y = TorusPointSet::float(1, (1..=25).map(|j| vec![frac(j as f64 * phi)]).collect()).unwrap();
    let a = PolyMat::scalar_x(1);
    let eps = 0.05;
    println!("initial: {:?}", eps_dense(&y, eps, eps / 4.0).unwrap().status);
    match orbit_density_search(&a, &y, eps, None, 1, 10_000).unwrap() {
        Some(n) => {
            let img = y.apply(&a.eval_i64(n).unwrap()).unwrap();
            let r = eps_dense(&img, eps, eps / 4.0).unwrap();
            println!("n = {n}: covering radius ≈ {:.4}, {:?}", r.covering_radius_estimate, r.status);
        }
        None => println!("no n in range"),
    }

    for s in 0..5u64 {
        let y = TorusPointSet::random_float(1, 50, &mut seed::rng(s, &[]));
        let n = orbit_density_search(&a, &y, eps, None, 1, 10_000).unwrap();
        println!("random 50-point set, seed {s}: n = {n:?}");
    }

    let half = TorusPointSet::float(1, vec![vec![0.0], vec![0.5]]).unwrap();
    println!("{{0, 1/2}} at ε = 0.2: {:?}", orbit_density_search(&a, &half, 0.2, None, -1000, 1000).unwrap());
}
