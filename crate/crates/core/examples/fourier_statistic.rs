//! The averaged Fourier statistic over matrices γ applied to a point set.

use glasner::exact::IntMat;
use glasner::torus::{fourier_statistic, TorusPointSet};
use num_rational::BigRational;

fn main() {
    let y = TorusPointSet::exact(
        2,
        vec![
            vec![BigRational::from_integer(0.into()), BigRational::from_integer(0.into())],
            vec![BigRational::new(1.into(), 2.into()), BigRational::from_integer(0.into())],
        ],
    )
    .unwrap();
    let identity = [IntMat::identity(2)];
    println!("identity, ε = 1: {:.6}", fourier_statistic(&identity, &y, 1.0).unwrap());

    let gammas: Vec<IntMat> = (1..=20).map(|n| IntMat::from_rows(&[[1, n], [n, 1 + n * n]])).collect();
    for eps in [1.0, 0.5, 0.25] {
        println!("20 shears, ε = {eps}: {:.6}", fourier_statistic(&gammas, &y, eps).unwrap());
    }
}
