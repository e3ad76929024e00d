//! Span and affine-span growth of Cayley balls applied to a vector.

use glasner::fixtures::{adjoint_sl2, sl2_pair};
use glasner::unipotent::{cayley_affine_dim, cayley_span_dim, certify_irreducible};
use num_rational::BigRational;

fn main() {
    for (name, sys, v) in [("SL2 pair", sl2_pair(), vec![1, 0]), ("adjoint SL2", adjoint_sl2(), vec![0, 1, 0])] {
        let v: Vec<BigRational> = v.into_iter().map(|x: i64| BigRational::from_integer(x.into())).collect();
        println!("{name}: {:?}", certify_irreducible(&sys).status);
        for r in 0..=sys.dim() {
            println!(
                "  r = {r}: span dim {}, affine dim {}",
                cayley_span_dim(&sys, &v, r).unwrap(),
                cayley_affine_dim(&sys, &v, r).unwrap()
            );
        }
    }
}
