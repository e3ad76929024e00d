//! Building `A(x)` from unipotent generators of SL₂(Z) and of its adjoint image.

use glasner::fixtures::{adjoint_sl2, sl2_pair};
use glasner::unipotent::{construct_polynomial, ConstructOptions};

fn main() {
    for (name, sys) in [("SL2 pair", sl2_pair()), ("adjoint SL2", adjoint_sl2())] {
        let out = construct_polynomial(&sys, &ConstructOptions::with_seed(5)).unwrap();
        println!("{name}: d = {}, N = {}, R = {}, deg A = {}", sys.dim(), out.plan.n, out.plan.r, out.a.degree());
        println!("  irreducibility: {:?} (algebra dim {})", out.irreducibility.status, out.irreducibility.algebra_dim);
        println!("  verdict: {:?}", out.report.verdicts.iter().map(|v| v.status).collect::<Vec<_>>());
        println!("  A(1) =\n{}", out.a.eval_i64(1).unwrap());
    }
}
