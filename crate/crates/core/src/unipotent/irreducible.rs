use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::exact::{left_kernel_integer, IntMat, RationalSpan};
use crate::seed;

use super::UnipotentSystem;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum IrreducibilityStatus {
    CertifiedAbsolutelyIrreducible,
    ReducibleWithWitness,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrreducibilityVerdict {
    pub status: IrreducibilityStatus,
    /// Integer basis of a proper invariant subspace.
    #[serde(default, skip_serializing_if = "Option::is_none", with = "crate::serde_big::opt_int_rows")]
    pub witness: Option<Vec<Vec<BigInt>>>,
    pub algebra_dim: usize,
}

/// Basis of the algebra generated by `S`, closed under right multiplication.
fn algebra_basis(sys: &UnipotentSystem) -> Vec<IntMat> {
    let d = sys.dim();
    let gens = sys.symmetrized();
    let mut span = RationalSpan::new(d * d);
    let id = IntMat::identity(d);
    span.insert_int(id.entries());
    let mut elems = vec![id];
    let mut next = 0;
    while next < elems.len() && !span.is_full() {
        let b = elems[next].clone();
        next += 1;
        for g in &gens {
            let p = b.checked_mul(g).expect("square");
            if span.insert_int(p.entries()) {
                elems.push(p);
            }
        }
    }
    elems
}

fn right_kernel(m: &IntMat) -> Vec<Vec<BigInt>> {
    left_kernel_integer(&m.transpose())
}

fn orbit_span(elems: &[IntMat], x: &[BigInt]) -> RationalSpan {
    let mut span = RationalSpan::new(x.len());
    for b in elems {
        span.insert_int(&b.mul_vec(x).expect("length"));
    }
    span
}

fn is_invariant(sys: &UnipotentSystem, basis: &[Vec<BigInt>]) -> bool {
    let mut span = RationalSpan::new(sys.dim());
    for b in basis {
        span.insert_int(b);
    }
    sys.symmetrized()
        .iter()
        .all(|g| basis.iter().all(|b| span.contains_int(&g.mul_vec(b).expect("length"))))
}

fn proper(span: &RationalSpan) -> bool {
    span.rank() > 0 && !span.is_full()
}

fn candidates(elems: &[IntMat], d: usize) -> Vec<Vec<BigInt>> {
    let mut out: Vec<Vec<BigInt>> = (0..d)
        .map(|i| (0..d).map(|j| BigInt::from((i == j) as i64)).collect())
        .collect();
    let id = IntMat::identity(d);
    for b in elems {
        for lambda in -2i64..=2 {
            out.extend(right_kernel(&b.sub(&id.scale(&lambda.into()))));
        }
    }
    let mut rng = seed::rng(0x1bad_5eed, &[d as u64, elems.len() as u64]);
    for _ in 0..4 * d {
        let c = elems.iter().fold(IntMat::zeros(d, d), |acc, b| {
            acc.add(&b.scale(&BigInt::from(rng.gen_range(-3i64..=3))))
        });
        out.extend(right_kernel(&c));
        out.push((0..d).map(|_| BigInt::from(rng.gen_range(-5i64..=5))).collect());
    }
    out.retain(|v| v.iter().any(|x| !x.is_zero()));
    out
}

fn search_invariant(sys: &UnipotentSystem, elems: &[IntMat]) -> Option<Vec<Vec<BigInt>>> {
    let d = sys.dim();
    for x in candidates(elems, d) {
        let span = orbit_span(elems, &x);
        if proper(&span) {
            let basis = span.integer_basis();
            if is_invariant(sys, &basis) {
                return Some(basis);
            }
        }
    }
    // A proper subspace invariant under the transposed algebra has an
    // invariant orthogonal complement.
    let transposed: Vec<IntMat> = elems.iter().map(IntMat::transpose).collect();
    for y in candidates(&transposed, d) {
        let span = orbit_span(&transposed, &y);
        if proper(&span) {
            let rows = IntMat::from_big_rows(span.integer_basis()).expect("rectangular");
            let basis = right_kernel(&rows);
            if !basis.is_empty() && basis.len() < d && is_invariant(sys, &basis) {
                return Some(basis);
            }
        }
    }
    None
}

/// Absolute irreducibility via the dimension of the generated algebra, else
/// a search for an explicit invariant subspace.
pub fn certify_irreducible(sys: &UnipotentSystem) -> IrreducibilityVerdict {
    let d = sys.dim();
    let elems = algebra_basis(sys);
    let algebra_dim = elems.len();
    if algebra_dim == d * d {
        return IrreducibilityVerdict {
            status: IrreducibilityStatus::CertifiedAbsolutelyIrreducible,
            witness: None,
            algebra_dim,
        };
    }
    match search_invariant(sys, &elems) {
        Some(basis) => IrreducibilityVerdict {
            status: IrreducibilityStatus::ReducibleWithWitness,
            witness: Some(basis),
            algebra_dim,
        },
        None => IrreducibilityVerdict { status: IrreducibilityStatus::Inconclusive, witness: None, algebra_dim },
    }
}
