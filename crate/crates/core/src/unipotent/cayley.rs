use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::Zero;

use crate::exact::{IntMat, RationalSpan};
use crate::{Error, Result};

use super::UnipotentSystem;

fn act(g: &IntMat, v: &[BigRational]) -> Vec<BigRational> {
    (0..g.rows())
        .map(|i| {
            g.row(i).iter().zip(v).fold(BigRational::zero(), |acc, (a, x)| {
                if a.is_zero() {
                    acc
                } else {
                    acc + BigRational::from_integer(a.clone()) * x
                }
            })
        })
        .collect()
}

fn require(sys: &UnipotentSystem, v: &[BigRational]) -> Result<()> {
    if v.len() != sys.dim() {
        return Err(Error::DimensionMismatch(format!("vector of length {} in dimension {}", v.len(), sys.dim())));
    }
    if v.iter().all(Zero::is_zero) {
        return Err(Error::ZeroVector);
    }
    Ok(())
}

/// Dimension of `span{s·v : s ∈ S_r}`, `S` the generators and their inverses.
///
/// Uses `V_{r+1} = V_r + Σ_s s·V_r`, stopping once the span is stable.
pub fn cayley_span_dim(sys: &UnipotentSystem, v: &[BigRational], r: usize) -> Result<usize> {
    require(sys, v)?;
    let gens = sys.symmetrized();
    let mut span = RationalSpan::new(sys.dim());
    span.insert(v);
    for _ in 0..r {
        if span.is_full() {
            break;
        }
        let basis = span.basis().to_vec();
        let mut grew = false;
        for b in &basis {
            for g in &gens {
                grew |= span.insert(&act(g, b));
            }
        }
        if !grew {
            break;
        }
    }
    Ok(span.rank())
}

/// Dimension of the affine span of the orbit piece `S_r·v`.
pub fn cayley_affine_dim(sys: &UnipotentSystem, v: &[BigRational], r: usize) -> Result<usize> {
    require(sys, v)?;
    let gens = sys.symmetrized();
    let mut seen: BTreeSet<Vec<BigRational>> = BTreeSet::new();
    seen.insert(v.to_vec());
    let mut frontier = vec![v.to_vec()];
    for _ in 0..r {
        let mut next = Vec::new();
        for x in &frontier {
            for g in &gens {
                let y = act(g, x);
                if seen.insert(y.clone()) {
                    next.push(y);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    let mut span = RationalSpan::new(sys.dim());
    for x in &seen {
        let diff: Vec<BigRational> = x.iter().zip(v).map(|(a, b)| a - b).collect();
        span.insert(&diff);
    }
    Ok(span.rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn rv(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| BigRational::from_integer(x.into())).collect()
    }

    #[test]
    fn span_growth() {
        let sys = fixtures::sl2_pair();
        assert_eq!(cayley_span_dim(&sys, &rv(&[1, 0]), 0).unwrap(), 1);
        assert_eq!(cayley_span_dim(&sys, &rv(&[1, 0]), 1).unwrap(), 2);
        let single = UnipotentSystem::new(vec![IntMat::from_rows(&[[1, 1], [0, 1]])]).unwrap();
        assert_eq!(cayley_span_dim(&single, &rv(&[1, 0]), 7).unwrap(), 1);
        assert_eq!(cayley_span_dim(&sys, &rv(&[0, 0]), 1), Err(Error::ZeroVector));
    }

    #[test]
    fn affine_growth() {
        let sys = fixtures::adjoint_sl2();
        assert_eq!(cayley_affine_dim(&sys, &rv(&[1, 2, -1]), 0).unwrap(), 0);
        assert_eq!(cayley_affine_dim(&sys, &rv(&[1, 2, -1]), 3).unwrap(), 3);
        let single = UnipotentSystem::new(vec![IntMat::from_rows(&[[1, 1], [0, 1]])]).unwrap();
        // orbit of (0, 1) is the line y = 1
        assert_eq!(cayley_affine_dim(&single, &rv(&[0, 1]), 4).unwrap(), 1);
    }
}
