use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::check::{check, CheckConfig, CheckReport};
use crate::poly::{MPolyMat, PolyMat};
use crate::{Error, Result};

use super::irreducible::{certify_irreducible, IrreducibilityStatus, IrreducibilityVerdict};
use super::{word_product, UnipotentSystem};

/// `n_i ↦ x^{R^{i−1}}`, `R = 1 + max per-variable degree`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubstitutionPlan {
    pub n: usize,
    pub r: u64,
    pub exponents: Vec<u64>,
}

impl SubstitutionPlan {
    /// Distinct monomials of `p` map to distinct powers of `x`.
    pub fn is_injective_on(&self, p: &MPolyMat) -> bool {
        let mut seen = HashSet::new();
        p.monomials().iter().all(|e| {
            let deg: u128 = e.iter().zip(&self.exponents).map(|(&k, &x)| k as u128 * x as u128).sum();
            seen.insert(deg)
        })
    }
}

pub fn substitution_plan(p: &MPolyMat) -> Result<SubstitutionPlan> {
    let r = 1 + p.max_var_degree() as u64;
    let mut exponents = Vec::with_capacity(p.nvars());
    let mut e = 1u64;
    for i in 0..p.nvars() {
        if i > 0 {
            e = e
                .checked_mul(r)
                .ok_or_else(|| Error::InvalidInput("substituted degree overflows".into()))?;
        }
        exponents.push(e);
    }
    Ok(SubstitutionPlan { n: p.nvars(), r, exponents })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructOptions {
    /// Proceed even when irreducibility is not certified.
    pub force: bool,
    pub check: CheckConfig,
}

impl ConstructOptions {
    pub fn with_seed(seed: u64) -> Self {
        ConstructOptions { force: false, check: CheckConfig::with_seed(seed) }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Construction {
    pub a: PolyMat,
    pub plan: SubstitutionPlan,
    pub report: CheckReport,
    pub irreducibility: IrreducibilityVerdict,
    pub forced: bool,
}

/// `A(x) = Q_N(x, x^R, …, x^{R^{N−1}})` with `Q_N` the cyclic word of length
/// `N = d·m`, followed by a run of the checker on the result.
///
/// Every value `A(n)` is a product of generator powers.
pub fn construct_polynomial(sys: &UnipotentSystem, opts: &ConstructOptions) -> Result<Construction> {
    let irreducibility = certify_irreducible(sys);
    let certified = irreducibility.status == IrreducibilityStatus::CertifiedAbsolutelyIrreducible;
    if !certified && !opts.force {
        return Err(Error::NotCertifiedIrreducible);
    }
    let n = sys.dim() * sys.generators().len();
    let q = word_product(sys, n)?;
    let plan = substitution_plan(&q)?;
    if !plan.is_injective_on(&q) {
        return Err(Error::HypothesisFailed("substitution is not injective on monomials".into()));
    }
    let a = q.substitute(&plan.exponents)?;
    let report = check(&a, &opts.check);
    Ok(Construction { a, plan, report, irreducibility, forced: !certified })
}
