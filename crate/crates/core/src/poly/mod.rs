//! Integer-valued polynomials and polynomial matrices.
//!
//! Coefficients are rational so that binomial-coefficient polynomials such as
//! `x(x−1)/2` can be represented; every constructor that admits rational
//! coefficients certifies integer-valuedness through finite differences.

mod intpoly;
mod mpoly;
mod polymat;

pub use intpoly::IntPoly;
pub use mpoly::{MPoly, MPolyMat, Monomial};
pub use polymat::PolyMat;
