//! Exact-arithmetic toolkit for integer polynomial matrices acting on tori.
//!
//! The crate decides (to a stated tier of certainty) whether a matrix
//! `A(x)` of integer polynomials has hyperplane-fleeing orbits, i.e. whether
//! `vᵗ(A(x) − A(0))w` is a nonzero polynomial for every pair of nonzero
//! integer vectors. Matrices with that property move every large enough
//! finite subset of `T^d` into an ε-dense position for some integer `n`.
//!
//! Module map:
//!
//! * [`exact`]: integer matrices, Smith normal form, ranks, kernels, gcd bounds.
//! * [`poly`]: univariate and sparse multivariate integer-valued polynomial matrices.
//! * [`check`]: the hyperplane-fleeing checker and multiplicative complexity.
//! * [`expsum`]: complete exponential sums, Weyl averages, Hua-bound measurements.
//! * [`torus`]: point sets on `T^d`, density certification, pair spectra, witnesses.
//! * [`unipotent`]: symbolic unipotent powers, Cayley balls, irreducibility and
//!   the construction of a qualifying `A(x)` from unipotent generators.
//! * [`cli`]: file formats, JSON reports and the `glasner` command line.

pub mod check;
pub mod cli;
pub mod error;
pub mod exact;
pub mod expsum;
pub mod fixtures;
pub mod frac;
pub mod poly;
pub mod seed;
pub mod serde_big;
pub mod torus;
pub mod unipotent;

pub use error::{Error, Result};
