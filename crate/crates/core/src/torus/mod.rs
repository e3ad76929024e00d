//! Finite point sets on `T^d` and the statistics that govern their orbits.
//!
//! The torus metric throughout is ℓ∞: the largest circle distance over
//! coordinates. Balls are closed.

mod density;
mod fourier;
mod points;
mod scaling;
mod spectrum;
mod witness;

pub use density::{
    eps_dense, is_eps_dense, orbit_density_search, search_order, DensityReport, DensityStatus,
};
pub use fourier::fourier_statistic;
pub use points::{circle_distance, torus_distance, PointKind, TorusPointSet};
pub use scaling::{k_min_scaling, ScalingConfig, ScalingRow};
pub use spectrum::{pair_spectrum, weighted_spectrum_sum, PairSpectrum, SpectrumEntry};
pub use witness::{non_glasner_witness, Band, NonGlasnerWitness};
