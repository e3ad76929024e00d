//! Built-in matrices and generator systems used by tests, examples and the CLI.

use crate::exact::IntMat;
use crate::poly::PolyMat;
use crate::unipotent::{adjoint_rep, UnipotentSystem};

/// `[[x, x²], [x², x]]`: `v = (1, 1)`, `w = (1, −1)` cancels.
pub fn symmetric_quadratic() -> PolyMat {
    PolyMat::from_int_entries(vec![
        vec![vec![0, 1], vec![0, 0, 1]],
        vec![vec![0, 0, 1], vec![0, 1]],
    ])
    .expect("fixture")
}

/// `[[x, x²], [x³, x⁴]]`: hyperplane-fleeing for every nonzero `w`.
pub fn power_matrix() -> PolyMat {
    PolyMat::from_int_entries(vec![
        vec![vec![0, 1], vec![0, 0, 1]],
        vec![vec![0, 0, 0, 1], vec![0, 0, 0, 0, 1]],
    ])
    .expect("fixture")
}

/// The elementary pair `[[1,1],[0,1]]`, `[[1,0],[1,1]]` generating SL₂(Z).
pub fn sl2_pair() -> UnipotentSystem {
    UnipotentSystem::new(vec![
        IntMat::from_rows(&[[1, 1], [0, 1]]),
        IntMat::from_rows(&[[1, 0], [1, 1]]),
    ])
    .expect("fixture")
}

/// `[[1,2],[0,1]]`, `[[1,0],[2,1]]`, the generators preserving the odd
/// sublattice of trace-zero matrices.
pub fn sl2_even_pair() -> UnipotentSystem {
    UnipotentSystem::new(vec![
        IntMat::from_rows(&[[1, 2], [0, 1]]),
        IntMat::from_rows(&[[1, 0], [2, 1]]),
    ])
    .expect("fixture")
}

/// Adjoint images of [`sl2_even_pair`] acting on trace-zero 2×2 matrices.
pub fn adjoint_sl2() -> UnipotentSystem {
    adjoint_of(&sl2_even_pair())
}

/// Adjoint images of [`sl2_pair`].
pub fn adjoint_sl2_elementary() -> UnipotentSystem {
    adjoint_of(&sl2_pair())
}

fn adjoint_of(sys: &UnipotentSystem) -> UnipotentSystem {
    UnipotentSystem::new(
        sys.generators()
            .iter()
            .map(|g| adjoint_rep(g).expect("determinant one"))
            .collect(),
    )
    .expect("adjoint of a unipotent is unipotent")
}

/// Looks up a generator fixture by its CLI name.
pub fn generator_fixture(name: &str) -> Option<UnipotentSystem> {
    match name {
        "sl2-pair" => Some(sl2_pair()),
        "sl2-even-pair" => Some(sl2_even_pair()),
        "adjoint-sl2" => Some(adjoint_sl2()),
        "adjoint-sl2-elementary" => Some(adjoint_sl2_elementary()),
        _ => None,
    }
}

pub const GENERATOR_FIXTURES: &[&str] =
    &["sl2-pair", "sl2-even-pair", "adjoint-sl2", "adjoint-sl2-elementary"];
