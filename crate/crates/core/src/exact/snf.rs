//! Smith normal form with smallest-pivot selection.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMat;

/// `input = left · diag · right` with `left`, `right` unimodular and `diag`
/// rectangular-diagonal, nonnegative, with each nonzero entry dividing the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub left: IntMat,
    pub diag: IntMat,
    pub right: IntMat,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }

    /// The nonzero diagonal entries in order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let n = self.diag.rows().min(self.diag.cols());
        (0..n)
            .map(|i| self.diag[(i, i)].clone())
            .take_while(|x| !x.is_zero())
            .collect()
    }
}

struct Work {
    d: IntMat,
    left: IntMat,
    left_inv: IntMat,
    right: IntMat,
}

impl Work {
    fn row_op(&mut self, dst: usize, src: usize, c: &BigInt) {
        self.d.add_row_multiple(dst, src, c);
        self.left_inv.add_row_multiple(dst, src, c);
        self.left.add_col_multiple(src, dst, &-c);
    }

    fn col_op(&mut self, dst: usize, src: usize, c: &BigInt) {
        self.d.add_col_multiple(dst, src, c);
        self.right.add_row_multiple(src, dst, &-c);
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        self.d.swap_rows(a, b);
        self.left_inv.swap_rows(a, b);
        self.left.swap_cols(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.d.swap_cols(a, b);
        self.right.swap_rows(a, b);
    }

    fn negate_row(&mut self, i: usize) {
        self.d.negate_row(i);
        self.left_inv.negate_row(i);
        self.left.negate_col(i);
    }

    fn smallest_in_corner(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.d.rows() {
            for j in t..self.d.cols() {
                let x = &self.d[(i, j)];
                if x.is_zero() {
                    continue;
                }
                match best {
                    Some((bi, bj)) if self.d[(bi, bj)].abs() <= x.abs() => {}
                    _ => best = Some((i, j)),
                }
            }
        }
        best
    }
}

pub fn smith_normal_form(m: &IntMat) -> SnfResult {
    snf_with_left_inverse(m).0
}

/// Also returns `left⁻¹`, whose trailing rows span the integer left kernel.
pub(crate) fn snf_with_left_inverse(m: &IntMat) -> (SnfResult, IntMat) {
    let (r, c) = (m.rows(), m.cols());
    let mut w = Work {
        d: m.clone(),
        left: IntMat::identity(r),
        left_inv: IntMat::identity(r),
        right: IntMat::identity(c),
    };

    'diag: for t in 0..r.min(c) {
        loop {
            let Some((pi, pj)) = w.smallest_in_corner(t) else {
                break 'diag;
            };
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);
            let p = w.d[(t, t)].clone();

            let mut clean = true;
            for i in t + 1..r {
                if !w.d[(i, t)].is_zero() {
                    let q = w.d[(i, t)].div_floor(&p);
                    w.row_op(i, t, &-q);
                    clean &= w.d[(i, t)].is_zero();
                }
            }
            for j in t + 1..c {
                if !w.d[(t, j)].is_zero() {
                    let q = w.d[(t, j)].div_floor(&p);
                    w.col_op(j, t, &-q);
                    clean &= w.d[(t, j)].is_zero();
                }
            }
            if !clean {
                continue;
            }

            // Divisibility chain: pull a non-multiple into row t and reduce again.
            let offender = (t + 1..r)
                .find(|&i| (t + 1..c).any(|j| !w.d[(i, j)].is_multiple_of(&p)));
            match offender {
                Some(i) => w.row_op(t, i, &BigInt::from(1)),
                None => break,
            }
        }
        if w.d[(t, t)].is_negative() {
            w.negate_row(t);
        }
    }

    (SnfResult { left: w.left, diag: w.d, right: w.right }, w.left_inv)
}
