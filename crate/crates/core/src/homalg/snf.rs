//! Smith normal form over the integers.
//!
//! The reduction is the textbook one: move the smallest nonzero entry of the
//! trailing submatrix to the pivot position, clear its row and column by
//! Euclidean division, and repeat until the pivot divides everything left.
//! Every row operation is mirrored on `left` and every column operation on
//! `right`, so `left * m * right == diagonal` holds at all times.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;

/// Result of [`smith_normal_form`]: `left * m * right == diagonal`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub diagonal: IntMatrix,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

impl SmithForm {
    /// Nonzero diagonal entries, in order. Each divides the next.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.diagonal
            .diagonal()
            .into_iter()
            .filter(|d| !d.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

struct Reducer {
    d: IntMatrix,
    u: IntMatrix,
    v: IntMatrix,
}

impl Reducer {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.d.swap_rows(a, b);
        self.u.swap_rows(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.d.swap_cols(a, b);
        self.v.swap_cols(a, b);
    }

    fn add_row(&mut self, target: usize, source: usize, factor: &BigInt) {
        self.d.add_row_multiple(target, source, factor);
        self.u.add_row_multiple(target, source, factor);
    }

    fn add_col(&mut self, target: usize, source: usize, factor: &BigInt) {
        self.d.add_col_multiple(target, source, factor);
        self.v.add_col_multiple(target, source, factor);
    }

    /// Smallest |entry| in the trailing submatrix from (t, t); ties go to the
    /// first position in row-major order.
    fn find_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, BigInt)> = None;
        for i in t..self.d.rows() {
            for j in t..self.d.cols() {
                let x = self.d.get(i, j);
                if x.is_zero() {
                    continue;
                }
                let a = x.abs();
                if best.as_ref().is_none_or(|(_, _, b)| a < *b) {
                    best = Some((i, j, a));
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }

    /// Clears row and column `t` as far as Euclidean division allows.
    /// Returns true when both are now zero off the pivot.
    fn eliminate(&mut self, t: usize) -> bool {
        let mut clean = true;
        for i in t + 1..self.d.rows() {
            if self.d.get(i, t).is_zero() {
                continue;
            }
            let q = self.d.get(i, t).div_floor(self.d.get(t, t));
            self.add_row(i, t, &-q);
            clean &= self.d.get(i, t).is_zero();
        }
        for j in t + 1..self.d.cols() {
            if self.d.get(t, j).is_zero() {
                continue;
            }
            let q = self.d.get(t, j).div_floor(self.d.get(t, t));
            self.add_col(j, t, &-q);
            clean &= self.d.get(t, j).is_zero();
        }
        clean
    }

    fn first_non_multiple(&self, t: usize) -> Option<usize> {
        let pivot = self.d.get(t, t);
        for i in t + 1..self.d.rows() {
            for j in t + 1..self.d.cols() {
                if !self.d.get(i, j).is_multiple_of(pivot) {
                    return Some(i);
                }
            }
        }
        None
    }

    fn run(&mut self) {
        let n = self.d.rows().min(self.d.cols());
        for t in 0..n {
            loop {
                let Some((i, j)) = self.find_pivot(t) else {
                    return;
                };
                self.swap_rows(t, i);
                self.swap_cols(t, j);
                if !self.eliminate(t) {
                    continue;
                }
                match self.first_non_multiple(t) {
                    Some(i) => self.add_row(t, i, &BigInt::from(1)),
                    None => break,
                }
            }
            if self.d.get(t, t).is_negative() {
                self.d.negate_row(t);
                self.u.negate_row(t);
            }
        }
    }
}

/// Computes unimodular `left`, `right` with `left * m * right` diagonal,
/// non-negative, and satisfying the divisibility chain.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let mut r = Reducer {
        d: m.clone(),
        u: IntMatrix::identity(m.rows()),
        v: IntMatrix::identity(m.cols()),
    };
    r.run();
    SmithForm {
        diagonal: r.d,
        left: r.u,
        right: r.v,
    }
}
