//! Smith normal form over the integers.
//!
//! For an `m x n` matrix `A` we compute unimodular `U` (`m x m`) and `V`
//! (`n x n`) with `U * A * V = S`, where `S` is diagonal, its nonzero
//! entries are positive and each one divides the next. The inverses of both
//! transforms are tracked alongside so that callers can move between the
//! original and the diagonal coordinates without a separate inversion.
//!
//! Pivots are always the entry of least absolute value in the remaining
//! block. This keeps intermediate coefficients small on the matrices that
//! arise from cellular boundaries, and is deterministic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntegerMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    /// Left transform.
    pub u: IntegerMatrix,
    /// Diagonal form, same shape as the source.
    pub s: IntegerMatrix,
    /// Right transform.
    pub v: IntegerMatrix,
    /// `u⁻¹`
    pub u_inv: IntegerMatrix,
    /// `v⁻¹`
    pub v_inv: IntegerMatrix,
    /// Nonzero diagonal entries of `s`, in order.
    pub invariant_factors: Vec<BigInt>,
}

impl SmithDecomposition {
    #[inline]
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    /// Diagonal entry `i` of `S`, zero past the rank.
    pub fn diag(&self, i: usize) -> BigInt {
        self.invariant_factors.get(i).cloned().unwrap_or_else(BigInt::zero)
    }
}

struct Reducer {
    a: IntegerMatrix,
    u: IntegerMatrix,
    u_inv: IntegerMatrix,
    v: IntegerMatrix,
    v_inv: IntegerMatrix,
}

impl Reducer {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.u.swap_rows(i, j);
        self.u_inv.swap_cols(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v.swap_cols(i, j);
        self.v_inv.swap_rows(i, j);
    }

    /// row[dst] += c * row[src]
    fn add_row(&mut self, dst: usize, src: usize, c: &BigInt) {
        self.a.add_row_multiple(dst, src, c);
        self.u.add_row_multiple(dst, src, c);
        self.u_inv.add_col_multiple(src, dst, &-c);
    }

    /// col[dst] += c * col[src]
    fn add_col(&mut self, dst: usize, src: usize, c: &BigInt) {
        self.a.add_col_multiple(dst, src, c);
        self.v.add_col_multiple(dst, src, c);
        self.v_inv.add_row_multiple(src, dst, &-c);
    }

    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        self.u.negate_row(i);
        self.u_inv.negate_col(i);
    }

    /// Smallest nonzero |entry| in the block `[t.., t..]`.
    fn min_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let x = &self.a[(i, j)];
                if x.is_zero() {
                    continue;
                }
                let better = match best {
                    None => true,
                    Some(b) => x.abs() < self.a[b].abs(),
                };
                if better {
                    best = Some((i, j));
                    if x.abs().is_one() {
                        return best;
                    }
                }
            }
        }
        best
    }

    /// Clears row `t` and column `t` outside the pivot, and ensures the pivot
    /// divides every entry of the remaining block.
    fn settle_pivot(&mut self, t: usize) {
        let (rows, cols) = (self.a.rows(), self.a.cols());
        loop {
            let p = self.a[(t, t)].clone();
            for i in t + 1..rows {
                if !self.a[(i, t)].is_zero() {
                    let q = self.a[(i, t)].div_floor(&p);
                    self.add_row(i, t, &-q);
                }
            }
            for j in t + 1..cols {
                if !self.a[(t, j)].is_zero() {
                    let q = self.a[(t, j)].div_floor(&p);
                    self.add_col(j, t, &-q);
                }
            }

            // A nonzero remainder is strictly smaller than the pivot.
            let mut smaller: Option<(usize, usize)> = None;
            for i in t + 1..rows {
                if !self.a[(i, t)].is_zero() && smaller.is_none_or(|s| self.a[(i, t)].abs() < self.a[s].abs()) {
                    smaller = Some((i, t));
                }
            }
            for j in t + 1..cols {
                if !self.a[(t, j)].is_zero() && smaller.is_none_or(|s| self.a[(t, j)].abs() < self.a[s].abs()) {
                    smaller = Some((t, j));
                }
            }
            if let Some((i, j)) = smaller {
                self.swap_rows(t, i);
                self.swap_cols(t, j);
                continue;
            }

            // Row and column are clear; enforce divisibility of the block.
            let offending = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !self.a[(i, j)].is_multiple_of(&p)));
            match offending {
                Some(i) => self.add_row(t, i, &BigInt::one()),
                None => break,
            }
        }
        if self.a[(t, t)].is_negative() {
            self.negate_row(t);
        }
    }
}

/// Smith normal form with transforms. Total on all shapes, including empty ones.
pub fn smith_normal_form(a: &IntegerMatrix) -> SmithDecomposition {
    let (rows, cols) = (a.rows(), a.cols());
    let mut r = Reducer {
        a: a.clone(),
        u: IntegerMatrix::identity(rows),
        u_inv: IntegerMatrix::identity(rows),
        v: IntegerMatrix::identity(cols),
        v_inv: IntegerMatrix::identity(cols),
    };

    let mut t = 0;
    while t < rows.min(cols) {
        let Some((i, j)) = r.min_pivot(t) else { break };
        r.swap_rows(t, i);
        r.swap_cols(t, j);
        r.settle_pivot(t);
        t += 1;
    }

    let invariant_factors = (0..t).map(|i| r.a[(i, i)].clone()).collect();
    SmithDecomposition {
        u: r.u,
        s: r.a,
        v: r.v,
        u_inv: r.u_inv,
        v_inv: r.v_inv,
        invariant_factors,
    }
}

/// Invariant factors only.
pub fn invariant_factors(a: &IntegerMatrix) -> Vec<BigInt> {
    smith_normal_form(a).invariant_factors
}

pub fn rank(a: &IntegerMatrix) -> usize {
    smith_normal_form(a).rank()
}
