//! Finite chain complexes of free abelian groups.
//!
//! A complex is stored as the ranks of its chain groups `C_j` and the
//! boundary matrices `d_j : C_j → C_{j-1}` (shape `rank(j-1) x rank(j)`).
//! Degrees of rank zero and zero boundary maps are simply not stored.

mod cohomology;
mod graded;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::linalg::{IntegerMatrix, LinalgError};

pub use cohomology::{
    bockstein, bockstein_exactness, bockstein_integral, coefficient_reduction, cohomology, homology,
    multiplication_map, BocksteinExactness, CochainAnalysis, PresentedMap,
};
pub use graded::{Coefficients, GradedGroup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("d_{0} has the wrong shape for the chain ranks")]
    ShapeMismatch(usize),
    #[error("d_{} ∘ d_{0} is not zero", .0 - 1)]
    NotAComplex(usize),
    #[error("complex has no degree-0 generator")]
    NotBased,
    #[error("d_1 does not respect the augmentation")]
    NotAugmented,
    #[error("coefficient modulus must be at least 2, got {0}")]
    InvalidModulus(u32),
    #[error("Bockstein lift failed in degree {0}")]
    LiftFailure(usize),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ChainComplex {
    ranks: BTreeMap<usize, usize>,
    boundaries: BTreeMap<usize, IntegerMatrix>,
}

impl ChainComplex {
    /// Assembles a complex without checking it; see [`ChainComplex::validate`].
    pub fn from_parts(
        ranks: impl IntoIterator<Item = (usize, usize)>,
        boundaries: impl IntoIterator<Item = (usize, IntegerMatrix)>,
    ) -> Self {
        let ranks: BTreeMap<usize, usize> = ranks.into_iter().filter(|&(_, r)| r > 0).collect();
        let mut c = ChainComplex {
            ranks,
            boundaries: BTreeMap::new(),
        };
        for (j, d) in boundaries {
            c.set_boundary(j, d);
        }
        c
    }

    fn set_boundary(&mut self, j: usize, d: IntegerMatrix) {
        let fits = j >= 1 && d.rows() == self.rank(j - 1) && d.cols() == self.rank(j);
        if fits && d.is_zero() {
            self.boundaries.remove(&j);
        } else {
            self.boundaries.insert(j, d);
        }
    }

    /// The one-point space.
    pub fn point() -> Self {
        Self::from_parts([(0, 1)], [])
    }

    /// `Z` in degrees `0` and `n`, no differentials.
    pub fn sphere(n: usize) -> Self {
        if n == 0 {
            return Self::from_parts([(0, 2)], []);
        }
        Self::from_parts([(0, 1), (n, 1)], [])
    }

    pub fn rank(&self, j: usize) -> usize {
        self.ranks.get(&j).copied().unwrap_or(0)
    }

    pub fn ranks(&self) -> &BTreeMap<usize, usize> {
        &self.ranks
    }

    /// Largest degree with a nonzero chain group (0 for the empty complex).
    pub fn top_degree(&self) -> usize {
        self.ranks.keys().next_back().copied().unwrap_or(0)
    }

    /// `d_j`, materialized as a zero matrix when not stored.
    pub fn boundary(&self, j: usize) -> IntegerMatrix {
        match self.boundaries.get(&j) {
            Some(d) => d.clone(),
            None => IntegerMatrix::zeros(if j == 0 { 0 } else { self.rank(j - 1) }, self.rank(j)),
        }
    }

    pub(crate) fn stored_boundary(&self, j: usize) -> Option<&IntegerMatrix> {
        self.boundaries.get(&j)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.ranks
            .iter()
            .map(|(&j, &r)| if j % 2 == 0 { r as i64 } else { -(r as i64) })
            .sum()
    }

    /// Checks matrix shapes and `d_{j-1} ∘ d_j = 0`.
    pub fn validate(&self) -> Result<(), ChainError> {
        for (&j, d) in &self.boundaries {
            if j == 0 || d.rows() != self.rank(j - 1) || d.cols() != self.rank(j) {
                return Err(ChainError::ShapeMismatch(j));
            }
        }
        for (&j, d) in &self.boundaries {
            if j < 2 {
                continue;
            }
            if let Some(below) = self.boundaries.get(&(j - 1)) {
                if !(below * d).is_zero() {
                    return Err(ChainError::NotAComplex(j));
                }
            }
        }
        Ok(())
    }

    fn check_based(&self) -> Result<(), ChainError> {
        if self.rank(0) == 0 {
            return Err(ChainError::NotBased);
        }
        if let Some(d1) = self.boundaries.get(&1) {
            for col in d1.columns() {
                if !col.iter().sum::<BigInt>().is_zero() {
                    return Err(ChainError::NotAugmented);
                }
            }
        }
        Ok(())
    }

    /// Reduced `k`-fold suspension.
    ///
    /// Cells of positive degree move up by `k`; the degree-0 cells other than
    /// the basepoint (cell 0) become cells of degree `k`, and a single new
    /// degree-0 cell serves as basepoint. Boundaries into the collapsed
    /// basepoint vanish.
    pub fn suspend(&self, k: usize) -> Result<ChainComplex, ChainError> {
        self.check_based()?;
        if k == 0 {
            return Ok(self.clone());
        }
        let mut ranks = vec![(0, 1), (k, self.rank(0) - 1)];
        ranks.extend(self.ranks.iter().filter(|(&j, _)| j > 0).map(|(&j, &r)| (j + k, r)));
        let mut out = ChainComplex::from_parts(ranks, []);
        for (&j, d) in &self.boundaries {
            if j == 1 {
                let keep: Vec<usize> = (1..d.rows()).collect();
                out.set_boundary(1 + k, d.select_rows(&keep));
            } else {
                out.set_boundary(j + k, d.clone());
            }
        }
        Ok(out)
    }

    /// One-point union, identifying the basepoints (cell 0 in degree 0).
    pub fn wedge(&self, other: &ChainComplex) -> Result<ChainComplex, ChainError> {
        self.check_based()?;
        other.check_based()?;
        let (a0, b0) = (self.rank(0), other.rank(0));
        let top = self.top_degree().max(other.top_degree());
        let mut ranks = vec![(0, a0 + b0 - 1)];
        ranks.extend((1..=top).map(|j| (j, self.rank(j) + other.rank(j))));
        let mut out = ChainComplex::from_parts(ranks, []);

        let d1a = self.boundary(1);
        let d1b = other.boundary(1);
        let mut d1 = IntegerMatrix::zeros(a0 + b0 - 1, d1a.cols() + d1b.cols());
        for i in 0..a0 {
            for j in 0..d1a.cols() {
                d1[(i, j)] = d1a[(i, j)].clone();
            }
        }
        for i in 0..b0 {
            let row = if i == 0 { 0 } else { a0 + i - 1 };
            for j in 0..d1b.cols() {
                d1[(row, d1a.cols() + j)] += &d1b[(i, j)];
            }
        }
        out.set_boundary(1, d1);
        for j in 2..=top {
            out.set_boundary(j, self.boundary(j).block_diag(&other.boundary(j)));
        }
        Ok(out)
    }

    /// Tensor product with differential `d(x⊗y) = dx⊗y + (-1)^|x| x⊗dy`.
    ///
    /// The basis of `(A⊗B)_n` lists the blocks `A_i⊗B_{n-i}` by increasing
    /// `i`, each in Kronecker order.
    pub fn tensor(&self, other: &ChainComplex) -> Result<ChainComplex, ChainError> {
        self.validate()?;
        other.validate()?;
        let top = self.top_degree() + other.top_degree();
        // offsets[n][i] = start of block A_i ⊗ B_{n-i} inside (A⊗B)_n
        let mut offsets: Vec<BTreeMap<usize, usize>> = Vec::with_capacity(top + 1);
        let mut ranks = Vec::with_capacity(top + 1);
        for n in 0..=top {
            let mut off = BTreeMap::new();
            let mut total = 0;
            for i in 0..=n {
                let r = self.rank(i) * other.rank(n - i);
                if r > 0 {
                    off.insert(i, total);
                    total += r;
                }
            }
            offsets.push(off);
            ranks.push((n, total));
        }
        let mut out = ChainComplex::from_parts(ranks.clone(), []);
        for n in 1..=top {
            let mut d = IntegerMatrix::zeros(ranks[n - 1].1, ranks[n].1);
            for (&i, &col0) in &offsets[n] {
                let j = n - i;
                if i >= 1 {
                    if let (Some(da), Some(&row0)) = (self.stored_boundary(i), offsets[n - 1].get(&(i - 1))) {
                        let block = da.kronecker(&IntegerMatrix::identity(other.rank(j)));
                        place(&mut d, &block, row0, col0);
                    }
                }
                if j >= 1 {
                    if let (Some(db), Some(&row0)) = (other.stored_boundary(j), offsets[n - 1].get(&i)) {
                        let sign = if i % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                        let block = IntegerMatrix::identity(self.rank(i)).kronecker(db).scale(&sign);
                        place(&mut d, &block, row0, col0);
                    }
                }
            }
            out.set_boundary(n, d);
        }
        Ok(out)
    }
}

fn place(target: &mut IntegerMatrix, block: &IntegerMatrix, row0: usize, col0: usize) {
    for i in 0..block.rows() {
        for j in 0..block.cols() {
            if !block[(i, j)].is_zero() {
                target[(row0 + i, col0 + j)] += &block[(i, j)];
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(x: i64) -> IntegerMatrix {
        IntegerMatrix::from_rows(&[[x]])
    }

    #[test]
    fn sphere_validates() {
        assert_eq!(ChainComplex::sphere(4).validate(), Ok(()));
        assert_eq!(ChainComplex::sphere(4).top_degree(), 4);
    }

    #[test]
    fn broken_square_is_reported_at_upper_degree() {
        let c = ChainComplex::from_parts([(1, 1), (2, 1), (3, 1)], [(2, m(1)), (3, m(1))]);
        assert_eq!(c.validate(), Err(ChainError::NotAComplex(3)));
    }

    #[test]
    fn shape_mismatch() {
        let c = ChainComplex::from_parts([(0, 1), (1, 2)], [(1, IntegerMatrix::zeros(1, 3))]);
        assert_eq!(c.validate(), Err(ChainError::ShapeMismatch(1)));
    }

    #[test]
    fn stunted_real_shape_validates() {
        // X_{5,2}: cells 0,3,4,5 with d4 = 2, d5 = 0
        let c = ChainComplex::from_parts([(0, 1), (3, 1), (4, 1), (5, 1)], [(4, m(2)), (5, m(0))]);
        assert_eq!(c.validate(), Ok(()));
        assert!(c.stored_boundary(5).is_none());
    }

    #[test]
    fn suspension_of_sphere_is_sphere() {
        assert_eq!(ChainComplex::sphere(2).suspend(2).unwrap(), ChainComplex::sphere(4));
        let c = ChainComplex::sphere(3);
        assert_eq!(c.suspend(1).unwrap().suspend(1).unwrap(), c.suspend(2).unwrap());
    }

    #[test]
    fn suspension_needs_basepoint() {
        let c = ChainComplex::from_parts([(1, 1)], []);
        assert_eq!(c.suspend(1), Err(ChainError::NotBased));
        let bad = ChainComplex::from_parts([(0, 1), (1, 1)], [(1, m(2))]);
        assert_eq!(bad.suspend(1), Err(ChainError::NotAugmented));
    }

    #[test]
    fn suspension_of_disconnected_complex() {
        // S^0: two points; ΣS^0 = S^1
        let s1 = ChainComplex::sphere(0).suspend(1).unwrap();
        assert_eq!(s1, ChainComplex::sphere(1));
    }

    #[test]
    fn wedge_and_tensor_ranks() {
        let w = ChainComplex::sphere(1).wedge(&ChainComplex::sphere(1)).unwrap();
        assert_eq!(w.rank(0), 1);
        assert_eq!(w.rank(1), 2);
        let t = ChainComplex::sphere(2).tensor(&ChainComplex::sphere(2)).unwrap();
        assert_eq!((t.rank(0), t.rank(2), t.rank(4)), (1, 2, 1));
        assert_eq!(t.euler_characteristic(), 4);
    }

    #[test]
    fn tensor_with_point_is_identity() {
        let c = ChainComplex::from_parts([(0, 1), (1, 1), (2, 1)], [(2, m(2))]);
        assert_eq!(c.tensor(&ChainComplex::point()).unwrap(), c);
        assert_eq!(ChainComplex::point().tensor(&c).unwrap(), c);
    }

    #[test]
    fn tensor_differential_squares_to_zero() {
        let rp2 = ChainComplex::from_parts([(0, 1), (1, 1), (2, 1)], [(2, m(2))]);
        let t = rp2.tensor(&rp2).unwrap();
        assert_eq!(t.validate(), Ok(()));
        assert_eq!(t.euler_characteristic(), 1);
    }
}
