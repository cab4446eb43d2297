//! Sublattices of `Zⁿ`, cokernels, and subquotient presentations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{smith_normal_form, FinAbGroup, IntegerMatrix, LinalgError, SmithDecomposition};

/// `Z^rows / col(A)`.
pub fn cokernel_group(a: &IntegerMatrix) -> FinAbGroup {
    let snf = smith_normal_form(a);
    FinAbGroup::from_orders(a.rows() - snf.rank(), snf.invariant_factors)
}

/// Columns form a basis of the integer kernel of `a`.
pub fn kernel_basis(a: &IntegerMatrix) -> IntegerMatrix {
    kernel_from_snf(a.cols(), &smith_normal_form(a))
}

pub(crate) fn kernel_from_snf(cols: usize, snf: &SmithDecomposition) -> IntegerMatrix {
    let idx: Vec<usize> = (snf.rank()..cols).collect();
    snf.v.select_columns(&idx)
}

/// The subgroup of `Zⁿ` spanned by a finite set of column vectors, with an
/// SNF kept around for exact membership tests.
#[derive(Clone, Debug)]
pub struct Lattice {
    generators: IntegerMatrix,
    snf: SmithDecomposition,
}

impl Lattice {
    pub fn from_generators(generators: IntegerMatrix) -> Self {
        let snf = smith_normal_form(&generators);
        Lattice { generators, snf }
    }

    /// The full lattice `Zⁿ`.
    pub fn full(n: usize) -> Self {
        Self::from_generators(IntegerMatrix::identity(n))
    }

    pub fn ambient_dim(&self) -> usize {
        self.generators.rows()
    }

    pub fn rank(&self) -> usize {
        self.snf.rank()
    }

    pub fn generators(&self) -> &IntegerMatrix {
        &self.generators
    }

    /// A basis: `sᵢ · (U⁻¹)ᵢ` for the nonzero invariant factors `sᵢ`.
    pub fn basis(&self) -> IntegerMatrix {
        let n = self.ambient_dim();
        let mut b = IntegerMatrix::zeros(n, self.rank());
        for (j, s) in self.snf.invariant_factors.iter().enumerate() {
            for i in 0..n {
                b[(i, j)] = &self.snf.u_inv[(i, j)] * s;
            }
        }
        b
    }

    /// Some `y` with `generators · y = c`, or `None` if `c` is outside the lattice.
    pub fn solve(&self, c: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(c.len(), self.ambient_dim(), "vector length mismatch");
        let uc = self.snf.u.mul_vec(c);
        let r = self.rank();
        if uc[r..].iter().any(|x| !x.is_zero()) {
            return None;
        }
        let mut w = vec![BigInt::zero(); self.generators.cols()];
        for i in 0..r {
            let (q, rem) = uc[i].div_rem(&self.snf.invariant_factors[i]);
            if !rem.is_zero() {
                return None;
            }
            w[i] = q;
        }
        Some(self.snf.v.mul_vec(&w))
    }

    pub fn contains(&self, c: &[BigInt]) -> bool {
        self.solve(c).is_some()
    }

    pub fn contains_lattice(&self, other: &Lattice) -> bool {
        other.generators.columns().all(|c| self.contains(&c))
    }

    /// Equality as subgroups of `Zⁿ`.
    pub fn same_as(&self, other: &Lattice) -> bool {
        self.ambient_dim() == other.ambient_dim()
            && self.rank() == other.rank()
            && self.contains_lattice(other)
            && other.contains_lattice(self)
    }
}

/// A presentation of `cycles / boundaries` with explicit generators.
///
/// `generators()` holds ambient representatives of the canonical generators
/// of `group()` (torsion first), and [`Subquotient::coordinates`] expresses
/// any vector of the cycle lattice in those generators.
#[derive(Clone, Debug)]
pub struct Subquotient {
    group: FinAbGroup,
    cycles: Lattice,
    // U from the SNF of the boundaries written in cycle coordinates.
    quotient_u: IntegerMatrix,
    gen_index: Vec<usize>,
    generators: IntegerMatrix,
}

impl Subquotient {
    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn generators(&self) -> &IntegerMatrix {
        &self.generators
    }

    pub fn generator(&self, i: usize) -> Vec<BigInt> {
        self.generators.column(i)
    }

    pub fn ambient_dim(&self) -> usize {
        self.cycles.ambient_dim()
    }

    /// Coordinates of a cycle in the canonical generators, torsion
    /// coordinates reduced into `[0, d)`.
    pub fn coordinates(&self, v: &[BigInt]) -> Result<Vec<BigInt>, LinalgError> {
        let y = self.cycles.solve(v).ok_or(LinalgError::NotACycle)?;
        let t = self.quotient_u.mul_vec(&y);
        let mut out: Vec<BigInt> = self.gen_index.iter().map(|&i| t[i].clone()).collect();
        self.group.normalize(&mut out);
        Ok(out)
    }

    /// Whether the cycle `v` is a boundary.
    pub fn is_zero_class(&self, v: &[BigInt]) -> Result<bool, LinalgError> {
        Ok(self.coordinates(v)?.iter().all(Zero::is_zero))
    }
}

/// Presents `col(cycles) / col(boundaries)`.
///
/// The columns of `cycles` must be linearly independent and the column
/// space of `boundaries` must lie in the lattice they span.
pub fn subquotient_presentation(
    cycles: &IntegerMatrix,
    boundaries: &IntegerMatrix,
) -> Result<Subquotient, LinalgError> {
    assert_eq!(cycles.rows(), boundaries.rows(), "ambient dimension mismatch");
    let z = cycles.cols();
    let cycles = Lattice::from_generators(cycles.clone());
    if cycles.rank() != z {
        return Err(LinalgError::DependentCycles {
            rank: cycles.rank(),
            columns: z,
        });
    }

    let mut rel = IntegerMatrix::zeros(z, boundaries.cols());
    for j in 0..boundaries.cols() {
        let y = cycles
            .solve(&boundaries.column(j))
            .ok_or(LinalgError::ContainmentViolation { column: j })?;
        for (i, x) in y.into_iter().enumerate() {
            rel[(i, j)] = x;
        }
    }

    let snf = smith_normal_form(&rel);
    let r = snf.rank();
    let mut gen_index: Vec<usize> = (0..r).filter(|&i| !snf.invariant_factors[i].is_one()).collect();
    let torsion: Vec<BigInt> = gen_index.iter().map(|&i| snf.invariant_factors[i].clone()).collect();
    gen_index.extend(r..z);

    let reps = &cycles.generators * &snf.u_inv.select_columns(&gen_index);
    Ok(Subquotient {
        group: FinAbGroup::from_orders(z - r, torsion),
        cycles,
        quotient_u: snf.u,
        gen_index,
        generators: reps,
    })
}
