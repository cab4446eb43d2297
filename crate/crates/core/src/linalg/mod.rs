//! Exact integer linear algebra: dense matrices, Smith normal form, and the
//! abelian-group presentations derived from it.

mod group;
mod lattice;
mod matrix;
mod smith;

pub use group::FinAbGroup;
pub(crate) use lattice::kernel_from_snf;
pub use lattice::{cokernel_group, kernel_basis, subquotient_presentation, Lattice, Subquotient};
pub use matrix::IntegerMatrix;
pub use smith::{invariant_factors, rank, smith_normal_form, SmithDecomposition};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("boundary column {column} is not in the span of the cycle lattice")]
    ContainmentViolation { column: usize },
    #[error("cycle generators are dependent (rank {rank} < {columns} columns)")]
    DependentCycles { rank: usize, columns: usize },
    #[error("vector is not in the cycle lattice")]
    NotACycle,
}
