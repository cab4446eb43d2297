//! Exact integer (co)homology of cellular chain complexes, symbolic spaces
//! built from stunted projective spaces, and decision procedures for
//! Pontrjagin-triviality.

pub mod classifier;
pub mod complex;
pub mod linalg;
pub mod spaces;

pub use classifier::{certify, classify, phi, Certificate, CertificateKind, ClassifyError, Status, Verdict};
pub use complex::{ChainComplex, ChainError, Coefficients, GradedGroup};
pub use linalg::{FinAbGroup, IntegerMatrix, LinalgError, SmithDecomposition};
pub use spaces::{ParseError, SpaceError, SpaceSpec};
