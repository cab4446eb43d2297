//! Symbolic spaces, their cellular chain complexes, and closed-form
//! (co)homology tables for the stunted projective families.
//!
//! `X(m,n)^k` is the `k`-fold reduced suspension of `RP^m/RP^n` and
//! `Y(m,n)^k` that of `CP^m/CP^n`. `X(m,0)` is `RP^m` itself (the
//! degree-1 cell is kept), likewise `Y(m,0) = CP^m`.

mod closed_form;
mod parse;

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::complex::{ChainComplex, ChainError};
use crate::linalg::IntegerMatrix;

pub use closed_form::{closed_form_cohomology, closed_form_cohomology_with, closed_form_homology};
pub use parse::ParseError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpaceError {
    #[error("invalid space: {0}")]
    InvalidSpec(String),
    #[error("no closed form for {0}")]
    UnsupportedSpec(String),
    #[error(transparent)]
    Chain(#[from] ChainError),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SpaceSpec {
    /// `Σ^k (RP^m / RP^n)`, `0 ≤ n < m`
    StuntedReal { m: u32, n: u32, k: u32 },
    /// `Σ^k (CP^m / CP^n)`, `0 ≤ n < m`
    StuntedComplex { m: u32, n: u32, k: u32 },
    /// `S^n`, `n ≥ 1`
    Sphere { n: u32 },
    /// `S^n × S^k`
    SphereProduct { n: u32, k: u32 },
    /// `Σ^k` of the closed orientable surface of genus `g ≥ 1`
    SurfaceSuspension { genus: u32, k: u32 },
    /// One-point union of at least one space
    Wedge(Vec<SpaceSpec>),
    /// `Σ^k base`, `k ≥ 1`
    Suspension { base: Box<SpaceSpec>, k: u32 },
}

impl SpaceSpec {
    pub fn real(m: u32, n: u32, k: u32) -> Self {
        SpaceSpec::StuntedReal { m, n, k }
    }

    pub fn complex(m: u32, n: u32, k: u32) -> Self {
        SpaceSpec::StuntedComplex { m, n, k }
    }

    pub fn sphere(n: u32) -> Self {
        SpaceSpec::Sphere { n }
    }

    pub fn suspension(base: SpaceSpec, k: u32) -> Self {
        SpaceSpec::Suspension {
            base: Box::new(base),
            k,
        }
    }

    pub fn validate(&self) -> Result<(), SpaceError> {
        let bad = |msg: String| Err(SpaceError::InvalidSpec(msg));
        if self.wide_dimension() > u32::MAX as u64 {
            return bad(format!("{self}: dimension exceeds {}", u32::MAX));
        }
        match self {
            SpaceSpec::StuntedReal { m, n, .. } | SpaceSpec::StuntedComplex { m, n, .. } if n >= m => {
                bad(format!("{self}: need n < m"))
            }
            SpaceSpec::Sphere { n: 0 } => bad("S(0): sphere dimension must be at least 1".into()),
            SpaceSpec::SphereProduct { n, k } if *n == 0 || *k == 0 => {
                bad(format!("{self}: sphere dimensions must be at least 1"))
            }
            SpaceSpec::SurfaceSuspension { genus: 0, .. } => bad(format!("{self}: genus must be at least 1")),
            SpaceSpec::Wedge(parts) if parts.is_empty() => bad("W[]: empty wedge".into()),
            SpaceSpec::Wedge(parts) => parts.iter().try_for_each(SpaceSpec::validate),
            SpaceSpec::Suspension { k: 0, .. } => bad(format!("{self}: suspension degree must be at least 1")),
            SpaceSpec::Suspension { base, .. } => base.validate(),
            _ => Ok(()),
        }
    }

    /// Whether the space is (homotopy equivalent to) a reduced suspension.
    pub fn is_suspension(&self) -> bool {
        match self {
            SpaceSpec::StuntedReal { k, .. }
            | SpaceSpec::StuntedComplex { k, .. }
            | SpaceSpec::SurfaceSuspension { k, .. } => *k >= 1,
            SpaceSpec::Sphere { .. } | SpaceSpec::Suspension { .. } => true,
            SpaceSpec::SphereProduct { .. } => false,
            SpaceSpec::Wedge(parts) => parts.iter().all(SpaceSpec::is_suspension),
        }
    }

    /// The homotopy-equivalent simpler space for the two-cell stunted
    /// quotients (`n = m-1` or `n = m-2`), if any.
    pub fn recognize_splitting(&self) -> Option<SpaceSpec> {
        match *self {
            SpaceSpec::StuntedReal { m, n, k } if n + 1 == m => Some(SpaceSpec::sphere(m + k)),
            // RP^m/RP^{m-2}: Σ^{m-2}RP^2 for m even, S^m ∨ S^{m-1} for m odd
            SpaceSpec::StuntedReal { m, n, k } if n + 2 == m && n > 0 => Some(if m % 2 == 0 {
                SpaceSpec::suspension(SpaceSpec::real(2, 0, 0), m - 2 + k)
            } else {
                SpaceSpec::Wedge(vec![SpaceSpec::sphere(m + k), SpaceSpec::sphere(m - 1 + k)])
            }),
            SpaceSpec::StuntedComplex { m, n, k } if n + 1 == m => Some(SpaceSpec::sphere(2 * m + k)),
            // CP^m/CP^{m-2}: S^{2m} ∨ S^{2m-2} for m odd, Σ^{2m-4}CP^2 for m even
            SpaceSpec::StuntedComplex { m, n, k } if n + 2 == m && n > 0 => Some(if m % 2 == 1 {
                SpaceSpec::Wedge(vec![SpaceSpec::sphere(2 * m + k), SpaceSpec::sphere(2 * m - 2 + k)])
            } else {
                SpaceSpec::suspension(SpaceSpec::complex(2, 0, 0), 2 * m - 4 + k)
            }),
            _ => None,
        }
    }

    /// Cellular chain complex.
    pub fn build_complex(&self) -> Result<ChainComplex, SpaceError> {
        self.validate()?;
        Ok(match self {
            &SpaceSpec::StuntedReal { m, n, k } => {
                let (m, n) = (m as usize, n as usize);
                let ranks = std::iter::once((0, 1)).chain((n + 1..=m).map(|j| (j, 1)));
                let boundaries = (n + 2..=m)
                    .filter(|j| j % 2 == 0)
                    .map(|j| (j, IntegerMatrix::from_entries(1, 1, vec![BigInt::from(2)])));
                ChainComplex::from_parts(ranks, boundaries).suspend(k as usize)?
            }
            &SpaceSpec::StuntedComplex { m, n, k } => {
                let (m, n) = (m as usize, n as usize);
                let ranks = std::iter::once((0, 1)).chain((n + 1..=m).map(|i| (2 * i, 1)));
                ChainComplex::from_parts(ranks, []).suspend(k as usize)?
            }
            &SpaceSpec::Sphere { n } => ChainComplex::sphere(n as usize),
            &SpaceSpec::SphereProduct { n, k } => {
                ChainComplex::sphere(n as usize).tensor(&ChainComplex::sphere(k as usize))?
            }
            &SpaceSpec::SurfaceSuspension { genus, k } => {
                ChainComplex::from_parts([(0, 1), (1, 2 * genus as usize), (2, 1)], []).suspend(k as usize)?
            }
            SpaceSpec::Wedge(parts) => {
                let mut acc = parts[0].build_complex()?;
                for p in &parts[1..] {
                    acc = acc.wedge(&p.build_complex()?)?;
                }
                acc
            }
            SpaceSpec::Suspension { base, k } => base.build_complex()?.suspend(*k as usize)?,
        })
    }

    /// Cellular dimension.
    pub fn dimension(&self) -> u32 {
        self.wide_dimension() as u32
    }

    fn wide_dimension(&self) -> u64 {
        match self {
            SpaceSpec::StuntedReal { m, k, .. } => *m as u64 + *k as u64,
            SpaceSpec::StuntedComplex { m, k, .. } => 2 * *m as u64 + *k as u64,
            SpaceSpec::Sphere { n } => *n as u64,
            SpaceSpec::SphereProduct { n, k } => *n as u64 + *k as u64,
            SpaceSpec::SurfaceSuspension { k, .. } => 2 + *k as u64,
            SpaceSpec::Wedge(parts) => parts.iter().map(SpaceSpec::wide_dimension).max().unwrap_or(0),
            SpaceSpec::Suspension { base, k } => base.wide_dimension() + *k as u64,
        }
    }

    /// Parses the textual form, e.g. `X(5,2)^3`, `W[S(4),S(5)]`.
    pub fn parse(text: &str) -> Result<SpaceSpec, ParseError> {
        parse::parse(text)
    }
}

impl std::str::FromStr for SpaceSpec {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse::parse(s)
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, k: u32) -> fmt::Result {
    if k > 0 {
        write!(f, "^{k}")?;
    }
    Ok(())
}

impl fmt::Display for SpaceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceSpec::StuntedReal { m, n, k } => {
                write!(f, "X({m},{n})")?;
                write_power(f, *k)
            }
            SpaceSpec::StuntedComplex { m, n, k } => {
                write!(f, "Y({m},{n})")?;
                write_power(f, *k)
            }
            SpaceSpec::Sphere { n } => write!(f, "S({n})"),
            SpaceSpec::SphereProduct { n, k } => write!(f, "SxS({n},{k})"),
            SpaceSpec::SurfaceSuspension { genus, k } => {
                write!(f, "Surf({genus})")?;
                write_power(f, *k)
            }
            SpaceSpec::Wedge(parts) => {
                write!(f, "W[")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, "]")
            }
            SpaceSpec::Suspension { base, k } => write!(f, "Susp[{base}]^{k}"),
        }
    }
}
