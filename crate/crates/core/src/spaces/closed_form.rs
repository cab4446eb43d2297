//! Closed-form integral (co)homology of the stunted families, written as the
//! case tables they are usually stated in. These are the oracles that the
//! chain-level computation is checked against, so they deliberately do not
//! go through any complex.

use num_bigint::BigInt;

use super::{SpaceError, SpaceSpec};
use crate::complex::{Coefficients, GradedGroup};
use crate::linalg::FinAbGroup;

fn even(x: i64) -> bool {
    x.rem_euclid(2) == 0
}

fn odd(x: i64) -> bool {
    !even(x)
}

/// `H^j(X^k_{m,n}; Z)`:
/// `Z` if `j = 0`, or `j-k = n+1` even, or `j-k = m` odd;
/// `Z2` if `j-k` even and `n+k+1 < j ≤ m+k`; otherwise `0`.
fn real_cohomology(m: i64, n: i64, k: i64, j: i64) -> FinAbGroup {
    let s = j - k;
    if j == 0 || (s == n + 1 && even(s)) || (s == m && odd(s)) {
        FinAbGroup::free(1)
    } else if even(s) && n + k + 1 < j && j <= m + k {
        FinAbGroup::cyclic(2)
    } else {
        FinAbGroup::zero()
    }
}

/// `H_j(X^k_{m,n}; Z)`:
/// `Z` if `j = 0`, or `j-k = n+1` even, or `j-k = m` odd;
/// `Z2` if `j-k` odd and `n+k < j < m+k`; otherwise `0`.
fn real_homology(m: i64, n: i64, k: i64, j: i64) -> FinAbGroup {
    let s = j - k;
    if j == 0 || (s == n + 1 && even(s)) || (s == m && odd(s)) {
        FinAbGroup::free(1)
    } else if odd(s) && n + k < j && j < m + k {
        FinAbGroup::cyclic(2)
    } else {
        FinAbGroup::zero()
    }
}

/// `H^j(Y^k_{m,n}; Z)`: `Z` if `j = 0`, or `2n+k+2 ≤ j ≤ 2m+k` with `j-k`
/// even; otherwise `0`.
fn complex_cohomology(m: i64, n: i64, k: i64, j: i64) -> FinAbGroup {
    if j == 0 || (2 * n + k + 2 <= j && j <= 2 * m + k && even(j - k)) {
        FinAbGroup::free(1)
    } else {
        FinAbGroup::zero()
    }
}

fn table(top: i64, f: impl Fn(i64) -> FinAbGroup) -> GradedGroup {
    (0..=top).map(|j| (j as usize, f(j))).collect()
}

/// Integral cohomology of `X(m,n)^k` or `Y(m,n)^k` from the closed form.
pub fn closed_form_cohomology(s: &SpaceSpec) -> Result<GradedGroup, SpaceError> {
    s.validate()?;
    match *s {
        SpaceSpec::StuntedReal { m, n, k } => {
            let (m, n, k) = (m as i64, n as i64, k as i64);
            Ok(table(m + k, |j| real_cohomology(m, n, k, j)))
        }
        SpaceSpec::StuntedComplex { m, n, k } => {
            let (m, n, k) = (m as i64, n as i64, k as i64);
            Ok(table(2 * m + k, |j| complex_cohomology(m, n, k, j)))
        }
        _ => Err(SpaceError::UnsupportedSpec(s.to_string())),
    }
}

/// Integral homology of `X(m,n)^k` from the closed form.
pub fn closed_form_homology(s: &SpaceSpec) -> Result<GradedGroup, SpaceError> {
    s.validate()?;
    match *s {
        SpaceSpec::StuntedReal { m, n, k } => {
            let (m, n, k) = (m as i64, n as i64, k as i64);
            Ok(table(m + k, |j| real_homology(m, n, k, j)))
        }
        _ => Err(SpaceError::UnsupportedSpec(s.to_string())),
    }
}

/// Closed-form cohomology with any coefficients; `Z/q` groups follow from
/// the integral table via `H^j ⊗ Z/q ⊕ Tor(H^{j+1}, Z/q)`.
pub fn closed_form_cohomology_with(s: &SpaceSpec, coeff: Coefficients) -> Result<GradedGroup, SpaceError> {
    let integral = closed_form_cohomology(s)?;
    let q = match coeff {
        Coefficients::Integers => return Ok(integral),
        Coefficients::ModQ(q) if q < 2 => {
            return Err(crate::complex::ChainError::InvalidModulus(q).into());
        }
        Coefficients::ModQ(q) => BigInt::from(q),
    };
    let top = s.dimension() as usize;
    Ok((0..=top)
        .map(|j| {
            (
                j,
                integral
                    .get(j)
                    .tensor_zq(&q)
                    .direct_sum(&integral.get(j + 1).tor_zq(&q)),
            )
        })
        .collect())
}
