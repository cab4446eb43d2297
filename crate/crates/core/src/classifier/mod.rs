//! Decision procedures for P-triviality: whether every real vector bundle
//! over a space has total Pontrjagin class 1.
//!
//! Every verdict carries a rule identifier and a short justification, so a
//! caller can trace which argument decided it. Where the known results are
//! silent the verdict is [`Status::NotCovered`]; [`certify`] can still
//! produce a machine-checked proof of P-triviality from cohomology alone.

mod certificate;
mod rules;
mod statement;

use std::fmt;

use thiserror::Error;

use crate::spaces::{SpaceError, SpaceSpec};

pub use certificate::{certify, verify_certificate, Certificate, CertificateKind, Witness};
pub use rules::{
    classify_sphere, classify_sphere_product, classify_stunted_complex, classify_stunted_real,
    classify_surface_suspension,
};
pub use statement::{discrepancy_report, theorem_statement_eval, Discrepancy, DiscrepancyKind, GridBounds};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("parameters out of range: {0}")]
    BadRange(String),
    #[error(transparent)]
    Space(#[from] SpaceError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    PTrivial,
    NotPTrivial,
    NotCovered,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::PTrivial => "PTrivial",
            Status::NotPTrivial => "NotPTrivial",
            Status::NotCovered => "NotCovered",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub status: Status,
    pub rule_id: &'static str,
    pub citation: String,
}

impl Verdict {
    pub(crate) fn new(status: Status, rule_id: &'static str, citation: impl Into<String>) -> Self {
        Verdict {
            status,
            rule_id,
            citation: citation.into(),
        }
    }

    pub(crate) fn p_trivial(rule_id: &'static str, citation: impl Into<String>) -> Self {
        Self::new(Status::PTrivial, rule_id, citation)
    }

    pub(crate) fn not_p_trivial(rule_id: &'static str, citation: impl Into<String>) -> Self {
        Self::new(Status::NotPTrivial, rule_id, citation)
    }

    pub fn is_p_trivial(&self) -> bool {
        self.status == Status::PTrivial
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}] {}", self.status, self.rule_id, self.citation)
    }
}

fn phi_prefix(x: u64) -> u64 {
    // #{1 ≤ s ≤ x : s ≡ 0, 1, 2, 4 (mod 8)}
    let tail = match x % 8 {
        0 => 0,
        1 => 1,
        2 | 3 => 2,
        _ => 3,
    };
    4 * (x / 8) + tail
}

/// Number of integers `n < s ≤ m` with `s ≡ 0, 1, 2` or `4 (mod 8)`.
pub fn phi(m: u32, n: u32) -> Result<u32, ClassifyError> {
    if n > m {
        return Err(ClassifyError::BadRange(format!("phi({m},{n}) needs n <= m")));
    }
    Ok((phi_prefix(m as u64) - phi_prefix(n as u64)) as u32)
}

/// Classifies any space description.
///
/// Stunted families, spheres, sphere products and surface suspensions go to
/// their dedicated rules. Iterated suspensions are flattened first. A wedge
/// is P-trivial exactly when every summand is, since reduced KO-theory and
/// reduced cohomology of a wedge split as direct sums. Anything still
/// undecided falls back to [`certify`].
pub fn classify(spec: &SpaceSpec) -> Result<Verdict, ClassifyError> {
    spec.validate()?;
    let verdict = match flatten(spec) {
        SpaceSpec::StuntedReal { m, n, k } => classify_stunted_real(m, n, k)?,
        SpaceSpec::StuntedComplex { m, n, k } => classify_stunted_complex(m, n, k)?,
        SpaceSpec::Sphere { n } => classify_sphere(n)?,
        SpaceSpec::SphereProduct { n, k } => classify_sphere_product(n, k)?,
        SpaceSpec::SurfaceSuspension { genus, k } => classify_surface_suspension(genus, k)?,
        SpaceSpec::Wedge(parts) => {
            let verdicts = parts.iter().map(classify).collect::<Result<Vec<_>, _>>()?;
            if let Some((p, v)) = parts
                .iter()
                .zip(&verdicts)
                .find(|(_, v)| v.status == Status::NotPTrivial)
            {
                Verdict::not_p_trivial(
                    "wedge-summand",
                    format!(
                        "the wedge retracts onto {p}, which is not P-trivial ({}); pull back along the retraction",
                        v.rule_id
                    ),
                )
            } else if verdicts.iter().all(Verdict::is_p_trivial) {
                Verdict::p_trivial(
                    "wedge-summands",
                    "every wedge summand is P-trivial and KO and cohomology of a wedge split summand-wise",
                )
            } else {
                Verdict::new(
                    Status::NotCovered,
                    "wedge-undecided",
                    "some wedge summand is not covered",
                )
            }
        }
        SpaceSpec::Suspension { .. } => Verdict::new(
            Status::NotCovered,
            "not-covered",
            "no classification result applies to this suspension",
        ),
    };
    if verdict.status != Status::NotCovered {
        return Ok(verdict);
    }
    Ok(match certify(spec)? {
        Some(cert) => match cert.kind {
            CertificateKind::VanishingH4j => Verdict::p_trivial(
                "certificate-vanishing",
                "computed H^{4j}(X;Z) = 0 for all j >= 1, so every Pontrjagin class vanishes",
            ),
            CertificateKind::Rho2InjectiveSuspension => Verdict::p_trivial(
                "certificate-rho2",
                "X is a suspension and computed rho2 is injective on every nonzero H^{4j}(X;Z); \
                 rho2(p_j) = w_{2j}^2 = 0 since cup squares vanish on a suspension",
            ),
        },
        None => verdict,
    })
}

/// Pushes iterated suspensions into the parameters of the base where the
/// family is closed under suspension.
fn flatten(spec: &SpaceSpec) -> SpaceSpec {
    match spec {
        SpaceSpec::Suspension { base, k } => match flatten(base) {
            SpaceSpec::StuntedReal { m, n, k: k0 } => SpaceSpec::real(m, n, k0 + k),
            SpaceSpec::StuntedComplex { m, n, k: k0 } => SpaceSpec::complex(m, n, k0 + k),
            SpaceSpec::Sphere { n } => SpaceSpec::sphere(n + k),
            SpaceSpec::SurfaceSuspension { genus, k: k0 } => SpaceSpec::SurfaceSuspension { genus, k: k0 + k },
            SpaceSpec::Wedge(parts) => SpaceSpec::Wedge(
                parts
                    .into_iter()
                    .map(|p| flatten(&SpaceSpec::suspension(p, *k)))
                    .collect(),
            ),
            SpaceSpec::Suspension { base, k: k0 } => SpaceSpec::suspension(*base, k0 + k),
            other => SpaceSpec::suspension(other, *k),
        },
        other => other.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn enumerate_phi(m: u32, n: u32) -> u32 {
        (n + 1..=m).filter(|s| matches!(s % 8, 0 | 1 | 2 | 4)).count() as u32
    }

    #[test]
    fn phi_values() {
        assert_eq!(phi(5, 5).unwrap(), 0);
        assert_eq!(phi(8, 0).unwrap(), 4);
        let expected = [1, 2, 2, 3, 3, 3, 3, 4, 5, 6, 6, 7, 7, 7, 7, 8];
        let got: Vec<u32> = (1..=16).map(|n| phi(n, 0).unwrap()).collect();
        assert_eq!(got, expected);
        assert!(matches!(phi(2, 3), Err(ClassifyError::BadRange(_))));
    }

    #[test]
    fn phi_prefix_formula_matches_enumeration() {
        for m in 0..200 {
            for n in 0..=m {
                assert_eq!(phi(m, n).unwrap(), enumerate_phi(m, n), "phi({m},{n})");
            }
        }
        assert_eq!(phi(u32::MAX, 0).unwrap() as u64, (u32::MAX as u64 / 8) * 4 + 3);
    }

    #[test]
    fn flattening_suspensions() {
        let s = SpaceSpec::suspension(SpaceSpec::suspension(SpaceSpec::real(2, 0, 1), 2), 3);
        assert_eq!(flatten(&s), SpaceSpec::real(2, 0, 6));
        let w = SpaceSpec::suspension(
            SpaceSpec::Wedge(vec![SpaceSpec::sphere(1), SpaceSpec::complex(2, 0, 0)]),
            2,
        );
        assert_eq!(
            flatten(&w),
            SpaceSpec::Wedge(vec![SpaceSpec::sphere(3), SpaceSpec::complex(2, 0, 2)])
        );
    }

    #[test]
    fn generic_dispatch() {
        let v = |t: &str| classify(&SpaceSpec::parse(t).unwrap()).unwrap();
        assert_eq!(v("X(4,0)").status, Status::NotPTrivial);
        assert_eq!(v("Susp[X(2,0)]^2").status, Status::PTrivial);
        assert_eq!(v("W[S(5),S(4)]").status, Status::NotPTrivial);
        assert_eq!(v("W[S(5),S(6)]").status, Status::PTrivial);
        assert_eq!(v("Surf(3)^7").status, Status::NotCovered);
        let five = v("Surf(3)^5");
        assert_eq!((five.status, five.rule_id), (Status::PTrivial, "certificate-vanishing"));
        let susp_prod = v("Susp[SxS(2,2)]^1");
        assert_eq!(susp_prod.rule_id, "certificate-vanishing");
    }
}
