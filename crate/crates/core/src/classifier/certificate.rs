use crate::complex::CochainAnalysis;
use crate::linalg::FinAbGroup;
use crate::spaces::{SpaceError, SpaceSpec};

use super::ClassifyError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CertificateKind {
    /// `H^{4j}(X; Z) = 0` for every `j ≥ 1`.
    VanishingH4j,
    /// `X` is a suspension and `ρ_2` is injective on every nonzero `H^{4j}(X; Z)`.
    Rho2InjectiveSuspension,
}

impl CertificateKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CertificateKind::VanishingH4j => "VanishingH4j",
            CertificateKind::Rho2InjectiveSuspension => "Rho2InjectiveSuspension",
        }
    }
}

/// One checked degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub degree: usize,
    pub group: FinAbGroup,
    /// `ρ_2` on this degree, only recorded for nonzero groups.
    pub rho2_injective: Option<bool>,
}

/// A computed proof of P-triviality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub witness: Vec<Witness>,
}

/// Tries to prove P-triviality from computed cohomology alone.
pub fn certify(spec: &SpaceSpec) -> Result<Option<Certificate>, ClassifyError> {
    let complex = spec.build_complex()?;
    let a = CochainAnalysis::new(&complex).map_err(SpaceError::from)?;
    // H^{4j} can only be nonzero where there are 4j-cells
    let mut witness: Vec<Witness> = complex
        .ranks()
        .keys()
        .filter(|&&d| d > 0 && d % 4 == 0)
        .map(|&degree| Witness {
            degree,
            group: a.integral_group(degree),
            rho2_injective: None,
        })
        .collect();
    if witness.iter().all(|w| w.group.is_trivial()) {
        return Ok(Some(Certificate {
            kind: CertificateKind::VanishingH4j,
            witness,
        }));
    }
    if !spec.is_suspension() {
        return Ok(None);
    }
    for w in witness.iter_mut().filter(|w| !w.group.is_trivial()) {
        let rho = a.reduction(w.degree, 2).map_err(SpaceError::from)?;
        if !rho.injective {
            return Ok(None);
        }
        w.rho2_injective = Some(true);
    }
    Ok(Some(Certificate {
        kind: CertificateKind::Rho2InjectiveSuspension,
        witness,
    }))
}

/// Recomputes the certificate and checks it matches and is internally sound.
pub fn verify_certificate(spec: &SpaceSpec, cert: &Certificate) -> Result<bool, ClassifyError> {
    let consistent = match cert.kind {
        CertificateKind::VanishingH4j => cert.witness.iter().all(|w| w.group.is_trivial()),
        CertificateKind::Rho2InjectiveSuspension => {
            spec.is_suspension()
                && cert
                    .witness
                    .iter()
                    .all(|w| w.group.is_trivial() || w.rho2_injective == Some(true))
        }
    };
    Ok(consistent && certify(spec)?.as_ref() == Some(cert))
}
