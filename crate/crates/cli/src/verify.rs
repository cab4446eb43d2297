//! Grid sweeps that compare the chain-level engine with the closed forms
//! and check the classifier's invariants.

use std::fmt::{self, Write as _};

use num_bigint::BigInt;
use ptriv_core::classifier::{
    certify, classify_sphere, classify_stunted_complex, classify_stunted_real, discrepancy_report, phi, Discrepancy,
    DiscrepancyKind, GridBounds,
};
use ptriv_core::complex::{bockstein_exactness, cohomology, homology, CochainAnalysis};
use ptriv_core::spaces::{closed_form_cohomology, closed_form_cohomology_with, closed_form_homology};
use ptriv_core::{ChainComplex, Coefficients, FinAbGroup, GradedGroup, SpaceSpec, Status};
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Family {
    #[value(name = "X")]
    X,
    #[value(name = "Y")]
    Y,
    #[value(name = "all")]
    All,
}

impl Family {
    pub fn includes_real(self) -> bool {
        matches!(self, Family::X | Family::All)
    }

    pub fn includes_complex(self) -> bool {
        matches!(self, Family::Y | Family::All)
    }
}

/// The specs of a family over a grid, real before complex, each in
/// lexicographic `(m, n, k)` order.
pub fn grid_specs(family: Family, bounds: GridBounds) -> Vec<SpaceSpec> {
    let mut out = Vec::new();
    if family.includes_real() {
        out.extend(bounds.triples().map(|(m, n, k)| SpaceSpec::real(m, n, k)));
    }
    if family.includes_complex() {
        out.extend(bounds.triples().map(|(m, n, k)| SpaceSpec::complex(m, n, k)));
    }
    out
}

pub type CheckResult = Result<(), String>;

fn compare(what: &str, got: &GradedGroup, want: &GradedGroup) -> CheckResult {
    if got == want {
        return Ok(());
    }
    let top = got.max_degree().max(want.max_degree()).unwrap_or(0);
    let bad: Vec<String> = (0..=top)
        .filter(|&j| got.get(j) != want.get(j))
        .map(|j| format!("{what}^{j}: computed {} expected {}", got.get(j), want.get(j)))
        .collect();
    Err(bad.join("; "))
}

fn err(e: impl fmt::Display) -> String {
    e.to_string()
}

/// Integral cohomology by SNF against the closed form.
pub fn check_cohomology_oracle(spec: &SpaceSpec, c: &ChainComplex) -> CheckResult {
    compare(
        "H",
        &cohomology(c, Coefficients::Integers).map_err(err)?,
        &closed_form_cohomology(spec).map_err(err)?,
    )
}

/// Integral homology by SNF against the closed form (real family).
pub fn check_homology_oracle(spec: &SpaceSpec, c: &ChainComplex) -> CheckResult {
    compare(
        "H_",
        &homology(c, Coefficients::Integers).map_err(err)?,
        &closed_form_homology(spec).map_err(err)?,
    )
}

/// `Z/2` and `Z/4` cohomology by SNF against the closed form.
pub fn check_mod_q_oracle(spec: &SpaceSpec, c: &ChainComplex) -> CheckResult {
    for q in [2, 4] {
        let coeff = Coefficients::ModQ(q);
        compare(
            &format!("H(Z{q})"),
            &cohomology(c, coeff).map_err(err)?,
            &closed_form_cohomology_with(spec, coeff).map_err(err)?,
        )?;
    }
    Ok(())
}

/// `H^j ≅ Hom(H_j, Z) ⊕ Ext(H_{j-1}, Z)`, and the explicit mod-`q`
/// cocycle presentations agree with `H^j ⊗ Z/q ⊕ Tor(H^{j+1}, Z/q)`.
pub fn check_uct(c: &ChainComplex) -> CheckResult {
    let h = homology(c, Coefficients::Integers).map_err(err)?;
    let a = CochainAnalysis::new(c).map_err(err)?;
    let top = c.top_degree();
    for j in 0..=top {
        let lower = if j > 0 {
            h.get(j - 1).ext_z()
        } else {
            FinAbGroup::zero()
        };
        let want = h.get(j).hom_z().direct_sum(&lower);
        let got = a.integral_group(j);
        if got != want {
            return Err(format!("H^{j} = {got} but Hom/Ext give {want}"));
        }
    }
    for q in [2u32, 4] {
        let qq = BigInt::from(q);
        for j in 0..=top {
            let want = a
                .integral_group(j)
                .tensor_zq(&qq)
                .direct_sum(&a.integral_group(j + 1).tor_zq(&qq));
            let got = a.mod_q_presentation(j, q).map_err(err)?.group().clone();
            if got != want {
                return Err(format!("H^{j}(Z{q}) presented as {got} but UCT gives {want}"));
            }
        }
    }
    Ok(())
}

/// Exactness of the mod-2 Bockstein sequence at every degree.
pub fn check_bockstein(c: &ChainComplex) -> CheckResult {
    let a = CochainAnalysis::new(c).map_err(err)?;
    for j in 0..=c.top_degree() {
        let e = bockstein_exactness(&a, j, 2).map_err(err)?;
        if !e.holds() {
            return Err(format!("not exact in degree {j}: {e:?}"));
        }
    }
    Ok(())
}

/// No nonzero `H^{4j}` (`j ≥ 1`) forces a P-trivial verdict.
pub fn check_vanishing_soundness(spec: &SpaceSpec) -> CheckResult {
    let h = closed_form_cohomology(spec).map_err(err)?;
    let vanishing = h.iter().all(|(d, g)| d == 0 || d % 4 != 0 || g.is_trivial());
    let v = ptriv_core::classify(spec).map_err(err)?;
    if vanishing && v.status != Status::PTrivial {
        return Err(format!(
            "all H^{{4j}} vanish but verdict is {} [{}]",
            v.status, v.rule_id
        ));
    }
    Ok(())
}

/// A certificate forces a P-trivial verdict.
pub fn check_certificate_soundness(spec: &SpaceSpec) -> CheckResult {
    if let Some(cert) = certify(spec).map_err(err)? {
        let v = ptriv_core::classify(spec).map_err(err)?;
        if v.status != Status::PTrivial {
            return Err(format!(
                "{} certificate but verdict is {} [{}]",
                cert.kind.as_str(),
                v.status,
                v.rule_id
            ));
        }
    }
    Ok(())
}

/// `n = m-1` agrees with the sphere rule.
pub fn check_splitting_consistency(spec: &SpaceSpec) -> CheckResult {
    let (verdict, sphere) = match *spec {
        SpaceSpec::StuntedReal { m, n, k } if n + 1 == m => (
            classify_stunted_real(m, n, k).map_err(err)?,
            classify_sphere(m + k).map_err(err)?,
        ),
        SpaceSpec::StuntedComplex { m, n, k } if n + 1 == m => (
            classify_stunted_complex(m, n, k).map_err(err)?,
            classify_sphere(2 * m + k).map_err(err)?,
        ),
        _ => return Ok(()),
    };
    if verdict.status != sphere.status {
        return Err(format!(
            "{} but the sphere rule gives {}",
            verdict.status, sphere.status
        ));
    }
    Ok(())
}

/// A recognized splitting has the same (co)homology as the original.
pub fn check_splitting_soundness(spec: &SpaceSpec, c: &ChainComplex) -> CheckResult {
    let Some(target) = spec.recognize_splitting() else {
        return Ok(());
    };
    let t = target.build_complex().map_err(err)?;
    for coeff in [Coefficients::Integers, Coefficients::ModQ(2)] {
        compare(
            &format!("H({coeff}) vs {target}"),
            &cohomology(c, coeff).map_err(err)?,
            &cohomology(&t, coeff).map_err(err)?,
        )?;
        compare(
            &format!("H_({coeff}) vs {target}"),
            &homology(c, coeff).map_err(err)?,
            &homology(&t, coeff).map_err(err)?,
        )?;
    }
    Ok(())
}

/// Family-specific transcription checks.
pub fn check_transcriptions(spec: &SpaceSpec) -> CheckResult {
    match *spec {
        SpaceSpec::StuntedReal { m, n, k: 0 } if n % 4 == 3 => {
            let v = classify_stunted_real(m, n, 0).map_err(err)?;
            if v.status != Status::NotPTrivial {
                return Err(format!("n = 3 mod 4 with k = 0 but verdict {}", v.status));
            }
        }
        SpaceSpec::StuntedComplex { m, n, k } if k % 2 == 1 => {
            let v = classify_stunted_complex(m, n, k).map_err(err)?;
            if v.status != Status::PTrivial {
                return Err(format!("odd k but verdict {}", v.status));
            }
        }
        _ => {}
    }
    Ok(())
}

/// `phi` is monotone in `m` and additive over ranges.
pub fn check_phi(m_max: u32) -> CheckResult {
    for m in 0..=m_max {
        let pm = phi(m, 0).map_err(err)?;
        if m > 0 && pm < phi(m - 1, 0).map_err(err)? {
            return Err(format!("phi({m},0) < phi({},0)", m - 1));
        }
        for n in 0..=m {
            if phi(m, n).map_err(err)? != pm - phi(n, 0).map_err(err)? {
                return Err(format!("phi({m},{n}) != phi({m},0) - phi({n},0)"));
            }
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    CohomologyOracle,
    HomologyOracle,
    ModQOracle,
    Uct,
    Bockstein,
    VanishingSoundness,
    CertificateSoundness,
    SplittingConsistency,
    SplittingSoundness,
    Transcriptions,
}

impl Check {
    pub const ALL: [Check; 10] = [
        Check::CohomologyOracle,
        Check::HomologyOracle,
        Check::ModQOracle,
        Check::Uct,
        Check::Bockstein,
        Check::VanishingSoundness,
        Check::CertificateSoundness,
        Check::SplittingConsistency,
        Check::SplittingSoundness,
        Check::Transcriptions,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::CohomologyOracle => "cohomology oracle",
            Check::HomologyOracle => "homology oracle",
            Check::ModQOracle => "mod-q cohomology oracle",
            Check::Uct => "universal coefficients",
            Check::Bockstein => "Bockstein exactness",
            Check::VanishingSoundness => "soundness vs vanishing",
            Check::CertificateSoundness => "certificate soundness",
            Check::SplittingConsistency => "splitting consistency",
            Check::SplittingSoundness => "splitting soundness",
            Check::Transcriptions => "rule transcriptions",
        }
    }

    fn applies(self, spec: &SpaceSpec) -> bool {
        match self {
            Check::HomologyOracle => matches!(spec, SpaceSpec::StuntedReal { .. }),
            _ => true,
        }
    }

    /// Runs this check on one grid space.
    pub fn run(self, spec: &SpaceSpec, c: &ChainComplex) -> CheckResult {
        match self {
            Check::CohomologyOracle => check_cohomology_oracle(spec, c),
            Check::HomologyOracle => check_homology_oracle(spec, c),
            Check::ModQOracle => check_mod_q_oracle(spec, c),
            Check::Uct => check_uct(c),
            Check::Bockstein => check_bockstein(c),
            Check::VanishingSoundness => check_vanishing_soundness(spec),
            Check::CertificateSoundness => check_certificate_soundness(spec),
            Check::SplittingConsistency => check_splitting_consistency(spec),
            Check::SplittingSoundness => check_splitting_soundness(spec, c),
            Check::Transcriptions => check_transcriptions(spec),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckTally {
    pub check: Check,
    pub checked: usize,
    /// `(spec, message)` for each failure, in grid order.
    pub failures: Vec<(String, String)>,
}

/// Runs `checks` over `specs` in parallel; tallies are in `checks` order and
/// failures in `specs` order.
pub fn run_checks(specs: &[SpaceSpec], checks: &[Check]) -> Vec<CheckTally> {
    let per_spec: Vec<Vec<(Check, Option<CheckResult>)>> = specs
        .par_iter()
        .map(|spec| {
            let complex = spec.build_complex().map_err(err);
            checks
                .iter()
                .map(|&check| {
                    if !check.applies(spec) {
                        return (check, None);
                    }
                    let r = match &complex {
                        Ok(c) => check.run(spec, c),
                        Err(e) => Err(format!("cannot build complex: {e}")),
                    };
                    (check, Some(r))
                })
                .collect()
        })
        .collect();
    checks
        .iter()
        .enumerate()
        .map(|(i, &check)| {
            let mut tally = CheckTally {
                check,
                checked: 0,
                failures: Vec::new(),
            };
            for (spec, results) in specs.iter().zip(&per_spec) {
                if let Some(r) = &results[i].1 {
                    tally.checked += 1;
                    if let Err(msg) = r {
                        tally.failures.push((spec.to_string(), msg.clone()));
                    }
                }
            }
            tally
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub family: Family,
    pub bounds: GridBounds,
    pub spaces: usize,
    pub tallies: Vec<CheckTally>,
    pub phi: CheckResult,
    pub discrepancies: Vec<Discrepancy>,
}

impl VerifyReport {
    pub fn failures(&self) -> usize {
        self.tallies.iter().map(|t| t.failures.len()).sum::<usize>() + usize::from(self.phi.is_err())
    }
}

pub fn run_verify(family: Family, bounds: GridBounds) -> VerifyReport {
    let specs = grid_specs(family, bounds);
    let discrepancies = if family.includes_real() {
        discrepancy_report(bounds).unwrap_or_default()
    } else {
        Vec::new()
    };
    VerifyReport {
        family,
        bounds,
        spaces: specs.len(),
        tallies: run_checks(&specs, &Check::ALL),
        phi: check_phi(bounds.m_max),
        discrepancies,
    }
}

/// Failures listed per check, at most this many.
const SHOWN_FAILURES: usize = 10;

pub fn render_report(r: &VerifyReport) -> String {
    let mut s = String::new();
    let b = r.bounds;
    let _ = writeln!(
        s,
        "family {:?}: {} spaces (m <= {}, n <= {}, k <= {})",
        r.family,
        r.spaces,
        b.m_max,
        b.n_max.min(b.m_max.saturating_sub(1)),
        b.k_max
    );
    for t in &r.tallies {
        let _ = writeln!(
            s,
            "  {:<24} {:>7} checked, {} mismatches",
            t.check.name(),
            t.checked,
            t.failures.len()
        );
        for (spec, msg) in t.failures.iter().take(SHOWN_FAILURES) {
            let _ = writeln!(s, "    {spec}: {msg}");
        }
    }
    match &r.phi {
        Ok(()) => {
            let _ = writeln!(
                s,
                "  {:<24} {:>7} checked, 0 mismatches",
                "phi identities",
                b.m_max as usize + 1
            );
        }
        Err(e) => {
            let _ = writeln!(s, "  {:<24} failed: {e}", "phi identities");
        }
    }
    let _ = writeln!(s, "{} mismatches", r.failures());
    if !r.discrepancies.is_empty() {
        let _ = writeln!(s, "discrepancies, literal statement vs case rules (informational):");
        for d in &r.discrepancies {
            let note = match d.kind {
                DiscrepancyKind::StatementVsRules => "",
                DiscrepancyKind::ClauseCAtBase => " (clause (c) read at n = 0; not applied)",
            };
            let _ = writeln!(
                s,
                "  {}: statement {} [{}: {}] vs rules {} [{}: {}]{note}",
                SpaceSpec::real(d.m, d.n, d.k),
                d.statement.status,
                d.statement.rule_id,
                d.statement.citation,
                d.rules.status,
                d.rules.rule_id,
                d.rules.citation
            );
        }
    }
    s
}
