use ptriv_core::classifier::{
    classify_sphere, classify_sphere_product, classify_stunted_complex, classify_stunted_real,
    classify_surface_suspension, discrepancy_report, theorem_statement_eval, verify_certificate, DiscrepancyKind,
    GridBounds,
};
use ptriv_core::spaces::closed_form_cohomology;
use ptriv_core::{certify, classify, phi, CertificateKind, SpaceSpec, Status};
use Status::{NotCovered, NotPTrivial, PTrivial};

const GRID: GridBounds = GridBounds {
    m_max: 24,
    n_max: 23,
    k_max: 8,
};

fn status(text: &str) -> Status {
    classify(&SpaceSpec::parse(text).unwrap()).unwrap().status
}

fn grid_specs() -> Vec<SpaceSpec> {
    let mut specs: Vec<_> = GRID.triples().map(|(m, n, k)| SpaceSpec::real(m, n, k)).collect();
    specs.extend(
        GRID.triples()
            .filter(|t| t.0 <= 16)
            .map(|(m, n, k)| SpaceSpec::complex(m, n, k)),
    );
    specs
}

/// True when no degree `4j >= 4` carries a nonzero integral class.
fn vanishes_in_4j(s: &SpaceSpec) -> bool {
    closed_form_cohomology(s)
        .unwrap()
        .iter()
        .all(|(d, g)| d == 0 || d % 4 != 0 || g.is_trivial())
}

#[test]
fn vanishing_implies_p_trivial() {
    let mut vanishing = 0;
    for s in grid_specs() {
        if vanishes_in_4j(&s) {
            vanishing += 1;
            assert_eq!(classify(&s).unwrap().status, PTrivial, "{s}");
        }
    }
    assert!(vanishing > 50);
}

#[test]
fn certificates_are_sound() {
    let mut issued = 0;
    for s in grid_specs() {
        let Some(cert) = certify(&s).unwrap() else {
            continue;
        };
        issued += 1;
        assert_eq!(classify(&s).unwrap().status, PTrivial, "{s}");
        assert!(verify_certificate(&s, &cert).unwrap(), "{s}");
        if cert.kind == CertificateKind::VanishingH4j {
            assert!(vanishes_in_4j(&s), "{s}");
        }
    }
    assert!(issued > 100);
}

#[test]
fn rho2_certificates_for_double_and_quadruple_suspensions() {
    for k in [2, 4] {
        for m in k..=24 {
            let s = SpaceSpec::real(m, 0, k);
            let cert = certify(&s).unwrap().unwrap_or_else(|| panic!("{s} has no certificate"));
            assert_eq!(cert.kind, CertificateKind::Rho2InjectiveSuspension, "{s}");
        }
    }
}

#[test]
fn two_cell_quotients_follow_the_sphere_rule() {
    for m in 1..=30 {
        for k in 0..=10 {
            let sphere = classify_sphere(m + k).unwrap().status;
            assert_eq!(
                classify_stunted_real(m, m - 1, k).unwrap().status,
                sphere,
                "X({m},{})^{k}",
                m - 1
            );
            let sphere = classify_sphere(2 * m + k).unwrap().status;
            assert_eq!(
                classify_stunted_complex(m, m - 1, k).unwrap().status,
                sphere,
                "Y({m},{})^{k}",
                m - 1
            );
        }
    }
}

#[test]
fn n_three_mod_four_is_never_p_trivial() {
    for (m, n, _) in GRID.triples().filter(|&(_, n, k)| k == 0 && n % 4 == 3) {
        assert_eq!(
            classify_stunted_real(m, n, 0).unwrap().status,
            NotPTrivial,
            "X({m},{n})"
        );
    }
}

#[test]
fn odd_suspensions_of_complex_quotients_are_p_trivial() {
    for (m, n, k) in GRID.triples().filter(|&(_, _, k)| k % 2 == 1) {
        assert_eq!(
            classify_stunted_complex(m, n, k).unwrap().status,
            PTrivial,
            "Y({m},{n})^{k}"
        );
    }
}

#[test]
fn stunted_families_are_always_decided() {
    for (m, n, k) in GRID.triples() {
        assert_ne!(
            classify_stunted_real(m, n, k).unwrap().status,
            NotCovered,
            "X({m},{n})^{k}"
        );
        assert_ne!(
            classify_stunted_complex(m, n, k).unwrap().status,
            NotCovered,
            "Y({m},{n})^{k}"
        );
    }
}

#[test]
fn golden_verdicts() {
    assert_eq!(status("X(4,0)"), NotPTrivial);
    assert_eq!(status("X(3,0)"), PTrivial);
    for m in 4..=10 {
        assert_eq!(status(&format!("X({m},1)")), NotPTrivial, "X({m},1)");
    }
    assert_eq!(status("X(2,1)"), PTrivial);
    assert_eq!(status("X(3,1)"), PTrivial);
    assert_eq!(status("X(3,0)^1"), NotPTrivial);
    assert_eq!(status("X(5,0)^2"), PTrivial);
    assert_eq!(status("X(7,3)"), NotPTrivial);
    for n in 1..=16 {
        let want = if n % 4 == 0 { NotPTrivial } else { PTrivial };
        assert_eq!(status(&format!("S({n})")), want, "S({n})");
    }
    assert_eq!(status("SxS(2,2)"), NotPTrivial);
    assert_eq!(status("SxS(2,3)"), PTrivial);
    for k in 0..=10 {
        let want = if k % 2 == 1 { PTrivial } else { NotPTrivial };
        assert_eq!(status(&format!("Y(2,0)^{k}")), want, "Y(2,0)^{k}");
    }
    for g in 1..=3 {
        for (k, want) in [(0, PTrivial), (1, PTrivial), (2, NotPTrivial), (3, NotPTrivial)] {
            assert_eq!(classify_surface_suspension(g, k).unwrap().status, want, "Surf({g})^{k}");
        }
    }
    assert_eq!(status("Y(7,3)^5"), PTrivial);
}

#[test]
fn products_and_wedges() {
    assert_eq!(classify_sphere_product(4, 1).unwrap().status, NotPTrivial);
    assert_eq!(classify_sphere_product(3, 5).unwrap().status, NotPTrivial);
    assert_eq!(classify_sphere_product(3, 6).unwrap().status, PTrivial);
    assert_eq!(status("W[S(3),X(3,0)]"), PTrivial);
    assert_eq!(status("W[S(3),X(4,0)]"), NotPTrivial);
    assert_eq!(status("Susp[X(2,0)]^2"), status("X(2,0)^2"));
}

#[test]
fn every_verdict_is_justified() {
    for s in grid_specs().iter().step_by(7) {
        let v = classify(s).unwrap();
        assert!(!v.rule_id.is_empty() && !v.citation.is_empty(), "{s}");
    }
}

#[test]
fn surface_suspensions_beyond_three_fall_back_to_certificates() {
    assert_eq!(classify_surface_suspension(3, 5).unwrap().status, NotCovered);
    assert_eq!(status("Surf(3)^5"), PTrivial);
    assert_eq!(status("Surf(3)^7"), NotCovered);
}

/// Count of `1 <= i <= n` with `i ≡ 0, 1, 2, 4 (mod 8)`.
fn phi_by_enumeration(n: u32) -> u32 {
    (1..=n).filter(|i| matches!(i % 8, 0 | 1 | 2 | 4)).count() as u32
}

#[test]
fn phi_fixture() {
    let fixture = [1, 2, 2, 3, 3, 3, 3, 4, 5, 6, 6, 7, 7, 7, 7, 8];
    for (i, &want) in fixture.iter().enumerate() {
        let n = i as u32 + 1;
        assert_eq!(phi(n, 0).unwrap(), want, "phi({n})");
        assert_eq!(phi_by_enumeration(n), want, "enumeration({n})");
    }
}

#[test]
fn phi_identities() {
    for m in 0..=300 {
        assert_eq!(phi(m, 0).unwrap(), phi_by_enumeration(m));
        if m > 0 {
            assert!(phi(m, 0).unwrap() >= phi(m - 1, 0).unwrap());
        }
        for n in 0..=m {
            assert_eq!(
                phi(m, n).unwrap(),
                phi(m, 0).unwrap() - phi(n, 0).unwrap(),
                "phi({m},{n})"
            );
        }
    }
    assert!(phi(2, 3).is_err());
}

#[test]
fn literal_statement_report() {
    let report = discrepancy_report(GridBounds {
        m_max: 10,
        n_max: 9,
        k_max: 6,
    })
    .unwrap();
    let literal: Vec<_> = report
        .iter()
        .filter(|d| d.kind == DiscrepancyKind::StatementVsRules)
        .map(|d| (d.m, d.n, d.k))
        .collect();
    assert!(literal.contains(&(2, 0, 2)));
    assert!(!literal.contains(&(3, 0, 1)));
    for &(m, n, k) in &literal {
        assert!(n == 0 && k > 0 && m % 2 == 0 && (m + k) % 4 == 0, "({m},{n},{k})");
    }
    for d in &report {
        assert_ne!(d.statement.status, d.rules.status, "({},{},{})", d.m, d.n, d.k);
    }
    let (a, b) = (
        theorem_statement_eval(3, 0, 1).unwrap(),
        classify_stunted_real(3, 0, 1).unwrap(),
    );
    assert_eq!((a.status, b.status), (NotPTrivial, NotPTrivial));
    assert!(discrepancy_report(GridBounds {
        m_max: 0,
        n_max: 0,
        k_max: 0
    })
    .unwrap()
    .is_empty());
}
