use super::{phi, ClassifyError, Status, Verdict};

fn stunted_range(family: &str, m: u32, n: u32) -> Result<(), ClassifyError> {
    if n >= m {
        return Err(ClassifyError::BadRange(format!("{family}({m},{n}) needs 0 <= n < m")));
    }
    Ok(())
}

/// `p_j` of a bundle over `S^{4j}` can be nonzero, and only in degree `4j`.
fn sphere_verdict(n: u64, rule_id: &'static str, what: &str) -> Verdict {
    if n.is_multiple_of(4) {
        Verdict::not_p_trivial(
            rule_id,
            format!("{what} is S^{n}; n = 4j and some bundle over S^{{4j}} has p_j != 0"),
        )
    } else {
        Verdict::p_trivial(
            rule_id,
            format!("{what} is S^{n}; H^{{4j}}(S^{n};Z) = 0 for all j >= 1"),
        )
    }
}

/// `Σ^k (RP^m / RP^n)`.
pub fn classify_stunted_real(m: u32, n: u32, k: u32) -> Result<Verdict, ClassifyError> {
    stunted_range("X", m, n)?;
    let (m, n, k) = (m as u64, n as u64, k as u64);
    Ok(match (k, n) {
        (0, 0) => real_projective(m),
        (_, 0) => suspended_real_projective(m, k),
        (0, _) => {
            let v = stunted_real_unsuspended(m, n)?;
            debug_assert!(two_cell_real(m, n).is_none_or(|s| s == v.status));
            v
        }
        _ => suspended_stunted_real(m, n, k),
    })
}

fn real_projective(m: u64) -> Verdict {
    if m >= 4 {
        Verdict::not_p_trivial(
            "rp-w2-squared",
            format!("rho2 p_1(2γ) = w_2(2γ)^2 = x^4 != 0 on RP^{m} for the tautological line bundle γ"),
        )
    } else {
        Verdict::p_trivial("rp-low-dimension", format!("RP^{m} has dimension below 4"))
    }
}

fn suspended_real_projective(m: u64, k: u64) -> Verdict {
    let (k_odd, m_odd) = (k % 2 == 1, m % 2 == 1);
    if k_odd && m_odd && (k + m).is_multiple_of(4) {
        Verdict::not_p_trivial(
            "susp-rp-top-cell",
            format!(
                "the collapse onto the top cell S^{} has degree one and pulls back a bundle with p_{} != 0",
                m + k,
                (m + k) / 4
            ),
        )
    } else if k_odd {
        Verdict::p_trivial("susp-rp-odd", "for odd k every nonzero H^{4j}(X;Z) is absent")
    } else {
        Verdict::p_trivial(
            "susp-rp-rho2",
            "for even k every nonzero H^{4j}(X;Z) is Z2, so rho2 is injective there and rho2(p_j) = w_{2j}^2 = 0 on a suspension",
        )
    }
}

/// `RP^m / RP^n` with `n > 0`.
fn stunted_real_unsuspended(m: u64, n: u64) -> Result<Verdict, ClassifyError> {
    if n % 4 == 3 {
        return Ok(Verdict::not_p_trivial(
            "stunted-n-3-mod-4",
            format!(
                "K(RP^{m}/RP^{n}) surjects onto K(RP^{}/RP^{n}), which has a bundle with nonzero top Pontrjagin class",
                n + 2
            ),
        ));
    }
    let g = phi(n as u32, 0)?;
    let bound = 1u64.checked_shl(g + 1).filter(|b| *b != 0).unwrap_or(u64::MAX);
    if m >= bound {
        return Ok(Verdict::not_p_trivial(
            "stunted-w-squared",
            format!(
                "g = phi({n},0) = {g}, m >= 2^(g+1) = {bound}; the KO generator η pulls back to 2^g(γ-1), so w_{{2^g}}(η)^2 = x^{{2^(g+1)}} != 0"
            ),
        ));
    }
    let why = format!("g = phi({n},0) = {g}, m < 2^(g+1) = {bound}");
    Ok(match n % 8 {
        r if r % 2 == 0 => Verdict::p_trivial(
            "stunted-even-n",
            format!("{why}; for even n this bound makes RP^{m}/RP^{n} C-trivial"),
        ),
        5 => Verdict::p_trivial(
            "stunted-n-5-mod-8",
            format!(
                "{why}; RP^{m}/RP^{} is P-trivial with the same g and is isomorphic to RP^{m}/RP^{n} on H^{{4j}}, 4j > n+1",
                n - 1
            ),
        ),
        _ => Verdict::p_trivial(
            "stunted-n-1-mod-8",
            format!(
                "{why}; Stiefel-Whitney classes below degree 2^g vanish, so every w_{{2j}}^2 = 0 and rho2 is injective on nonzero H^{{4j}}"
            ),
        ),
    })
}

/// Status forced by the two-cell identifications: `S^m` for `n = m-1`;
/// `Σ^{m-2}RP^2` (m even) or `S^m ∨ S^{m-1}` (m odd) for `n = m-2`.
fn two_cell_real(m: u64, n: u64) -> Option<Status> {
    let not_if = |c: bool| if c { Status::NotPTrivial } else { Status::PTrivial };
    if n + 1 == m {
        Some(not_if(m.is_multiple_of(4)))
    } else if n + 2 == m {
        Some(not_if(m % 4 == 1))
    } else {
        None
    }
}

fn suspended_stunted_real(m: u64, n: u64, k: u64) -> Verdict {
    let (k_odd, m_odd, n_odd) = (k % 2 == 1, m % 2 == 1, n % 2 == 1);
    if k_odd && m_odd {
        if (k + m).is_multiple_of(4) {
            Verdict::not_p_trivial(
                "susp-stunted-top-cell",
                format!(
                    "the collapse onto the top cell S^{} has degree one and pulls back a bundle with p_{} != 0",
                    m + k,
                    (m + k) / 4
                ),
            )
        } else {
            Verdict::p_trivial(
                "susp-stunted-odd",
                "k and m odd with k+m = 2 mod 4 leave no nonzero H^{4j}(X;Z)",
            )
        }
    } else if !k_odd && n_odd {
        let b = k + n + 1;
        if b.is_multiple_of(4) {
            Verdict::not_p_trivial(
                "susp-stunted-bottom-cell",
                format!(
                    "a complex bundle ξ has c_{}(ξ) != 0 in H^{b}(X;Z) = Z, so p_{}(ξ) = ±2c_{}(ξ) != 0",
                    b / 2,
                    b / 4,
                    b / 2
                ),
            )
        } else if b % 8 == 2 {
            Verdict::p_trivial(
                "susp-stunted-rho2",
                "k+n+1 = 2 mod 8: every nonzero H^{4j}(X;Z) is Z2 and rho2 is injective on a suspension",
            )
        } else {
            Verdict::p_trivial(
                "susp-stunted-bottom-sphere",
                format!(
                    "k+n+1 = 6 mod 8: KO^-{k}(S^{}) = 0, so every bundle comes from Σ^k(RP^{m}/RP^{}), which is P-trivial",
                    n + 1,
                    n + 1
                ),
            )
        }
    } else {
        Verdict::p_trivial(
            "susp-stunted-c-trivial",
            "neither k and m both odd nor k even with n odd, so X is C-trivial and hence P-trivial",
        )
    }
}

/// `Σ^k (CP^m / CP^n)`.
pub fn classify_stunted_complex(m: u32, n: u32, k: u32) -> Result<Verdict, ClassifyError> {
    stunted_range("Y", m, n)?;
    let (m, n, k) = (m as u64, n as u64, k as u64);
    Ok(if k % 2 == 1 {
        Verdict::p_trivial("complex-odd-k", "for odd k all cohomology lies in odd degrees")
    } else if n + 1 == m {
        {
            let base = format!("CP^{m}/CP^{n}");
            let what = if k == 0 { base } else { format!("Σ^{k}({base})") };
            sphere_verdict(2 * m + k, "complex-top-sphere", &what)
        }
    } else {
        Verdict::not_p_trivial(
            "complex-bottom-cells",
            format!(
                "restriction to Σ^{k}(CP^{}/CP^{n}) is an isomorphism on H^{} and H^{}, and that two-cell complex is not P-trivial",
                n + 2,
                2 * n + k + 2,
                2 * n + k + 4
            ),
        )
    })
}

pub fn classify_sphere(n: u32) -> Result<Verdict, ClassifyError> {
    if n == 0 {
        return Err(ClassifyError::BadRange("S(0) needs n >= 1".into()));
    }
    Ok(sphere_verdict(n as u64, "sphere", "the space"))
}

/// `S^n × S^k`.
pub fn classify_sphere_product(n: u32, k: u32) -> Result<Verdict, ClassifyError> {
    if n == 0 || k == 0 {
        return Err(ClassifyError::BadRange(format!("SxS({n},{k}) needs n, k >= 1")));
    }
    let (n, k) = (n as u64, k as u64);
    Ok(if (n + k) % 4 == 0 {
        Verdict::not_p_trivial(
            "sphere-product-top-cell",
            format!(
                "the degree-one collapse onto S^{} pulls back a bundle with p_{} != 0",
                n + k,
                (n + k) / 4
            ),
        )
    } else if n % 4 == 0 || k % 4 == 0 {
        let d = if n % 4 == 0 { n } else { k };
        Verdict::not_p_trivial(
            "sphere-product-factor",
            format!("the projection onto S^{d} pulls back a bundle with p_{} != 0", d / 4),
        )
    } else {
        Verdict::p_trivial(
            "sphere-product-split",
            "S^n, S^k and S^n ∧ S^k are P-trivial and KO(S^n × S^k) splits over them",
        )
    })
}

/// `Σ^k` of the closed orientable surface of genus `g ≥ 1`.
pub fn classify_surface_suspension(genus: u32, k: u32) -> Result<Verdict, ClassifyError> {
    if genus == 0 {
        return Err(ClassifyError::BadRange("Surf(0) needs genus >= 1".into()));
    }
    Ok(match k {
        0 | 1 => Verdict::p_trivial(
            "surface-low-dimension",
            format!("the space has dimension {} < 4", 2 + k),
        ),
        2 => Verdict::not_p_trivial(
            "surface-degree-one",
            "the degree-one collapse onto S^4 pulls back a bundle with p_1 != 0",
        ),
        3 => Verdict::not_p_trivial(
            "surface-pontrjagin-square",
            "H^4(Z) -> H^4(Z4) is onto with zero Pontrjagin square on H^2(Z2) = 0, so some bundle realizes p_1 != 0",
        ),
        _ => Verdict::new(
            Status::NotCovered,
            "not-covered",
            "no classification result applies to surface suspensions with k >= 4",
        ),
    })
}
