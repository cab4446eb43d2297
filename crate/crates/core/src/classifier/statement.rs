//! Literal evaluation of the published four-clause criterion for
//! `Σ^k (RP^m / RP^n)` and its comparison against the case-by-case rules.

use super::{classify_stunted_real, phi, ClassifyError, Status, Verdict};

/// Evaluates the four clauses exactly as stated. Clause (c) is read for
/// `n > 0` only; at `n = 0` it would contradict clause (a) for `m = 2, 3`.
pub fn theorem_statement_eval(m: u32, n: u32, k: u32) -> Result<Verdict, ClassifyError> {
    if n >= m {
        return Err(ClassifyError::BadRange(format!("X({m},{n}) needs 0 <= n < m")));
    }
    let (m64, n64, k64) = (m as u64, n as u64, k as u64);
    if k == 0 && n == 0 && m >= 4 {
        return Ok(Verdict::not_p_trivial("statement-a", "k = 0 = n and m >= 4"));
    }
    if n == 0 && (k64 + m64) % 4 == 0 {
        return Ok(Verdict::not_p_trivial("statement-b", "n = 0 and k+m = 0 mod 4"));
    }
    if k == 0 && n > 0 && clause_c(m, n)? {
        return Ok(Verdict::not_p_trivial(
            "statement-c",
            "k = 0, g = phi(n,0) and either n = 3 mod 4 or m >= 2^(g+1)",
        ));
    }
    if k > 0 && ((k % 2 == 1 && (k64 + m64) % 4 == 0) || (k.is_multiple_of(2) && (k64 + n64 + 1) % 4 == 0)) {
        return Ok(Verdict::not_p_trivial(
            "statement-d",
            "k > 0 with k odd and k+m = 0 mod 4, or k even and k+n+1 = 0 mod 4",
        ));
    }
    Ok(Verdict::p_trivial("statement-none", "no clause applies"))
}

fn clause_c(m: u32, n: u32) -> Result<bool, ClassifyError> {
    let g = phi(n, 0)?;
    let bound = 1u64.checked_shl(g + 1).filter(|b| *b != 0).unwrap_or(u64::MAX);
    Ok(n % 4 == 3 || m as u64 >= bound)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GridBounds {
    pub m_max: u32,
    pub n_max: u32,
    pub k_max: u32,
}

impl GridBounds {
    /// Every `(m, n, k)` with `1 ≤ m ≤ m_max`, `0 ≤ n < m`, `n ≤ n_max`,
    /// `0 ≤ k ≤ k_max`, in lexicographic order.
    pub fn triples(self) -> impl Iterator<Item = (u32, u32, u32)> {
        (1..=self.m_max).flat_map(move |m| {
            (0..m.min(self.n_max.saturating_add(1))).flat_map(move |n| (0..=self.k_max).map(move |k| (m, n, k)))
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiscrepancyKind {
    /// Literal statement and case rules disagree.
    StatementVsRules,
    /// Reading clause (c) at `n = 0` would flip the verdict; informational.
    ClauseCAtBase,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub m: u32,
    pub n: u32,
    pub k: u32,
    pub kind: DiscrepancyKind,
    pub statement: Verdict,
    pub rules: Verdict,
}

/// Every triple in the grid where the literal statement and the case rules
/// disagree, followed by the triples where clause (c) read at `n = 0`
/// would disagree with the rules.
pub fn discrepancy_report(bounds: GridBounds) -> Result<Vec<Discrepancy>, ClassifyError> {
    let mut out = Vec::new();
    let mut base = Vec::new();
    for (m, n, k) in bounds.triples() {
        let rules = classify_stunted_real(m, n, k)?;
        let statement = theorem_statement_eval(m, n, k)?;
        if k == 0 && n == 0 && clause_c(m, 0)? && rules.status == Status::PTrivial {
            base.push(Discrepancy {
                m,
                n,
                k,
                kind: DiscrepancyKind::ClauseCAtBase,
                statement: Verdict::not_p_trivial(
                    "statement-c",
                    "clause (c) read at n = 0: g = phi(0,0) = 0 and m >= 2",
                ),
                rules: rules.clone(),
            });
        }
        if statement.status != rules.status {
            out.push(Discrepancy {
                m,
                n,
                k,
                kind: DiscrepancyKind::StatementVsRules,
                statement,
                rules,
            });
        }
    }
    out.extend(base);
    Ok(out)
}
