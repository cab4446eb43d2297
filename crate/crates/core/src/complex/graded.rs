use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::linalg::FinAbGroup;

/// Coefficient ring for (co)homology.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Coefficients {
    Integers,
    /// `Z/q`, `q ≥ 2`.
    ModQ(u32),
}

impl Coefficients {
    pub(crate) fn modulus(self) -> Option<BigInt> {
        match self {
            Coefficients::Integers => None,
            Coefficients::ModQ(q) => Some(BigInt::from(q)),
        }
    }
}

impl fmt::Display for Coefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficients::Integers => write!(f, "Z"),
            Coefficients::ModQ(q) => write!(f, "Z{q}"),
        }
    }
}

/// Degree-indexed family of groups. Only nontrivial groups are stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedGroup {
    groups: BTreeMap<usize, FinAbGroup>,
}

impl GradedGroup {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, degree: usize, group: FinAbGroup) {
        if group.is_trivial() {
            self.groups.remove(&degree);
        } else {
            self.groups.insert(degree, group);
        }
    }

    /// Group in `degree`, trivial when absent.
    pub fn get(&self, degree: usize) -> FinAbGroup {
        self.groups.get(&degree).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &FinAbGroup)> {
        self.groups.iter().map(|(&d, g)| (d, g))
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.groups.keys().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.groups.keys().next_back().copied()
    }

    /// Removes one free summand in degree 0 (reduced (co)homology of a
    /// connected complex). With field-like `Z/q` coefficients pass the
    /// coefficient group to remove instead.
    pub fn reduced(&self, unit: &FinAbGroup) -> GradedGroup {
        let mut out = self.clone();
        let g0 = self.get(0);
        let reduced0 = if *unit == FinAbGroup::free(1) {
            FinAbGroup::from_orders(g0.free_rank().saturating_sub(1), g0.torsion().iter().cloned())
        } else {
            let mut t = g0.torsion().to_vec();
            if let Some(pos) = t.iter().position(|d| Some(d) == unit.torsion().first()) {
                t.remove(pos);
            }
            FinAbGroup::from_orders(g0.free_rank(), t)
        };
        out.insert(0, reduced0);
        out
    }

    /// Shifts every degree up by `k`.
    pub fn shifted(&self, k: usize) -> GradedGroup {
        GradedGroup {
            groups: self.groups.iter().map(|(&d, g)| (d + k, g.clone())).collect(),
        }
    }
}

impl FromIterator<(usize, FinAbGroup)> for GradedGroup {
    fn from_iter<I: IntoIterator<Item = (usize, FinAbGroup)>>(iter: I) -> Self {
        let mut g = GradedGroup::new();
        for (d, grp) in iter {
            g.insert(d, grp);
        }
        g
    }
}

/// `{0:Z, 4:Z2, 5:Z}`
impl fmt::Display for GradedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (d, g)) in self.groups.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{d}:{g}")?;
        }
        write!(f, "}}")
    }
}
