use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{smith_normal_form, IntegerMatrix};

/// A finitely generated abelian group `Z^r ⊕ Z/d₁ ⊕ … ⊕ Z/d_t` in invariant
/// factor form: every `dᵢ ≥ 2` and `dᵢ | dᵢ₊₁`.
///
/// Whenever a group is paired with explicit coordinates (presentations,
/// induced maps) its generators are ordered torsion first, in the order of
/// `torsion`, followed by the free generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FinAbGroup {
    free_rank: usize,
    torsion: Vec<BigInt>,
}

impl FinAbGroup {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        FinAbGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    /// `Z/n`; `n = 0` gives `Z`, `n = ±1` the trivial group.
    pub fn cyclic(n: impl Into<BigInt>) -> Self {
        Self::from_orders(0, [n.into()])
    }

    /// Canonical form of `Z^free ⊕ ⨁ Z/orders[i]`. Orders may be arbitrary:
    /// zero contributes a free summand and units are dropped.
    pub fn from_orders(free: usize, orders: impl IntoIterator<Item = BigInt>) -> Self {
        let mut free_rank = free;
        let mut finite = Vec::new();
        for o in orders {
            let o = o.abs();
            if o.is_zero() {
                free_rank += 1;
            } else if !o.is_one() {
                finite.push(o);
            }
        }
        let already_canonical = finite.windows(2).all(|w| w[1].is_multiple_of(&w[0]));
        let torsion = if already_canonical {
            finite
        } else {
            let n = finite.len();
            smith_normal_form(&IntegerMatrix::diagonal(n, n, &finite))
                .invariant_factors
                .into_iter()
                .filter(|d| !d.is_one())
                .collect()
        };
        FinAbGroup { free_rank, torsion }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Number of generators in the canonical presentation.
    pub fn num_generators(&self) -> usize {
        self.torsion.len() + self.free_rank
    }

    /// Relation orders of the canonical generators (torsion orders, then one
    /// zero per free generator).
    pub fn relation_orders(&self) -> Vec<BigInt> {
        self.torsion
            .iter()
            .cloned()
            .chain(std::iter::repeat_n(BigInt::zero(), self.free_rank))
            .collect()
    }

    /// Diagonal relation matrix: the group is `Z^g / columns`.
    pub fn relation_matrix(&self) -> IntegerMatrix {
        let g = self.num_generators();
        IntegerMatrix::diagonal(g, self.torsion.len(), &self.torsion)
    }

    /// Reduces a coordinate vector into canonical representatives.
    pub fn normalize(&self, coords: &mut [BigInt]) {
        for (c, d) in coords.iter_mut().zip(&self.torsion) {
            *c = c.mod_floor(d);
        }
    }

    pub fn direct_sum(&self, other: &FinAbGroup) -> FinAbGroup {
        Self::from_orders(
            self.free_rank + other.free_rank,
            self.torsion.iter().chain(&other.torsion).cloned(),
        )
    }

    /// `G ⊗ Z/q`
    pub fn tensor_zq(&self, q: &BigInt) -> FinAbGroup {
        let orders = self
            .torsion
            .iter()
            .map(|d| d.gcd(q))
            .chain(std::iter::repeat_n(q.clone(), self.free_rank));
        Self::from_orders(0, orders)
    }

    /// `Tor(G, Z/q)`
    pub fn tor_zq(&self, q: &BigInt) -> FinAbGroup {
        Self::from_orders(0, self.torsion.iter().map(|d| d.gcd(q)))
    }

    /// `Hom(G, Z)`
    pub fn hom_z(&self) -> FinAbGroup {
        Self::free(self.free_rank)
    }

    /// `Ext(G, Z)`
    pub fn ext_z(&self) -> FinAbGroup {
        Self::from_orders(0, self.torsion.iter().cloned())
    }

    /// Order of the group, `None` if infinite.
    pub fn order(&self) -> Option<BigInt> {
        (self.free_rank == 0).then(|| self.torsion.iter().product())
    }
}

/// Renders as `Z^r+Z2^t+Z4`, with `0` for the trivial group.
impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        let mut i = 0;
        while i < self.torsion.len() {
            let d = &self.torsion[i];
            let run = self.torsion[i..].iter().take_while(|x| *x == d).count();
            if run == 1 {
                parts.push(format!("Z{d}"));
            } else {
                parts.push(format!("Z{d}^{run}"));
            }
            i += run;
        }
        write!(f, "{}", parts.join("+"))
    }
}
