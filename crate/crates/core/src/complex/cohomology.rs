//! Homology and cohomology, with explicit cocycle representatives for the
//! coefficient-reduction and Bockstein maps.
//!
//! Cochains are `C^j = Hom(C_j, Z) = Z^{rank j}` with coboundary
//! `δ^j = d_{j+1}ᵀ`. Everything is derived from the integral Smith forms of
//! the boundary matrices; groups with `Z/q` coefficients come from the
//! universal coefficient splitting, and their explicit presentations are
//! built as integer subquotients
//!
//! ```text
//! H^j(C; Z/q) = { x : δx ≡ 0 mod q } / (im δ^{j-1} + q·C^j)
//! ```
//!
//! so no arithmetic over `Z/q` is ever needed.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::{ChainComplex, ChainError, Coefficients, GradedGroup};
use crate::linalg::{
    cokernel_group, kernel_basis, kernel_from_snf, smith_normal_form, subquotient_presentation, FinAbGroup,
    IntegerMatrix, Lattice, SmithDecomposition, Subquotient,
};

fn check_coefficients(coeff: Coefficients) -> Result<(), ChainError> {
    match coeff {
        Coefficients::ModQ(q) if q < 2 => Err(ChainError::InvalidModulus(q)),
        _ => Ok(()),
    }
}

/// Homology `H_j = ker d_j / im d_{j+1}`.
pub fn homology(c: &ChainComplex, coeff: Coefficients) -> Result<GradedGroup, ChainError> {
    c.validate()?;
    check_coefficients(coeff)?;
    let top = c.top_degree();
    let snfs: Vec<SmithDecomposition> = (0..=top + 1).map(|j| smith_normal_form(&c.boundary(j))).collect();
    let integral: Vec<FinAbGroup> = (0..=top)
        .map(|j| {
            let free = c.rank(j) - snfs[j].rank() - snfs[j + 1].rank();
            FinAbGroup::from_orders(free, snfs[j + 1].invariant_factors.iter().cloned())
        })
        .collect();
    Ok(match coeff.modulus() {
        None => integral.into_iter().enumerate().collect(),
        Some(q) => (0..=top)
            .map(|j| {
                let tor = if j > 0 {
                    integral[j - 1].tor_zq(&q)
                } else {
                    FinAbGroup::zero()
                };
                (j, integral[j].tensor_zq(&q).direct_sum(&tor))
            })
            .collect(),
    })
}

/// Cohomology of the dual cochain complex.
pub fn cohomology(c: &ChainComplex, coeff: Coefficients) -> Result<GradedGroup, ChainError> {
    check_coefficients(coeff)?;
    let a = CochainAnalysis::new(c)?;
    let top = c.top_degree();
    let integral: Vec<FinAbGroup> = (0..=top + 1).map(|j| a.integral_group(j)).collect();
    Ok(match coeff.modulus() {
        None => integral.into_iter().enumerate().collect(),
        Some(q) => (0..=top)
            .map(|j| (j, integral[j].tensor_zq(&q).direct_sum(&integral[j + 1].tor_zq(&q))))
            .collect(),
    })
}

/// Smith forms of every coboundary of a validated complex, reused across
/// the presentations of one complex.
#[derive(Clone, Debug)]
pub struct CochainAnalysis {
    complex: ChainComplex,
    // coboundaries[j] = δ^j, snf[j] = its Smith form, for j in 0..=top
    coboundaries: Vec<IntegerMatrix>,
    snf: Vec<SmithDecomposition>,
}

impl CochainAnalysis {
    pub fn new(c: &ChainComplex) -> Result<Self, ChainError> {
        c.validate()?;
        let top = c.top_degree();
        let coboundaries: Vec<IntegerMatrix> = (0..=top).map(|j| c.boundary(j + 1).transpose()).collect();
        let snf = coboundaries.iter().map(smith_normal_form).collect();
        Ok(CochainAnalysis {
            complex: c.clone(),
            coboundaries,
            snf,
        })
    }

    pub fn complex(&self) -> &ChainComplex {
        &self.complex
    }

    /// `δ^j : C^j → C^{j+1}`.
    pub fn coboundary(&self, j: usize) -> IntegerMatrix {
        self.coboundaries
            .get(j)
            .cloned()
            .unwrap_or_else(|| IntegerMatrix::zeros(self.complex.rank(j + 1), self.complex.rank(j)))
    }

    fn coboundary_snf(&self, j: usize) -> SmithDecomposition {
        match self.snf.get(j) {
            Some(s) => s.clone(),
            None => smith_normal_form(&self.coboundary(j)),
        }
    }

    fn coboundary_rank(&self, j: usize) -> usize {
        self.snf.get(j).map_or(0, SmithDecomposition::rank)
    }

    /// `H^j(C; Z)` as a group, from ranks and invariant factors only.
    pub fn integral_group(&self, j: usize) -> FinAbGroup {
        let r = self.complex.rank(j);
        let below = if j == 0 { 0 } else { self.coboundary_rank(j - 1) };
        let free = r - self.coboundary_rank(j) - below;
        let torsion = if j == 0 {
            Vec::new()
        } else {
            self.snf
                .get(j - 1)
                .map(|s| s.invariant_factors.clone())
                .unwrap_or_default()
        };
        FinAbGroup::from_orders(free, torsion)
    }

    fn lower_coboundary(&self, j: usize) -> IntegerMatrix {
        if j == 0 {
            IntegerMatrix::zeros(self.complex.rank(0), 0)
        } else {
            self.coboundary(j - 1)
        }
    }

    /// `H^j(C; Z)` with explicit integral cocycle representatives.
    pub fn integral_presentation(&self, j: usize) -> Result<Subquotient, ChainError> {
        let r = self.complex.rank(j);
        let cycles = match self.snf.get(j) {
            Some(s) => kernel_from_snf(r, s),
            None => kernel_basis(&self.coboundary(j)),
        };
        Ok(subquotient_presentation(&cycles, &self.lower_coboundary(j))?)
    }

    /// `H^j(C; Z/q)` with integer lifts of mod-`q` cocycles as representatives.
    pub fn mod_q_presentation(&self, j: usize, q: u32) -> Result<Subquotient, ChainError> {
        check_coefficients(Coefficients::ModQ(q))?;
        let q = BigInt::from(q);
        let r = self.complex.rank(j);
        let snf = self.coboundary_snf(j);
        // δx ≡ 0 (mod q)  ⇔  sᵢ·(V⁻¹x)ᵢ ≡ 0 (mod q) for every i.
        let scale: Vec<BigInt> = (0..r)
            .map(|i| {
                let s = snf.diag(i);
                if s.is_zero() {
                    BigInt::from(1)
                } else {
                    &q / s.gcd(&q)
                }
            })
            .collect();
        let mut cycles = snf.v.clone();
        for (col, f) in scale.iter().enumerate() {
            for row in 0..r {
                cycles[(row, col)] *= f;
            }
        }
        let boundaries = self.lower_coboundary(j).hstack(&IntegerMatrix::identity(r).scale(&q));
        Ok(subquotient_presentation(&cycles, &boundaries)?)
    }

    /// `ρ_q : H^j(Z) → H^j(Z/q)` without rebuilding the analysis.
    pub fn reduction(&self, j: usize, q: u32) -> Result<PresentedMap, ChainError> {
        reduction_from(&self.integral_presentation(j)?, &self.mod_q_presentation(j, q)?)
    }
}

/// A homomorphism between two presented groups, written in their canonical
/// generators (torsion first, then free).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentedMap {
    pub source: FinAbGroup,
    pub target: FinAbGroup,
    /// `target.num_generators() x source.num_generators()`
    pub matrix: IntegerMatrix,
    pub injective: bool,
    pub surjective: bool,
}

impl PresentedMap {
    /// Wraps a matrix and computes the injectivity and surjectivity flags.
    /// The matrix must describe a well-defined homomorphism.
    pub fn new(source: FinAbGroup, target: FinAbGroup, mut matrix: IntegerMatrix) -> Self {
        assert_eq!(matrix.rows(), target.num_generators(), "target generator count");
        assert_eq!(matrix.cols(), source.num_generators(), "source generator count");
        for (i, d) in target.torsion().iter().enumerate() {
            for j in 0..matrix.cols() {
                matrix[(i, j)] = matrix[(i, j)].mod_floor(d);
            }
        }
        let mut map = PresentedMap {
            source,
            target,
            matrix,
            injective: false,
            surjective: false,
        };
        map.surjective = cokernel_group(&map.matrix.hstack(&map.target.relation_matrix())).is_trivial();
        map.injective = Lattice::from_generators(map.source.relation_matrix()).contains_lattice(&map.kernel_lattice());
        map
    }

    /// Preimage in `Z^source` of zero: `{x : Mx ∈ relations(target)}`.
    pub fn kernel_lattice(&self) -> Lattice {
        let a = self.source.num_generators();
        let stacked = self.matrix.hstack(&self.target.relation_matrix());
        let k = kernel_basis(&stacked);
        let rows: Vec<usize> = (0..a).collect();
        Lattice::from_generators(k.select_rows(&rows).hstack(&self.source.relation_matrix()))
    }

    /// Image plus target relations, as a lattice in `Z^target`.
    pub fn image_lattice(&self) -> Lattice {
        Lattice::from_generators(self.matrix.hstack(&self.target.relation_matrix()))
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.injective && self.surjective
    }

    /// Whether `self` followed by `next` is exact at the middle group.
    pub fn exact_with(&self, next: &PresentedMap) -> bool {
        assert_eq!(self.target, next.source, "maps are not composable");
        self.image_lattice().same_as(&next.kernel_lattice())
    }
}

fn induced_map(
    source: &Subquotient,
    target: &Subquotient,
    mut image_of: impl FnMut(Vec<BigInt>) -> Result<Vec<BigInt>, ChainError>,
) -> Result<PresentedMap, ChainError> {
    let n = source.group().num_generators();
    let mut cols = Vec::with_capacity(n);
    for i in 0..n {
        let v = image_of(source.generator(i))?;
        cols.push(target.coordinates(&v)?);
    }
    let matrix = IntegerMatrix::from_columns(target.group().num_generators(), &cols);
    Ok(PresentedMap::new(
        source.group().clone(),
        target.group().clone(),
        matrix,
    ))
}

/// Multiplication by `n` on a presented group.
pub fn multiplication_map(group: &FinAbGroup, n: i64) -> PresentedMap {
    let g = group.num_generators();
    PresentedMap::new(
        group.clone(),
        group.clone(),
        IntegerMatrix::identity(g).scale(&BigInt::from(n)),
    )
}

/// `ρ_q : H^j(C; Z) → H^j(C; Z/q)`, induced by `Z → Z/q`.
pub fn coefficient_reduction(c: &ChainComplex, j: usize, q: u32) -> Result<PresentedMap, ChainError> {
    let a = CochainAnalysis::new(c)?;
    reduction_from(&a.integral_presentation(j)?, &a.mod_q_presentation(j, q)?)
}

fn reduction_from(integral: &Subquotient, modq: &Subquotient) -> Result<PresentedMap, ChainError> {
    induced_map(integral, modq, Ok)
}

/// Connecting map `β : H^j(C; Z/q) → H^{j+1}(C; Z)` of `0 → Z →q Z → Z/q → 0`.
pub fn bockstein(c: &ChainComplex, j: usize, q: u32) -> Result<PresentedMap, ChainError> {
    let a = CochainAnalysis::new(c)?;
    bockstein_from(&a, j, q, &a.mod_q_presentation(j, q)?, &a.integral_presentation(j + 1)?)
}

/// Integral Bockstein for `Z → Z → Z/2`.
pub fn bockstein_integral(c: &ChainComplex, j: usize) -> Result<PresentedMap, ChainError> {
    bockstein(c, j, 2)
}

fn bockstein_from(
    a: &CochainAnalysis,
    j: usize,
    q: u32,
    modq: &Subquotient,
    next: &Subquotient,
) -> Result<PresentedMap, ChainError> {
    let delta = a.coboundary(j);
    let q = BigInt::from(q);
    induced_map(modq, next, |x| {
        delta
            .mul_vec(&x)
            .into_iter()
            .map(|y| {
                let (d, r) = y.div_rem(&q);
                if r.is_zero() {
                    Ok(d)
                } else {
                    Err(ChainError::LiftFailure(j))
                }
            })
            .collect()
    })
    .map_err(|e| match e {
        ChainError::Linalg(_) => ChainError::LiftFailure(j),
        e => e,
    })
}

/// Exactness of `H^j(Z) →q H^j(Z) →ρ H^j(Z/q) →β H^{j+1}(Z) →q H^{j+1}(Z)`
/// at its three interior nodes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BocksteinExactness {
    pub degree: usize,
    pub modulus: u32,
    /// im(×q) = ker ρ in `H^j(Z)`
    pub at_integral: bool,
    /// im ρ = ker β in `H^j(Z/q)`
    pub at_reduction: bool,
    /// im β = ker(×q) in `H^{j+1}(Z)`
    pub at_next: bool,
}

impl BocksteinExactness {
    pub fn holds(&self) -> bool {
        self.at_integral && self.at_reduction && self.at_next
    }
}

pub fn bockstein_exactness(a: &CochainAnalysis, j: usize, q: u32) -> Result<BocksteinExactness, ChainError> {
    let hj = a.integral_presentation(j)?;
    let hj_q = a.mod_q_presentation(j, q)?;
    let hnext = a.integral_presentation(j + 1)?;
    let times_q = multiplication_map(hj.group(), q as i64);
    let rho = reduction_from(&hj, &hj_q)?;
    let beta = bockstein_from(a, j, q, &hj_q, &hnext)?;
    let times_q_next = multiplication_map(hnext.group(), q as i64);
    Ok(BocksteinExactness {
        degree: j,
        modulus: q,
        at_integral: times_q.exact_with(&rho),
        at_reduction: rho.exact_with(&beta),
        at_next: beta.exact_with(&times_q_next),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::Coefficients::{Integers, ModQ};

    fn m(x: i64) -> IntegerMatrix {
        IntegerMatrix::from_rows(&[[x]])
    }

    fn z() -> FinAbGroup {
        FinAbGroup::free(1)
    }

    fn z2() -> FinAbGroup {
        FinAbGroup::cyclic(2)
    }

    fn graded(items: &[(usize, FinAbGroup)]) -> GradedGroup {
        items.iter().cloned().collect()
    }

    // cells 0, n+1..=m with d_j = 1 + (-1)^j, written out by hand
    fn x52() -> ChainComplex {
        ChainComplex::from_parts([(0, 1), (3, 1), (4, 1), (5, 1)], [(4, m(2)), (5, m(0))])
    }

    fn rp(m_: usize) -> ChainComplex {
        let ranks: Vec<(usize, usize)> = (0..=m_).map(|j| (j, 1)).collect();
        let bnd: Vec<(usize, IntegerMatrix)> = (2..=m_).map(|j| (j, m(if j % 2 == 0 { 2 } else { 0 }))).collect();
        ChainComplex::from_parts(ranks, bnd)
    }

    #[test]
    fn sphere_groups() {
        let s4 = ChainComplex::sphere(4);
        assert_eq!(homology(&s4, Integers).unwrap(), graded(&[(0, z()), (4, z())]));
        assert_eq!(cohomology(&s4, ModQ(2)).unwrap(), graded(&[(0, z2()), (4, z2())]));
    }

    #[test]
    fn x52_groups() {
        let c = x52();
        assert_eq!(
            homology(&c, Integers).unwrap(),
            graded(&[(0, z()), (3, z2()), (5, z())])
        );
        assert_eq!(
            homology(&c, ModQ(2)).unwrap(),
            graded(&[(0, z2()), (3, z2()), (4, z2()), (5, z2())])
        );
        assert_eq!(
            cohomology(&c, Integers).unwrap(),
            graded(&[(0, z()), (4, z2()), (5, z())])
        );
    }

    #[test]
    fn x52_degree_four_presentation() {
        let a = CochainAnalysis::new(&x52()).unwrap();
        let p = a.integral_presentation(4).unwrap();
        assert_eq!(p.group(), &z2());
    }

    #[test]
    fn invalid_modulus_rejected() {
        assert_eq!(homology(&x52(), ModQ(1)), Err(ChainError::InvalidModulus(1)));
    }

    #[test]
    fn reduction_of_free_generator() {
        let r = coefficient_reduction(&ChainComplex::sphere(4), 4, 2).unwrap();
        assert_eq!((r.source.clone(), r.target.clone()), (z(), z2()));
        assert!(r.surjective);
        assert!(!r.injective);
    }

    #[test]
    fn reduction_on_suspended_projective_planes() {
        for m_ in [3, 5] {
            let c = rp(m_).suspend(2).unwrap();
            let r = coefficient_reduction(&c, 4, 2).unwrap();
            assert_eq!((r.source.clone(), r.target.clone()), (z2(), z2()));
            assert!(r.injective, "m = {m_}");
        }
    }

    #[test]
    fn bockstein_isomorphism_in_suspended_rp3() {
        let c = rp(3).suspend(2).unwrap();
        let b = bockstein_integral(&c, 3).unwrap();
        assert_eq!((b.source.clone(), b.target.clone()), (z2(), z2()));
        assert!(b.is_isomorphism());
        let b = bockstein_integral(&x52(), 3).unwrap();
        assert!(b.is_isomorphism());
    }

    #[test]
    fn bockstein_from_trivial_group() {
        let b = bockstein_integral(&ChainComplex::sphere(4), 3).unwrap();
        assert!(b.source.is_trivial());
        assert!(b.is_zero());
        assert!(b.injective);
    }

    #[test]
    fn mod_four_presentation_matches_uct() {
        let c = rp(6).suspend(1).unwrap();
        let a = CochainAnalysis::new(&c).unwrap();
        let uct = cohomology(&c, ModQ(4)).unwrap();
        for j in 0..=c.top_degree() {
            assert_eq!(&uct.get(j), a.mod_q_presentation(j, 4).unwrap().group(), "degree {j}");
        }
    }

    #[test]
    fn exactness_on_projective_space() {
        let a = CochainAnalysis::new(&rp(7)).unwrap();
        for j in 0..=8 {
            for q in [2, 4] {
                assert!(bockstein_exactness(&a, j, q).unwrap().holds(), "j={j} q={q}");
            }
        }
    }

    #[test]
    fn presented_map_flags() {
        // Z → Z2 ⊕ Z, 1 ↦ (1, 2): injective, not surjective
        let src = z();
        let tgt = FinAbGroup::from_orders(1, [BigInt::from(2)]);
        let f = PresentedMap::new(src, tgt, IntegerMatrix::from_rows(&[[1], [2]]));
        assert!(f.injective && !f.surjective);
        // Z4 → Z2 reduction: surjective, not injective
        let g = PresentedMap::new(FinAbGroup::cyclic(4), z2(), m(1));
        assert!(g.surjective && !g.injective);
        // Z2 → Z4, 1 ↦ 2: injective
        let h = PresentedMap::new(z2(), FinAbGroup::cyclic(4), m(2));
        assert!(h.injective && !h.surjective);
        assert!(h.exact_with(&g));
    }
}
