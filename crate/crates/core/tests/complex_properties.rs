use num_bigint::BigInt;
use proptest::prelude::*;
use ptriv_core::complex::{bockstein_exactness, coefficient_reduction, cohomology, homology, CochainAnalysis};
use ptriv_core::{ChainComplex, Coefficients, FinAbGroup, GradedGroup, SpaceSpec};

fn corpus_specs() -> Vec<SpaceSpec> {
    let mut specs = Vec::new();
    for m in 1..=8 {
        for n in 0..m {
            for k in 0..=2 {
                specs.push(SpaceSpec::real(m, n, k));
            }
        }
    }
    for m in 1..=4 {
        for n in 0..m {
            specs.push(SpaceSpec::complex(m, n, n % 2));
        }
    }
    specs.extend((1..=6).map(SpaceSpec::sphere));
    for a in 1..=4 {
        for b in 1..=4 {
            specs.push(SpaceSpec::SphereProduct { n: a, k: b });
        }
    }
    for g in 1..=3 {
        for k in 0..=2 {
            specs.push(SpaceSpec::SurfaceSuspension { genus: g, k });
        }
    }
    for text in [
        "W[S(2),X(4,0)]",
        "W[X(3,0),Y(2,0)^1,S(5)]",
        "Susp[SxS(2,3)]^2",
        "Susp[X(5,1)]^1",
    ] {
        specs.push(SpaceSpec::parse(text).unwrap());
    }
    specs
}

fn corpus() -> Vec<(SpaceSpec, ChainComplex)> {
    corpus_specs()
        .into_iter()
        .map(|s| {
            let c = s.build_complex().unwrap();
            (s, c)
        })
        .collect()
}

const COEFFS: [Coefficients; 3] = [Coefficients::Integers, Coefficients::ModQ(2), Coefficients::ModQ(4)];

fn unit(coeff: Coefficients) -> FinAbGroup {
    match coeff {
        Coefficients::Integers => FinAbGroup::free(1),
        Coefficients::ModQ(q) => FinAbGroup::cyclic(q),
    }
}

#[test]
fn every_generated_complex_is_valid() {
    for (s, c) in corpus() {
        assert_eq!(c.validate(), Ok(()), "{s}");
    }
}

#[test]
fn universal_coefficients() {
    for (s, c) in corpus() {
        let h = homology(&c, Coefficients::Integers).unwrap();
        let hc = cohomology(&c, Coefficients::Integers).unwrap();
        for j in 0..=c.top_degree() {
            let ext = if j > 0 {
                h.get(j - 1).ext_z()
            } else {
                FinAbGroup::zero()
            };
            assert_eq!(hc.get(j), h.get(j).hom_z().direct_sum(&ext), "{s} degree {j}");
        }
        for q in [2u32, 4] {
            let qq = BigInt::from(q);
            let hq = cohomology(&c, Coefficients::ModQ(q)).unwrap();
            let a = CochainAnalysis::new(&c).unwrap();
            for j in 0..=c.top_degree() {
                // Hom(H_j, Z/q) = H_j (x) Z/q and Ext(H_{j-1}, Z/q) = Tor(H_{j-1}, Z/q)
                let lower = if j > 0 {
                    h.get(j - 1).tor_zq(&qq)
                } else {
                    FinAbGroup::zero()
                };
                let want = h.get(j).tensor_zq(&qq).direct_sum(&lower);
                assert_eq!(hq.get(j), want, "{s} H^{j}(Z{q})");
                assert_eq!(
                    a.mod_q_presentation(j, q).unwrap().group(),
                    &want,
                    "{s} presented H^{j}(Z{q})"
                );
            }
        }
    }
}

#[test]
fn suspension_isomorphism() {
    for (s, c) in corpus() {
        for coeff in COEFFS {
            let u = unit(coeff);
            let h = homology(&c, coeff).unwrap().reduced(&u);
            let hc = cohomology(&c, coeff).unwrap().reduced(&u);
            for k in 1..=6 {
                let sc = c.suspend(k).unwrap();
                assert_eq!(
                    homology(&sc, coeff).unwrap().reduced(&u),
                    h.shifted(k),
                    "{s} k={k} {coeff}"
                );
                assert_eq!(
                    cohomology(&sc, coeff).unwrap().reduced(&u),
                    hc.shifted(k),
                    "{s} k={k} {coeff}"
                );
            }
        }
    }
}

#[test]
fn reduction_flags_are_natural_under_suspension() {
    for (s, c) in corpus() {
        for j in 1..=c.top_degree() {
            let r = coefficient_reduction(&c, j, 2).unwrap();
            for k in [1, 2, 5] {
                let rs = coefficient_reduction(&c.suspend(k).unwrap(), j + k, 2).unwrap();
                assert_eq!(
                    (rs.injective, rs.surjective),
                    (r.injective, r.surjective),
                    "{s} j={j} k={k}"
                );
                assert_eq!((&rs.source, &rs.target), (&r.source, &r.target), "{s} j={j} k={k}");
            }
        }
    }
}

#[test]
fn bockstein_sequences_are_exact() {
    for (s, c) in corpus() {
        let a = CochainAnalysis::new(&c).unwrap();
        for q in [2, 4] {
            for j in 0..=c.top_degree() {
                let e = bockstein_exactness(&a, j, q).unwrap();
                assert!(e.holds(), "{s} j={j} q={q}: {e:?}");
            }
        }
    }
}

#[test]
fn kunneth_for_spheres() {
    for a in 1..=5usize {
        for b in 1..=5usize {
            let t = ChainComplex::sphere(a).tensor(&ChainComplex::sphere(b)).unwrap();
            let mut want = GradedGroup::new();
            for d in [0, a, b, a + b] {
                want.insert(d, want.get(d).direct_sum(&FinAbGroup::free(1)));
            }
            assert_eq!(homology(&t, Coefficients::Integers).unwrap(), want, "S^{a} x S^{b}");
        }
    }
}

#[test]
fn tensor_with_torsion() {
    // RP^2 x RP^2: H_1 = Z2+Z2, H_2 = Z2, H_3 = Z2
    let rp2 = SpaceSpec::real(2, 0, 0).build_complex().unwrap();
    let h = homology(&rp2.tensor(&rp2).unwrap(), Coefficients::Integers).unwrap();
    assert_eq!(h.to_string(), "{0:Z, 1:Z2^2, 2:Z2, 3:Z2}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn tensor_euler_characteristic(i in 0usize..80, j in 0usize..80) {
        let specs = corpus_specs();
        let a = specs[i % specs.len()].build_complex().unwrap();
        let b = specs[j % specs.len()].build_complex().unwrap();
        let t = a.tensor(&b).unwrap();
        prop_assert_eq!(t.validate(), Ok(()));
        prop_assert_eq!(t.euler_characteristic(), a.euler_characteristic() * b.euler_characteristic());
    }
}
