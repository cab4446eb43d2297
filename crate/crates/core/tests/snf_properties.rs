use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use ptriv_core::linalg::{cokernel_group, smith_normal_form, IntegerMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize, bound: i64) -> IntegerMatrix {
    let entries = (0..rows * cols)
        .map(|_| BigInt::from(rng.gen_range(-bound..=bound)))
        .collect();
    IntegerMatrix::from_entries(rows, cols, entries)
}

/// Fraction-free elimination, written independently of the library.
fn oracle_det(a: &IntegerMatrix) -> BigInt {
    let n = a.rows();
    let mut m: Vec<Vec<BigInt>> = (0..n).map(|i| a.row(i).to_vec()).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            m.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    if n == 0 {
        return BigInt::one();
    }
    sign * &m[n - 1][n - 1]
}

fn check_decomposition(a: &IntegerMatrix) -> Result<(), String> {
    let d = smith_normal_form(a);
    if &(&d.u * a) * &d.v != d.s {
        return Err(format!("U A V != S for {a}"));
    }
    for (name, m) in [("U", &d.u), ("V", &d.v)] {
        if oracle_det(m).abs() != BigInt::one() {
            return Err(format!("det {name} is not a unit for {a}"));
        }
    }
    if &d.u * &d.u_inv != IntegerMatrix::identity(a.rows()) || &d.v * &d.v_inv != IntegerMatrix::identity(a.cols()) {
        return Err(format!("stored inverses are wrong for {a}"));
    }
    let mut nonzero = Vec::new();
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let x = &d.s[(i, j)];
            if i != j && !x.is_zero() {
                return Err(format!("S has an off-diagonal entry for {a}"));
            }
            if i == j && !x.is_zero() {
                if x.is_negative() || nonzero.len() != i {
                    return Err(format!("S diagonal not positive-then-zero for {a}"));
                }
                nonzero.push(x.clone());
            }
        }
    }
    if nonzero.windows(2).any(|w| !w[1].is_multiple_of(&w[0])) {
        return Err(format!("divisibility chain fails for {a}"));
    }
    if nonzero != d.invariant_factors {
        return Err(format!("invariant factors differ from the diagonal for {a}"));
    }
    Ok(())
}

#[test]
fn thousand_random_decompositions() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..1000 {
        let (r, c) = (rng.gen_range(0..=30), rng.gen_range(0..=30));
        let a = random_matrix(&mut rng, r, c, 50);
        check_decomposition(&a).unwrap();
    }
}

#[test]
fn invariant_factor_product_is_abs_det() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xde7);
    let mut done = 0;
    while done < 200 {
        let n = rng.gen_range(1..=12);
        let a = random_matrix(&mut rng, n, n, 50);
        let det = oracle_det(&a);
        if det.is_zero() {
            continue;
        }
        let product: BigInt = smith_normal_form(&a).invariant_factors.iter().product();
        assert_eq!(product, det.abs(), "{a}");
        assert_eq!(a.determinant(), det, "{a}");
        done += 1;
    }
}

#[test]
fn oracle_det_on_known_matrices() {
    assert_eq!(
        oracle_det(&IntegerMatrix::from_rows(&[[2, 4], [6, 8]])),
        BigInt::from(-8)
    );
    assert_eq!(
        oracle_det(&IntegerMatrix::from_rows(&[[0, 1], [1, 0]])),
        BigInt::from(-1)
    );
    assert_eq!(
        oracle_det(&IntegerMatrix::from_rows(&[[2, 0, 0], [0, 3, 0], [1, 1, 5]])),
        BigInt::from(30)
    );
}

#[test]
fn degenerate_shapes() {
    for (r, c) in [(0, 0), (0, 4), (3, 0), (1, 1)] {
        let a = IntegerMatrix::zeros(r, c);
        check_decomposition(&a).unwrap();
        assert!(smith_normal_form(&a).invariant_factors.is_empty());
    }
}

fn matrix_strategy(max_dim: usize, bound: i64) -> impl Strategy<Value = IntegerMatrix> {
    (0..=max_dim, 0..=max_dim).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(-bound..=bound, r * c)
            .prop_map(move |v| IntegerMatrix::from_entries(r, c, v.into_iter().map(BigInt::from).collect()))
    })
}

/// Product of random elementary operations.
fn unimodular_strategy(n: usize) -> impl Strategy<Value = IntegerMatrix> {
    proptest::collection::vec((0..n.max(1), 0..n.max(1), -3i64..=3, any::<bool>()), 0..12).prop_map(move |ops| {
        let mut m = IntegerMatrix::identity(n);
        for (i, j, c, neg) in ops {
            if n == 0 {
                break;
            }
            let mut e = IntegerMatrix::identity(n);
            if i != j {
                e[(i, j)] = BigInt::from(c);
            } else if neg {
                e[(i, i)] = BigInt::from(-1);
            }
            m = &m * &e;
        }
        m
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn decomposition_invariants(a in matrix_strategy(8, 20)) {
        prop_assert_eq!(check_decomposition(&a), Ok(()));
    }

    #[test]
    fn transpose_has_same_invariant_factors(a in matrix_strategy(8, 20)) {
        prop_assert_eq!(
            smith_normal_form(&a.transpose()).invariant_factors,
            smith_normal_form(&a).invariant_factors
        );
    }

    #[test]
    fn cokernel_invariant_under_unimodular_change(
        (a, p, q) in (0usize..=6, 0usize..=6).prop_flat_map(|(r, c)| (
            proptest::collection::vec(-20i64..=20, r * c)
                .prop_map(move |v| IntegerMatrix::from_entries(r, c, v.into_iter().map(BigInt::from).collect())),
            unimodular_strategy(r),
            unimodular_strategy(c),
        ))
    ) {
        let changed = &(&p * &a) * &q;
        prop_assert_eq!(cokernel_group(&changed), cokernel_group(&a));
    }
}
