//! Workloads shared by the benchmarks.

use num_bigint::BigInt;
use ptriv_core::classifier::GridBounds;
use ptriv_core::{IntegerMatrix, SpaceSpec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Square matrices with entries in `-bound..=bound`, fixed by `seed`.
pub fn random_matrices(seed: u64, count: usize, n: usize, bound: i64) -> Vec<IntegerMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let entries = (0..n * n)
                .map(|_| BigInt::from(rng.gen_range(-bound..=bound)))
                .collect();
            IntegerMatrix::from_entries(n, n, entries)
        })
        .collect()
}

/// `X(m,n)^k` and `Y(m,n)^k` over the grid, real first.
pub fn stunted_grid(bounds: GridBounds) -> Vec<SpaceSpec> {
    let real = bounds.triples().map(|(m, n, k)| SpaceSpec::real(m, n, k));
    let complex = bounds.triples().map(|(m, n, k)| SpaceSpec::complex(m, n, k));
    real.chain(complex).collect()
}
