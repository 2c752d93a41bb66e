//! Deterministic inputs shared by the benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stillman_core::exactmath::{DegreeVector, IntMatrix};

/// A `rows x cols` integer matrix with entries in `-range..=range`.
pub fn random_int_matrix(seed: u64, rows: usize, cols: usize, range: i64) -> IntMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows: Vec<Vec<i64>> = (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(-range..=range)).collect())
        .collect();
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    IntMatrix::from_i64(&refs).expect("rectangular")
}

/// `count` nonzero integer vectors in `Z^dim` with entries in `-range..=range`.
pub fn random_generators(seed: u64, count: usize, dim: usize, range: i64) -> Vec<DegreeVector> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let v: Vec<i64> = (0..dim).map(|_| rng.gen_range(-range..=range)).collect();
        if v.iter().any(|&x| x != 0) {
            out.push(DegreeVector::from_ints(&v));
        }
    }
    out
}
