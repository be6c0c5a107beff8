//! Seeded generators for exact test data.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::rational::{frac, int};
use crate::linalg::{Rational, RationalMatrix};
use crate::roots::Partition;

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Numerator in `[-bound, bound]`, denominator in `1..=3`.
pub fn small_rational<R: Rng>(rng: &mut R, bound: i64) -> Rational {
    frac(rng.gen_range(-bound..=bound), rng.gen_range(1..=3))
}

pub fn small_int<R: Rng>(rng: &mut R, bound: i64) -> Rational {
    int(rng.gen_range(-bound..=bound))
}

pub fn random_matrix<R: Rng>(rng: &mut R, n: usize, bound: i64) -> RationalMatrix {
    let data = (0..n * n).map(|_| small_rational(rng, bound)).collect();
    RationalMatrix::new(n, n, data).expect("square")
}

pub fn random_traceless<R: Rng>(rng: &mut R, n: usize, bound: i64) -> RationalMatrix {
    let mut m = random_matrix(rng, n, bound);
    let t = m.trace() / int(n as i64);
    for i in 0..n {
        m[(i, i)] -= &t;
    }
    m
}

/// `L U` with unit diagonals and small integer entries; determinant 1, so
/// the inverse is integral too.
pub fn random_invertible<R: Rng>(rng: &mut R, n: usize) -> RationalMatrix {
    let mut l = RationalMatrix::identity(n);
    let mut u = RationalMatrix::identity(n);
    for i in 0..n {
        for j in 0..i {
            l[(i, j)] = small_int(rng, 2);
            u[(j, i)] = small_int(rng, 2);
        }
    }
    let p = random_permutation_matrix(rng, n);
    &(&p * &l) * &u
}

pub fn random_permutation_matrix<R: Rng>(rng: &mut R, n: usize) -> RationalMatrix {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut p = RationalMatrix::zeros(n, n);
    for (i, &j) in perm.iter().enumerate() {
        p[(i, j)] = int(1);
    }
    p
}

pub fn random_partition<R: Rng>(rng: &mut R, n: usize) -> Partition {
    Partition::all(n).choose(rng).expect("n >= 1").clone()
}

/// `P J P^{-1}`: Jordan blocks of a random partition, each on a small
/// integer eigenvalue (distinct eigenvalues are not enforced).
pub fn random_rational_spectrum<R: Rng>(rng: &mut R, n: usize) -> RationalMatrix {
    let lambda = random_partition(rng, n);
    let mut j = lambda.nilpotent_representative();
    let mut i = 0;
    for &part in lambda.parts() {
        let c = small_int(rng, 2);
        for k in i..i + part {
            j[(k, k)] = c.clone();
        }
        i += part;
    }
    conjugate_random(rng, &j)
}

pub fn conjugate_random<R: Rng>(rng: &mut R, m: &RationalMatrix) -> RationalMatrix {
    let p = random_invertible(rng, m.rows());
    let p_inv = p.inverse().expect("invertible");
    &(&p * m) * &p_inv
}

/// A conjugated companion matrix: always regular.
pub fn random_regular<R: Rng>(rng: &mut R, n: usize) -> RationalMatrix {
    let coeffs: Vec<Rational> = (0..n).map(|_| small_int(rng, 3)).collect();
    let mut c = RationalMatrix::zeros(n, n);
    for i in 1..n {
        c[(i, i - 1)] = int(1);
    }
    for (i, a) in coeffs.into_iter().enumerate() {
        c[(i, n - 1)] = a;
    }
    conjugate_random(rng, &c)
}

/// Distinct small rationals.
pub fn distinct_rationals<R: Rng>(rng: &mut R, n: usize) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::with_capacity(n);
    while out.len() < n {
        let r = small_rational(rng, 6);
        if !out.contains(&r) {
            out.push(r);
        }
    }
    out
}
