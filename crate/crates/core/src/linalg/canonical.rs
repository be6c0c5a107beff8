//! Characteristic/minimal polynomials and the rational canonical form.

use num_traits::{One, Zero};

use super::matrix::RationalMatrix;
use super::poly::RationalPolynomial;
use super::rational::{self, Rational};
use crate::error::Result;

/// Characteristic polynomial `det(tI - m)` by Faddeev-LeVerrier.
pub fn char_poly(m: &RationalMatrix) -> Result<RationalPolynomial> {
    let n = m.ensure_square()?;
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let id = RationalMatrix::identity(n);
    let mut mk = RationalMatrix::zeros(n, n);
    for k in 1..=n {
        // M_k = m * M_{k-1} + c_{n-k+1} I ;  c_{n-k} = -tr(m M_k) / k
        mk = &(m * &mk) + &id.scale(&coeffs[n - k + 1]);
        let c = -(m * &mk).trace() / rational::int(k as i64);
        coeffs[n - k] = c;
    }
    Ok(RationalPolynomial::new(coeffs))
}

/// Minimal polynomial from the first linear dependency among the flattened
/// powers `I, m, m^2, ...`.
pub fn min_poly(m: &RationalMatrix) -> Result<RationalPolynomial> {
    let n = m.ensure_square()?;
    let mut powers = vec![RationalMatrix::identity(n).into_entries()];
    let mut current = RationalMatrix::identity(n);
    for k in 1..=n {
        current = &current * m;
        let a = RationalMatrix::from_columns(n * n, &powers);
        if let Some(c) = a.solve(current.entries()) {
            let mut coeffs: Vec<Rational> = c.into_iter().map(|v| -v).collect();
            coeffs.push(Rational::one());
            debug_assert_eq!(coeffs.len(), k + 1);
            return Ok(RationalPolynomial::new(coeffs));
        }
        powers.push(current.entries().to_vec());
    }
    unreachable!("Cayley-Hamilton bounds the degree by n")
}

type PolyMatrix = Vec<Vec<RationalPolynomial>>;

/// Monic invariant factors of `m` of positive degree, each dividing the next.
pub fn invariant_factors(m: &RationalMatrix) -> Result<Vec<RationalPolynomial>> {
    let n = m.ensure_square()?;
    let mut a: PolyMatrix = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut p = RationalPolynomial::constant(-m[(i, j)].clone());
                    if i == j {
                        p = &p + &RationalPolynomial::t();
                    }
                    p
                })
                .collect()
        })
        .collect();
    smith_diagonalize(&mut a);
    Ok((0..n)
        .map(|i| a[i][i].monic())
        .filter(|p| p.degree().is_some_and(|d| d > 0))
        .collect())
}

fn deg(p: &RationalPolynomial) -> usize {
    p.degree().expect("nonzero")
}

/// In-place Smith normal form over Q[t]; afterwards `a` is diagonal with
/// each entry dividing the next.
fn smith_diagonalize(a: &mut PolyMatrix) {
    let n = a.len();
    for k in 0..n {
        loop {
            // pivot: nonzero entry of minimal degree in the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in k..n {
                for j in k..n {
                    if !a[i][j].is_zero() && best.map_or(true, |(bi, bj)| deg(&a[i][j]) < deg(&a[bi][bj])) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { return };
            a.swap(k, pi);
            for row in a.iter_mut() {
                row.swap(k, pj);
            }
            let mut dirty = false;
            for i in k + 1..n {
                if a[i][k].is_zero() {
                    continue;
                }
                let (q, r) = a[i][k].div_rem(&a[k][k]).expect("pivot nonzero");
                for j in k..n {
                    let sub = &q * &a[k][j];
                    a[i][j] = &a[i][j] - &sub;
                }
                dirty |= !r.is_zero();
            }
            for j in k + 1..n {
                if a[k][j].is_zero() {
                    continue;
                }
                let (q, r) = a[k][j].div_rem(&a[k][k]).expect("pivot nonzero");
                for row in a.iter_mut().skip(k) {
                    let sub = &q * &row[k];
                    row[j] = &row[j] - &sub;
                }
                dirty |= !r.is_zero();
            }
            if dirty {
                continue;
            }
            // row and column are clear; enforce divisibility of the rest
            let bad = (k + 1..n).find(|&i| (k + 1..n).any(|j| !a[k][k].divides(&a[i][j])));
            match bad {
                Some(i) => {
                    for j in k..n {
                        let v = a[i][j].clone();
                        a[k][j] = &a[k][j] + &v;
                    }
                }
                None => break,
            }
        }
    }
}

/// Block diagonal of companion matrices of the nontrivial invariant factors,
/// smallest first. Two rational matrices are conjugate over Q iff these agree.
pub fn rational_canonical_form(m: &RationalMatrix) -> Result<RationalMatrix> {
    let factors = invariant_factors(m)?;
    let blocks = factors.iter().map(RationalPolynomial::companion).collect::<Result<Vec<_>>>()?;
    Ok(RationalMatrix::block_diag(&blocks))
}
