//! Jordan-Chevalley decomposition over Q.

use super::algebra::LieElement;
use crate::error::{LieError, Result};
use crate::linalg::{char_poly, min_poly, RationalMatrix, RationalPolynomial};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanDecomposition {
    pub semisimple: LieElement,
    pub nilpotent: LieElement,
}

/// `x = x_s + x_n`. The semisimple part is the limit of Newton's iteration
/// for the squarefree part `p` of the characteristic polynomial,
/// `s <- s - p(s) p'(s)^{-1}`, which stays inside `Q[x]` and terminates
/// after `O(log n)` steps because `p(s)` is nilpotent of shrinking index.
pub fn jordan_decompose(x: &LieElement) -> Result<JordanDecomposition> {
    let m = x.matrix();
    let p = char_poly(m)?.squarefree_part()?;
    let dp = p.derivative();
    let mut s = m.clone();
    let n = m.rows();
    // index of nilpotency at least doubles each step
    for _ in 0..=usize::BITS - n.leading_zeros() + 1 {
        let ps = p.eval_matrix(&s);
        if ps.is_zero() {
            let algebra = x.algebra();
            let semisimple = algebra.element(s.clone())?;
            let nilpotent = algebra.element(m - &s)?;
            return Ok(JordanDecomposition { semisimple, nilpotent });
        }
        let inv = dp
            .eval_matrix(&s)
            .inverse()
            .ok_or_else(|| LieError::CrossCheckFailed("p'(s) singular in Newton step".into()))?;
        s = &s - &(&ps * &inv);
    }
    Err(LieError::CrossCheckFailed("Newton iteration did not converge".into()))
}

/// The checks that make a claimed decomposition trustworthy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanCertificate {
    pub sum_ok: bool,
    pub commute_ok: bool,
    pub squarefree_ok: bool,
    pub nilpotent_ok: bool,
    /// `x_s = w(x)` for this polynomial, if one exists of degree below that
    /// of the minimal polynomial of `x`.
    pub witness: Option<RationalPolynomial>,
}

impl JordanCertificate {
    pub fn all_ok(&self) -> bool {
        self.sum_ok && self.commute_ok && self.squarefree_ok && self.nilpotent_ok && self.witness.is_some()
    }
}

pub fn certify(x: &LieElement, jd: &JordanDecomposition) -> Result<JordanCertificate> {
    let (s, nil) = (jd.semisimple.matrix(), jd.nilpotent.matrix());
    let sum_ok = &(s + nil) == x.matrix();
    let commute_ok = s.commutator(nil).is_zero();
    let ms = min_poly(s)?;
    let squarefree_ok = ms.gcd(&ms.derivative()).degree() == Some(0);
    let nilpotent_ok = nil.is_nilpotent();
    Ok(JordanCertificate { sum_ok, commute_ok, squarefree_ok, nilpotent_ok, witness: polynomial_witness(x.matrix(), s)? })
}

/// Solve `target = sum c_k x^k` over the powers below the minimal polynomial degree.
pub fn polynomial_witness(x: &RationalMatrix, target: &RationalMatrix) -> Result<Option<RationalPolynomial>> {
    let n = x.ensure_square()?;
    let d = min_poly(x)?.degree().unwrap_or(0);
    let mut cols = Vec::with_capacity(d);
    let mut pow = RationalMatrix::identity(n);
    for _ in 0..d.max(1) {
        cols.push(pow.entries().to_vec());
        pow = &pow * x;
    }
    let a = RationalMatrix::from_columns(n * n, &cols);
    Ok(a.solve(target.entries()).map(RationalPolynomial::new))
}
