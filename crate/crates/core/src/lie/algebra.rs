use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{LieError, Result};
use crate::linalg::{Rational, RationalMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Gl,
    Sl,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Gl => "gl",
            Family::Sl => "sl",
        })
    }
}

impl std::str::FromStr for Family {
    type Err = LieError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gl" => Ok(Family::Gl),
            "sl" => Ok(Family::Sl),
            other => Err(LieError::Unsupported(format!("algebra family {other:?}"))),
        }
    }
}

/// `gl_n` or `sl_n` as a matrix algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LieAlgebraSpec {
    pub family: Family,
    pub n: usize,
}

impl LieAlgebraSpec {
    /// `gl_n` needs `n >= 1`, `sl_n` needs `n >= 2`.
    pub fn new(family: Family, n: usize) -> Result<Self> {
        let min = match family {
            Family::Gl => 1,
            Family::Sl => 2,
        };
        if n < min {
            return Err(LieError::Precondition(format!("{family}_{n} needs n >= {min}")));
        }
        Ok(Self { family, n })
    }

    pub fn gl(n: usize) -> Self {
        Self::new(Family::Gl, n).expect("valid gl_n")
    }

    pub fn sl(n: usize) -> Self {
        Self::new(Family::Sl, n).expect("valid sl_n")
    }

    pub fn dim(&self) -> usize {
        match self.family {
            Family::Gl => self.n * self.n,
            Family::Sl => self.n * self.n - 1,
        }
    }

    pub fn rank(&self) -> usize {
        match self.family {
            Family::Gl => self.n,
            Family::Sl => self.n - 1,
        }
    }

    pub fn is_gl(&self) -> bool {
        self.family == Family::Gl
    }

    pub fn name(&self) -> String {
        format!("{}_{}", self.family, self.n)
    }

    pub fn contains(&self, m: &RationalMatrix) -> bool {
        m.rows() == self.n && m.cols() == self.n && (self.is_gl() || m.trace().is_zero())
    }

    /// Matrix units `E_ij` for gl; for sl the off-diagonal units followed by
    /// `E_ii - E_{i+1,i+1}`.
    pub fn basis(&self) -> Vec<RationalMatrix> {
        let n = self.n;
        match self.family {
            Family::Gl => (0..n * n).map(|k| RationalMatrix::unit(n, k / n, k % n)).collect(),
            Family::Sl => {
                let mut b: Vec<RationalMatrix> = (0..n * n)
                    .filter(|k| k / n != k % n)
                    .map(|k| RationalMatrix::unit(n, k / n, k % n))
                    .collect();
                for i in 0..n - 1 {
                    let mut h = RationalMatrix::unit(n, i, i);
                    h[(i + 1, i + 1)] = -Rational::one();
                    b.push(h);
                }
                b
            }
        }
    }

    /// Basis of the center: the identity for gl, nothing for sl.
    pub fn center_basis(&self) -> Vec<RationalMatrix> {
        match self.family {
            Family::Gl => vec![RationalMatrix::identity(self.n)],
            Family::Sl => Vec::new(),
        }
    }

    pub fn element(&self, m: RationalMatrix) -> Result<LieElement> {
        LieElement::new(*self, m)
    }

    pub fn zero(&self) -> LieElement {
        LieElement { algebra: *self, matrix: RationalMatrix::zeros(self.n, self.n) }
    }
}

impl fmt::Display for LieAlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.family, self.n)
    }
}

/// A square matrix tagged with the algebra it belongs to.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LieElement {
    algebra: LieAlgebraSpec,
    matrix: RationalMatrix,
}

impl LieElement {
    pub fn new(algebra: LieAlgebraSpec, matrix: RationalMatrix) -> Result<Self> {
        if matrix.rows() != algebra.n || matrix.cols() != algebra.n {
            return Err(LieError::DimensionMismatch(format!(
                "{}x{} matrix for {algebra}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        if !algebra.contains(&matrix) {
            return Err(LieError::NotInAlgebra(algebra.name(), format!("trace {}", matrix.trace())));
        }
        Ok(Self { algebra, matrix })
    }

    pub fn algebra(&self) -> LieAlgebraSpec {
        self.algebra
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> RationalMatrix {
        self.matrix
    }

    pub fn n(&self) -> usize {
        self.algebra.n
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    fn same_algebra(&self, other: &Self) -> Result<()> {
        if self.algebra != other.algebra {
            return Err(LieError::MismatchedAlgebras(self.algebra.name(), other.algebra.name()));
        }
        Ok(())
    }

    pub fn bracket(&self, other: &Self) -> Result<Self> {
        self.same_algebra(other)?;
        Ok(Self { algebra: self.algebra, matrix: self.matrix.commutator(&other.matrix) })
    }

    pub fn trace_form(&self, other: &Self) -> Result<Rational> {
        self.same_algebra(other)?;
        Ok((&self.matrix * &other.matrix).trace())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_algebra(other)?;
        Ok(Self { algebra: self.algebra, matrix: &self.matrix + &other.matrix })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_algebra(other)?;
        Ok(Self { algebra: self.algebra, matrix: &self.matrix - &other.matrix })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self { algebra: self.algebra, matrix: self.matrix.scale(c) }
    }

    /// Conjugate by an invertible matrix: `g x g^{-1}`.
    pub fn conjugate(&self, g: &RationalMatrix) -> Result<Self> {
        let inv = g
            .inverse()
            .ok_or_else(|| LieError::Precondition("conjugating matrix is singular".into()))?;
        Self::new(self.algebra, &(g * &self.matrix) * &inv)
    }
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self.matrix, self.algebra)
    }
}

/// `xy - yx`.
pub fn bracket(x: &LieElement, y: &LieElement) -> Result<LieElement> {
    x.bracket(y)
}

/// The invariant form `tr(xy)`.
pub fn trace_form(x: &LieElement, y: &LieElement) -> Result<Rational> {
    x.trace_form(y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::int;

    #[test]
    fn bracket_examples() {
        let g = LieAlgebraSpec::gl(2);
        let e12 = g.element(RationalMatrix::unit(2, 0, 1)).unwrap();
        let e21 = g.element(RationalMatrix::unit(2, 1, 0)).unwrap();
        assert_eq!(bracket(&e12, &e21).unwrap().matrix(), &RationalMatrix::diag_ints(&[1, -1]));
        assert!(bracket(&e12, &e12).unwrap().is_zero());
        let d = g.element(RationalMatrix::diag_ints(&[1, 2])).unwrap();
        assert_eq!(bracket(&d, &e12).unwrap().matrix(), &RationalMatrix::unit(2, 0, 1).scale(&int(-1)));
    }

    #[test]
    fn trace_form_examples() {
        let g = LieAlgebraSpec::gl(2);
        let e12 = g.element(RationalMatrix::unit(2, 0, 1)).unwrap();
        let e21 = g.element(RationalMatrix::unit(2, 1, 0)).unwrap();
        let h = g.element(RationalMatrix::diag_ints(&[1, -1])).unwrap();
        assert_eq!(trace_form(&e12, &e21).unwrap(), int(1));
        assert_eq!(trace_form(&h, &e12).unwrap(), int(0));
        let g3 = LieAlgebraSpec::gl(3);
        let id = g3.element(RationalMatrix::identity(3)).unwrap();
        assert_eq!(trace_form(&id, &id).unwrap(), int(3));
    }

    #[test]
    fn mismatched_algebras_rejected() {
        let a = LieAlgebraSpec::gl(2).zero();
        let b = LieAlgebraSpec::sl(2).zero();
        assert!(matches!(bracket(&a, &b), Err(LieError::MismatchedAlgebras(..))));
        assert!(LieAlgebraSpec::sl(2).element(RationalMatrix::identity(2)).is_err());
        assert!(LieAlgebraSpec::new(Family::Sl, 1).is_err());
    }

    #[test]
    fn basis_sizes() {
        for n in 1..5 {
            assert_eq!(LieAlgebraSpec::gl(n).basis().len(), n * n);
        }
        for n in 2..5 {
            let sl = LieAlgebraSpec::sl(n);
            assert_eq!(sl.basis().len(), sl.dim());
            assert!(sl.basis().iter().all(|b| sl.contains(b)));
        }
    }
}
