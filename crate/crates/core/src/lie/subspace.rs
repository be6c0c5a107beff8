//! Linear subspaces of a matrix algebra, kept in reduced echelon form so
//! that equal subspaces have identical bases.

use num_traits::{One, Zero};

use super::algebra::{LieAlgebraSpec, LieElement};
use crate::linalg::{Rational, RationalMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: LieAlgebraSpec,
    /// Reduced echelon rows (flattened n x n matrices).
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span<I>(ambient: LieAlgebraSpec, generators: I) -> Self
    where
        I: IntoIterator<Item = RationalMatrix>,
    {
        let flat: Vec<Vec<Rational>> = generators.into_iter().map(RationalMatrix::into_entries).collect();
        Self::from_flat(ambient, flat)
    }

    fn from_flat(ambient: LieAlgebraSpec, flat: Vec<Vec<Rational>>) -> Self {
        let len = ambient.n * ambient.n;
        if flat.is_empty() {
            return Self::zero(ambient);
        }
        let m = RationalMatrix::new(flat.len(), len, flat.into_iter().flatten().collect())
            .expect("generators have the ambient size");
        let rref = m.rref();
        let rank = rref.pivots.len();
        let rows = (0..rank).map(|i| rref.matrix.row(i).to_vec()).collect();
        Self { ambient, rows, pivots: rref.pivots }
    }

    pub fn zero(ambient: LieAlgebraSpec) -> Self {
        Self { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn whole(ambient: LieAlgebraSpec) -> Self {
        Self::span(ambient, ambient.basis())
    }

    pub fn ambient(&self) -> LieAlgebraSpec {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn basis(&self) -> Vec<RationalMatrix> {
        let n = self.ambient.n;
        self.rows.iter().map(|r| RationalMatrix::from_flat(n, r.clone())).collect()
    }

    pub fn basis_elements(&self) -> Vec<LieElement> {
        self.basis()
            .into_iter()
            .map(|m| LieElement::new(self.ambient, m).expect("subspace lies in its ambient"))
            .collect()
    }

    /// Coordinates with respect to `basis()`, or `None` if outside.
    pub fn coordinates(&self, m: &RationalMatrix) -> Option<Vec<Rational>> {
        if m.rows() != self.ambient.n || m.cols() != self.ambient.n {
            return None;
        }
        let mut v = m.entries().to_vec();
        let mut coords = Vec::with_capacity(self.rows.len());
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p].clone();
            if !c.is_zero() {
                for (vi, ri) in v.iter_mut().zip(row) {
                    if !ri.is_zero() {
                        *vi -= &c * ri;
                    }
                }
            }
            coords.push(c);
        }
        v.iter().all(Zero::is_zero).then_some(coords)
    }

    pub fn contains(&self, m: &RationalMatrix) -> bool {
        self.coordinates(m).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis().iter().all(|b| self.contains(b))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let flat = self.rows.iter().chain(&other.rows).cloned().collect();
        Self::from_flat(self.ambient, flat)
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.ambient);
        }
        let len = self.ambient.n * self.ambient.n;
        let (a, b) = (self.dim(), other.dim());
        // columns: basis of self, then minus basis of other
        let mut m = RationalMatrix::zeros(len, a + b);
        for (j, r) in self.rows.iter().enumerate() {
            for i in 0..len {
                m[(i, j)] = r[i].clone();
            }
        }
        for (j, r) in other.rows.iter().enumerate() {
            for i in 0..len {
                m[(i, a + j)] = -r[i].clone();
            }
        }
        let gens = m.kernel_vectors().into_iter().map(|k| {
            let mut v = vec![Rational::zero(); len];
            for (c, r) in k[..a].iter().zip(&self.rows) {
                if !c.is_zero() {
                    for (vi, ri) in v.iter_mut().zip(r) {
                        *vi += c * ri;
                    }
                }
            }
            v
        });
        Self::from_flat(self.ambient, gens.collect())
    }

    /// Trace-form annihilator inside the ambient algebra.
    pub fn annihilator(&self) -> Subspace {
        let n = self.ambient.n;
        let mut eqs: Vec<Vec<Rational>> = self
            .basis()
            .iter()
            .map(|b| b.transpose().into_entries())
            .collect();
        if !self.ambient.is_gl() {
            eqs.push(RationalMatrix::identity(n).into_entries());
        }
        Self::from_flat(self.ambient, solve_homogeneous(n * n, eqs))
    }

    /// The same subspace viewed in another ambient of equal matrix size.
    pub fn reinterpret(&self, ambient: LieAlgebraSpec) -> Option<Subspace> {
        (ambient.n == self.ambient.n && self.basis().iter().all(|b| ambient.contains(b)))
            .then(|| Subspace { ambient, rows: self.rows.clone(), pivots: self.pivots.clone() })
    }
}

/// Basis of `{v : e . v = 0 for every equation e}` in dimension `len`.
pub(crate) fn solve_homogeneous(len: usize, equations: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
    if equations.is_empty() {
        return (0..len)
            .map(|i| {
                let mut v = vec![Rational::zero(); len];
                v[i] = Rational::one();
                v
            })
            .collect();
    }
    let rows = equations.len();
    RationalMatrix::new(rows, len, equations.into_iter().flatten().collect())
        .expect("equation length")
        .kernel_vectors()
}

/// Kernel of `ad_x` within the ambient algebra.
pub fn centralizer(x: &LieElement) -> Subspace {
    centralizer_of_matrix(x.algebra(), x.matrix())
}

pub fn centralizer_of_matrix(ambient: LieAlgebraSpec, x: &RationalMatrix) -> Subspace {
    let n = ambient.n;
    // (yx - xy)_{ij} = sum_k y_ik x_kj - x_ik y_kj
    let mut eqs = Vec::with_capacity(n * n + 1);
    for i in 0..n {
        for j in 0..n {
            let mut row = vec![Rational::zero(); n * n];
            for k in 0..n {
                row[i * n + k] += &x[(k, j)];
                row[k * n + j] -= &x[(i, k)];
            }
            eqs.push(row);
        }
    }
    if !ambient.is_gl() {
        eqs.push(RationalMatrix::identity(n).into_entries());
    }
    Subspace::from_flat(ambient, solve_homogeneous(n * n, eqs))
}

/// The tangent space `[g, x]` to the adjoint orbit.
pub fn bracket_image(x: &LieElement) -> Subspace {
    let ambient = x.algebra();
    Subspace::span(ambient, ambient.basis().iter().map(|b| b.commutator(x.matrix())))
}

/// `[a, b]` for subspaces: span of brackets of basis pairs.
pub fn bracket_span(a: &Subspace, b: &Subspace) -> Subspace {
    let mut gens = Vec::new();
    let bb = b.basis();
    for u in a.basis() {
        for v in &bb {
            gens.push(u.commutator(v));
        }
    }
    let ambient = a.ambient();
    Subspace::span(ambient, gens)
}
