//! Dense matrices over Q.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::{self, Rational};
use crate::error::{LieError, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: RationalMatrix,
    pub pivots: Vec<usize>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(LieError::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Matrix unit `E_{ij}` (zero-based indices).
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m[(i, j)] = Rational::one();
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(LieError::DimensionMismatch("ragged rows".into()));
        }
        Ok(Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Convenience constructor from small integer rows. Panics on ragged input.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| rational::int(v)).collect()).collect())
            .expect("ragged integer rows")
    }

    pub fn diag(entries: &[Rational]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    pub fn diag_ints(entries: &[i64]) -> Self {
        Self::diag(&entries.iter().map(|&v| rational::int(v)).collect::<Vec<_>>())
    }

    pub fn column(entries: Vec<Rational>) -> Self {
        Self { rows: entries.len(), cols: 1, data: entries }
    }

    /// Reshape a row-major vector of length `n*n` into a square matrix.
    pub fn from_flat(n: usize, flat: Vec<Rational>) -> Self {
        assert_eq!(flat.len(), n * n, "flat vector has wrong length");
        Self { rows: n, cols: n, data: flat }
    }

    pub fn block_diag(blocks: &[RationalMatrix]) -> Self {
        let r: usize = blocks.iter().map(|b| b.rows).sum();
        let c: usize = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zeros(r, c);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m[(r0 + i, c0 + j)] = b[(i, j)].clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn ensure_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(LieError::NotSquare { rows: self.rows, cols: self.cols })
        }
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn into_entries(self) -> Vec<Rational> {
        self.data
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn col_vec(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for i in rows.clone() {
            for j in cols.clone() {
                data.push(self[(i, j)].clone());
            }
        }
        Self { rows: rows.len(), cols: cols.len(), data }
    }

    /// Stack vertically. All inputs must share a column count.
    pub fn vstack(parts: &[RationalMatrix]) -> Result<Self> {
        let cols = parts.first().map_or(0, |p| p.cols);
        if parts.iter().any(|p| p.cols != cols) {
            return Err(LieError::DimensionMismatch("vstack column counts differ".into()));
        }
        let rows = parts.iter().map(|p| p.rows).sum();
        let data = parts.iter().flat_map(|p| p.data.iter().cloned()).collect();
        Ok(Self { rows, cols, data })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(len: usize, columns: &[Vec<Rational>]) -> Self {
        let mut m = Self::zeros(len, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), len, "column length mismatch");
            for (i, v) in c.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(LieError::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LieError::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * c).collect() }
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).fold(Rational::zero(), |acc, i| acc + &self[(i, i)])
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    pub fn diagonal(&self) -> Vec<Rational> {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).collect()
    }

    /// Square-matrix power. Panics on non-square input.
    pub fn pow(&self, k: u32) -> Self {
        assert!(self.is_square(), "power of a non-square matrix");
        let mut result = Self::identity(self.rows);
        for _ in 0..k {
            result = &result * self;
        }
        result
    }

    pub fn is_nilpotent(&self) -> bool {
        self.is_square() && self.pow(self.rows as u32).is_zero()
    }

    /// Gauss-Jordan elimination. Among candidate pivots in a column the one
    /// with the smallest bit size is chosen.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pr = 0;
        for col in 0..m.cols {
            if pr >= m.rows {
                break;
            }
            let best = (pr..m.rows)
                .filter(|&r| !m[(r, col)].is_zero())
                .min_by_key(|&r| rational::bit_size(&m[(r, col)]));
            let Some(best) = best else { continue };
            m.swap_rows(pr, best);
            let inv = m[(pr, col)].recip();
            for j in col..m.cols {
                let v = &m.data[pr * m.cols + j] * &inv;
                m.data[pr * m.cols + j] = v;
            }
            for r in 0..m.rows {
                if r == pr || m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone();
                for j in col..m.cols {
                    let sub = &factor * &m.data[pr * m.cols + j];
                    if !sub.is_zero() {
                        m.data[r * m.cols + j] -= sub;
                    }
                }
            }
            pivots.push(col);
            pr += 1;
        }
        Rref { matrix: m, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Kernel basis as plain vectors, one per free column, each with a 1 in
    /// its free coordinate (the reduced-echelon normalization).
    pub fn kernel_vectors(&self) -> Vec<Vec<Rational>> {
        let Rref { matrix: r, pivots } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r[(row, f)].clone();
                }
                v
            })
            .collect()
    }

    /// Rank together with a kernel basis of column vectors.
    pub fn rank_kernel(&self) -> (usize, Vec<RationalMatrix>) {
        let kernel = self.kernel_vectors();
        (self.cols - kernel.len(), kernel.into_iter().map(RationalMatrix::column).collect())
    }

    /// One solution of `self * x = rhs` (free coordinates set to zero), or
    /// `None` when the system is inconsistent.
    pub fn solve(&self, rhs: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(rhs.len(), self.rows, "right-hand side length mismatch");
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = rhs[i].clone();
        }
        let Rref { matrix: r, pivots } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r[(row, self.cols)].clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Rational::one();
        }
        let Rref { matrix: r, pivots } = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(r.submatrix(0..n, n..2 * n))
    }

    pub fn determinant(&self) -> Result<Rational> {
        let n = self.ensure_square()?;
        let mut m = self.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m[(r, col)].is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != col {
                m.swap_rows(p, col);
                det = -det;
            }
            let pivot = m[(col, col)].clone();
            det *= &pivot;
            for r in col + 1..n {
                if m[(r, col)].is_zero() {
                    continue;
                }
                let factor = &m[(r, col)] / &pivot;
                for j in col..n {
                    let sub = &factor * &m[(col, j)];
                    m[(r, j)] -= sub;
                }
            }
        }
        Ok(det)
    }

    /// Commutator `self * other - other * self`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }
}

impl Index<(usize, usize)> for RationalMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl Add for &RationalMatrix {
    type Output = RationalMatrix;
    fn add(self, rhs: &RationalMatrix) -> RationalMatrix {
        self.checked_add(rhs).expect("matrix shapes differ")
    }
}

impl Sub for &RationalMatrix {
    type Output = RationalMatrix;
    fn sub(self, rhs: &RationalMatrix) -> RationalMatrix {
        self.checked_sub(rhs).expect("matrix shapes differ")
    }
}

impl Mul for &RationalMatrix {
    type Output = RationalMatrix;
    fn mul(self, rhs: &RationalMatrix) -> RationalMatrix {
        self.checked_mul(rhs).expect("matrix shapes incompatible")
    }
}

impl Neg for &RationalMatrix {
    type Output = RationalMatrix;
    fn neg(self) -> RationalMatrix {
        RationalMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| -a).collect() }
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Nested arrays of rational strings.
impl serde::Serialize for RationalMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = (0..self.rows).map(|i| self.row(i).iter().map(|r| r.to_string()).collect()).collect();
        rows.serialize(s)
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::{frac, int};

    #[test]
    fn identity_has_full_rank_and_no_kernel() {
        let (rank, kernel) = RationalMatrix::identity(3).rank_kernel();
        assert_eq!(rank, 3);
        assert!(kernel.is_empty());
    }

    #[test]
    fn zero_matrix_kernel_is_everything() {
        let (rank, kernel) = RationalMatrix::zeros(2, 3).rank_kernel();
        assert_eq!(rank, 0);
        assert_eq!(kernel.len(), 3);
    }

    #[test]
    fn rank_one_kernel_matches_hand_elimination() {
        // [[1,2],[2,4]] reduces to [[1,2],[0,0]]; x1 = -2 x2.
        let m = RationalMatrix::from_ints(&[&[1, 2], &[2, 4]]);
        let (rank, kernel) = m.rank_kernel();
        assert_eq!(rank, 1);
        assert_eq!(kernel.len(), 1);
        assert_eq!(kernel[0].entries(), &[int(-2), int(1)]);
        assert!((&m * &kernel[0]).is_zero());
    }

    #[test]
    fn inverse_and_determinant() {
        let m = RationalMatrix::from_ints(&[&[2, 1], &[7, 4]]);
        assert_eq!(m.determinant().unwrap(), int(1));
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, RationalMatrix::identity(2));
        assert!(RationalMatrix::from_ints(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn solve_reports_inconsistency() {
        let m = RationalMatrix::from_ints(&[&[1, 2], &[2, 4]]);
        assert!(m.solve(&[int(1), int(3)]).is_none());
        let x = m.solve(&[int(1), int(2)]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![int(1), int(2)]);
    }

    #[test]
    fn shape_errors_surface() {
        let a = RationalMatrix::zeros(2, 3);
        assert!(a.checked_mul(&a).is_err());
        assert!(RationalMatrix::new(2, 2, vec![frac(1, 2)]).is_err());
        assert!(a.determinant().is_err());
    }
}
