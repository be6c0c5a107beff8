//! sl2-triples and Jacobson-Morozov completion.

use num_traits::Zero;

use super::algebra::{LieAlgebraSpec, LieElement};
use super::subspace::{centralizer_of_matrix, Subspace};
use crate::error::{LieError, Result};
use crate::linalg::rational::int;
use crate::linalg::{Rational, RationalMatrix};

/// `(e, h, f)` with `[e,f] = h`, `[h,e] = 2e`, `[h,f] = -2f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2Triple {
    pub e: LieElement,
    pub h: LieElement,
    pub f: LieElement,
}

/// Which of the defining identities hold.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TripleCheck {
    pub ef_is_h: bool,
    pub he_is_2e: bool,
    pub hf_is_minus_2f: bool,
    pub traceless: bool,
}

impl TripleCheck {
    pub fn all(&self) -> bool {
        self.ef_is_h && self.he_is_2e && self.hf_is_minus_2f && self.traceless
    }
}

impl Sl2Triple {
    /// Validating constructor.
    pub fn new(e: LieElement, h: LieElement, f: LieElement) -> Result<Self> {
        let t = Self { e, h, f };
        let c = t.check()?;
        if !c.all() {
            return Err(LieError::InvalidTriple(format!("{c:?}")));
        }
        Ok(t)
    }

    pub fn check(&self) -> Result<TripleCheck> {
        let (e, h, f) = (&self.e, &self.h, &self.f);
        Ok(TripleCheck {
            ef_is_h: &e.bracket(f)? == h,
            he_is_2e: h.bracket(e)? == e.scale(&int(2)),
            hf_is_minus_2f: h.bracket(f)? == f.scale(&int(-2)),
            traceless: [e, h, f].iter().all(|m| m.matrix().trace().is_zero()),
        })
    }

    pub fn algebra(&self) -> LieAlgebraSpec {
        self.e.algebra()
    }

    /// Triple with `e = 0`: the degenerate convention used for semisimple
    /// elements (not an sl2-triple, never produced by completion).
    pub fn is_zero(&self) -> bool {
        self.e.is_zero() && self.h.is_zero() && self.f.is_zero()
    }
}

/// Matrix of `y -> a y - y b` on row-major flattened `n x n` matrices.
pub(crate) fn sylvester(a: &RationalMatrix, b: &RationalMatrix) -> RationalMatrix {
    let n = a.rows();
    let mut m = RationalMatrix::zeros(n * n, n * n);
    for i in 0..n {
        for j in 0..n {
            let r = i * n + j;
            for k in 0..n {
                if !a[(i, k)].is_zero() {
                    m[(r, k * n + j)] += &a[(i, k)];
                }
                if !b[(k, j)].is_zero() {
                    m[(r, i * n + k)] -= &b[(k, j)];
                }
            }
        }
    }
    m
}

/// Complete a nonzero nilpotent `e` to a triple inside `[g, g]`.
pub fn jm_complete(e: &LieElement) -> Result<Sl2Triple> {
    let n = e.n();
    if n < 2 {
        // gl_1 has no nonzero nilpotents
        return Err(if e.is_zero() { LieError::ZeroElement } else { LieError::NotNilpotent });
    }
    jm_complete_in(e, &Subspace::whole(LieAlgebraSpec::sl(n)))
}

/// Complete `e` inside a subalgebra `L` of `gl_n` on which the trace form is
/// nondegenerate (a reductive subalgebra such as the derived algebra of a
/// Levi). `h` is taken in `L`, orthogonal to `L_e` (so `h` lies in
/// `[e, L]`) with `[h, e] = 2e`; among those, the reduced-echelon particular
/// solution is chosen. `f` is then unique.
pub fn jm_complete_in(e: &LieElement, subalgebra: &Subspace) -> Result<Sl2Triple> {
    if e.is_zero() {
        return Err(LieError::ZeroElement);
    }
    if !e.matrix().is_nilpotent() {
        return Err(LieError::NotNilpotent);
    }
    let n = e.n();
    let gl = LieAlgebraSpec::gl(n);
    let l = Subspace::span(gl, subalgebra.basis());
    if !l.contains(e.matrix()) {
        return Err(LieError::Precondition("e is not in the subalgebra".into()));
    }
    let em = e.matrix();
    let l_perp = l.annihilator();
    let l_e = l.intersection(&centralizer_of_matrix(gl, em));
    let ad_e = sylvester(em, em); // h -> e h - h e = -[h, e]

    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut rhs: Vec<Rational> = Vec::new();
    for a in l_perp.basis().iter().chain(l_e.basis().iter()) {
        rows.push(a.transpose().into_entries());
        rhs.push(Rational::zero());
    }
    for (i, v) in em.entries().iter().enumerate() {
        rows.push(ad_e.row(i).to_vec());
        rhs.push(v * int(-2));
    }
    let h = solve_rows(n, rows, &rhs).ok_or_else(|| LieError::InvalidTriple("no admissible h".into()))?;

    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut rhs: Vec<Rational> = Vec::new();
    for a in l_perp.basis() {
        rows.push(a.transpose().into_entries());
        rhs.push(Rational::zero());
    }
    for (i, v) in h.entries().iter().enumerate() {
        rows.push(ad_e.row(i).to_vec());
        rhs.push(v.clone());
    }
    let ad_h = sylvester(&h, &h);
    for i in 0..n * n {
        let mut row = ad_h.row(i).to_vec();
        row[i] += int(2);
        rows.push(row);
        rhs.push(Rational::zero());
    }
    let f = solve_rows(n, rows, &rhs).ok_or_else(|| LieError::InvalidTriple("no f for chosen h".into()))?;

    let algebra = e.algebra();
    Sl2Triple::new(e.clone(), algebra.element(h)?, algebra.element(f)?)
}

fn solve_rows(n: usize, rows: Vec<Vec<Rational>>, rhs: &[Rational]) -> Option<RationalMatrix> {
    let m = RationalMatrix::new(rows.len(), n * n, rows.into_iter().flatten().collect()).ok()?;
    m.solve(rhs).map(|v| RationalMatrix::from_flat(n, v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_triple_gl2() {
        let g = LieAlgebraSpec::gl(2);
        let e = g.element(RationalMatrix::unit(2, 0, 1)).unwrap();
        let t = jm_complete(&e).unwrap();
        assert_eq!(t.h.matrix(), &RationalMatrix::diag_ints(&[1, -1]));
        assert_eq!(t.f.matrix(), &RationalMatrix::unit(2, 1, 0));
    }

    #[test]
    fn principal_triple_gl3() {
        let g = LieAlgebraSpec::gl(3);
        let e = g.element(RationalMatrix::from_ints(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]])).unwrap();
        let t = jm_complete(&e).unwrap();
        assert_eq!(t.h.matrix(), &RationalMatrix::diag_ints(&[2, 0, -2]));
        assert_eq!(t.f.matrix(), &RationalMatrix::from_ints(&[&[0, 0, 0], &[2, 0, 0], &[0, 2, 0]]));
    }

    #[test]
    fn bad_inputs() {
        let g = LieAlgebraSpec::gl(2);
        assert_eq!(jm_complete(&g.zero()), Err(LieError::ZeroElement));
        let s = g.element(RationalMatrix::diag_ints(&[1, 2])).unwrap();
        assert_eq!(jm_complete(&s), Err(LieError::NotNilpotent));
        let bogus = Sl2Triple::new(g.element(RationalMatrix::unit(2, 0, 1)).unwrap(), g.zero(), g.zero());
        assert!(matches!(bogus, Err(LieError::InvalidTriple(_))));
    }
}
