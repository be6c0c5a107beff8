//! The subquotients `L(x) ⊃ L(x)'`, `T(x)`, `N(x)`, `A(x) = G_x / N(x)°`
//! and `C(x) = π_0(N(x))` in type A.
//!
//! `L(x)' = Π SL_{m_i}` over the eigenspaces of `x_s` for both `GL_n` and
//! `SL_n`, so `N(x) = Π (SL_{m_i})_{x_n}` and `C(x) = Π Z/gcd(λ^i)`, where
//! `λ^i` is the Jordan type of `x_n` on the `i`-th eigenspace. Groups are
//! reported as (free rank, torsion order) of the abelian group `A(x)`.

use serde::Serialize;

use crate::classes::{class_perp, classify_detailed, derived_levi_centralizer};
use crate::error::{LieError, Result};
use crate::lie::{centralizer, LieElement};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubquotientData {
    pub dim_l: usize,
    pub dim_lprime: usize,
    pub rank_t: usize,
    pub dim_n: usize,
    pub dim_a: usize,
    pub c_order: usize,
    /// Orders of the cyclic factors of `C(x)`, one per eigenspace (1s dropped).
    pub c_structure: Vec<usize>,
    #[serde(skip)]
    pub exact_sequence: ExactSequence,
}

/// `{e} → C(x) → A(x) → T(x) → {e}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ExactSequence {
    pub c_order: usize,
    pub rank_t: usize,
}

pub fn subquotient_data(x: &LieElement) -> Result<SubquotientData> {
    let c = classify_detailed(x)?;
    let g = x.algebra();
    let dim_l = centralizer(&c.jordan.semisimple).dim();
    let dim_lprime: usize = c.multiplicities.iter().map(|m| m * m - 1).sum();
    let rank_lprime: usize = c.multiplicities.iter().map(|m| m - 1).sum();
    let rank_t = g.rank() - rank_lprime;
    let dim_n = derived_levi_centralizer(x)?.dim();
    // dim L' - dim(L'-orbit of x_n), blockwise
    let expected_n: usize = c.jordan_types.iter().map(|l| l.centralizer_dim() - 1).sum();
    if dim_n != expected_n {
        return Err(LieError::CrossCheckFailed(format!("dim n(x) = {dim_n}, partitions give {expected_n}")));
    }
    let dim_a = centralizer(x).dim() - dim_n;
    if dim_a != rank_t {
        return Err(LieError::CrossCheckFailed(format!("dim A(x) = {dim_a} but rank T(x) = {rank_t}")));
    }
    let c_structure: Vec<usize> = c.jordan_types.iter().map(|l| l.gcd()).filter(|&d| d > 1).collect();
    let c_order = c_structure.iter().product();
    Ok(SubquotientData {
        dim_l,
        dim_lprime,
        rank_t,
        dim_n,
        dim_a,
        c_order,
        c_structure,
        exact_sequence: ExactSequence { c_order, rank_t },
    })
}

/// `class_perp(x) = n(x)`, checked by mutual containment.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PerpCertificate {
    pub perp_dim: usize,
    pub n_dim: usize,
    pub perp_in_n: bool,
    pub n_in_perp: bool,
}

impl PerpCertificate {
    pub fn equal(&self) -> bool {
        self.perp_in_n && self.n_in_perp
    }
}

pub fn trivial_action_core(x: &LieElement) -> Result<PerpCertificate> {
    let perp = class_perp(x)?;
    let n_x = derived_levi_centralizer(x)?;
    Ok(PerpCertificate {
        perp_dim: perp.dim(),
        n_dim: n_x.dim(),
        perp_in_n: n_x.contains_subspace(&perp),
        n_in_perp: perp.contains_subspace(&n_x),
    })
}

/// `A(x)` as an abelian algebraic group: `(C^×)^free_rank × finite`,
/// `torsion = |π_0(A(x))|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GroupShape {
    pub free_rank: usize,
    pub torsion: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxPresentation {
    /// `Z(L(x))`: torus rank, and `|π_0|` (`gcd(m_i)` for `SL_n`, else 1).
    pub center_l: GroupShape,
    /// `Z(L(x)') = Π μ_{m_i}`.
    pub center_lprime: Vec<usize>,
    pub c_structure: Vec<usize>,
    /// `Z(L(x)) ×_{Z(L(x)')} C(x)`.
    pub fibered: GroupShape,
    /// `π_0(G_x)` directly: `G_x` is connected in `GL_n`; in `SL_n` the
    /// determinant on the reductive part of `G_x` gives `Z/gcd(all parts)`.
    pub direct: GroupShape,
}

impl AxPresentation {
    pub fn agree(&self) -> bool {
        self.fibered == self.direct
    }
}

pub fn ax_presentation(x: &LieElement) -> Result<AxPresentation> {
    let c = classify_detailed(x)?;
    let gl = x.algebra().is_gl();
    let ms = &c.multiplicities;
    let ds: Vec<usize> = c.jordan_types.iter().map(|l| l.gcd()).collect();
    let g = ms.iter().fold(0, |a, &m| num_integer::gcd(a, m));
    let rank_z = if gl { ms.len() } else { ms.len() - 1 };
    let pi0_z = if gl { 1 } else { g };
    // π_0(A) = (π_0 Z(L) × C) / image of Z(L'); with a_i ∈ Z/m_i the
    // generator exp(2πi a_i / m_i) of block i,
    // a ↦ (Σ a_i mod g, (-a_i mod d_i)_i)
    let target: usize = pi0_z * ds.iter().product::<usize>();
    let image = image_size(ms, &ds, pi0_z);
    let fibered = GroupShape { free_rank: rank_z, torsion: target / image };
    let all_parts = c.jordan_types.iter().fold(0, |a, l| num_integer::gcd(a, l.gcd()));
    let direct = GroupShape { free_rank: rank_z, torsion: if gl { 1 } else { all_parts } };
    Ok(AxPresentation {
        center_l: GroupShape { free_rank: rank_z, torsion: pi0_z },
        center_lprime: ms.clone(),
        c_structure: ds.into_iter().filter(|&d| d > 1).collect(),
        fibered,
        direct,
    })
}

/// Size of the image of `Π Z/m_i → Z/g × Π Z/d_i`, by enumeration.
fn image_size(ms: &[usize], ds: &[usize], g: usize) -> usize {
    let mut seen = std::collections::BTreeSet::new();
    let mut a = vec![0usize; ms.len()];
    loop {
        let first = a.iter().sum::<usize>() % g;
        let rest: Vec<usize> = a.iter().zip(ds).map(|(&ai, &d)| (d - ai % d) % d).collect();
        seen.insert((first, rest));
        let mut i = 0;
        loop {
            if i == a.len() {
                return seen.len();
            }
            a[i] += 1;
            if a[i] < ms[i] {
                break;
            }
            a[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::LieAlgebraSpec;
    use crate::linalg::RationalMatrix;

    #[test]
    fn examples() {
        let gl3 = LieAlgebraSpec::gl(3);
        let x = gl3.element(RationalMatrix::diag_ints(&[1, 1, 2])).unwrap();
        let d = subquotient_data(&x).unwrap();
        assert_eq!((d.dim_l, d.dim_lprime, d.rank_t, d.c_order), (5, 3, 2, 1));

        let sl2 = LieAlgebraSpec::sl(2);
        let e = sl2.element(RationalMatrix::unit(2, 0, 1)).unwrap();
        let d = subquotient_data(&e).unwrap();
        assert_eq!((d.rank_t, d.dim_a, d.c_order), (0, 0, 2));
        let p = ax_presentation(&e).unwrap();
        assert_eq!(p.fibered, GroupShape { free_rank: 0, torsion: 2 });
        assert!(p.agree());

        let sl4 = LieAlgebraSpec::sl(4);
        let zero = subquotient_data(&sl4.zero()).unwrap();
        assert_eq!((zero.rank_t, zero.c_order), (0, 1));
        let y = sl4.element(RationalMatrix::from_ints(&[&[1, 1, 0, 0], &[0, 1, 0, 0], &[0, 0, -1, 1], &[0, 0, 0, -1]])).unwrap();
        let p = ax_presentation(&y).unwrap();
        assert_eq!(p.fibered, GroupShape { free_rank: 1, torsion: 2 });
        assert!(p.agree());
    }

    #[test]
    fn perp_identity() {
        let sl2 = LieAlgebraSpec::sl(2);
        let e = sl2.element(RationalMatrix::unit(2, 0, 1)).unwrap();
        let c = trivial_action_core(&e).unwrap();
        assert!(c.equal());
        assert_eq!(c.n_dim, 1);
        let gl3 = LieAlgebraSpec::gl(3);
        let rs = gl3.element(RationalMatrix::diag_ints(&[1, 2, 3])).unwrap();
        assert_eq!(trivial_action_core(&rs).unwrap().perp_dim, 0);
    }
}
