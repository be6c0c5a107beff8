//! Slodowy slices, the natural slice `S_x`, the complementary slice
//! `S_{x,T}`, and an exact checker for the Poisson-transversal property.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::classes::{
    classify, classify_detailed, eigenbasis, enumerate_classes, geometric_induced_partition, nilpotent_type, restrict, ClassLabel,
};
use crate::error::{LieError, Result};
use crate::lie::subspace::centralizer_of_matrix;
use crate::lie::{bracket_image, bracket_span, centralizer, jm_complete, jm_complete_in, LieAlgebraSpec, LieElement, Sl2Triple, Subspace};
use crate::linalg::rational::int;
use crate::linalg::{char_poly, rational_canonical_form, Rational, RationalMatrix, RationalPolynomial};
use crate::roots::{dominance_leq, LeviSubset, Partition};

/// A locally closed piece of `g` with a tangent model at each of its points.
pub trait Slice {
    fn ambient(&self) -> LieAlgebraSpec;
    fn contains(&self, y: &LieElement) -> Result<bool>;
    /// Tangent space at a point of the slice.
    fn tangent_at(&self, y: &LieElement) -> Result<Subspace>;
}

/// `base + span(directions)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSlice {
    base: LieElement,
    directions: Subspace,
}

impl AffineSlice {
    pub fn new(base: LieElement, directions: Subspace) -> Result<Self> {
        if base.algebra() != directions.ambient() {
            return Err(LieError::MismatchedAlgebras(base.algebra().name(), directions.ambient().name()));
        }
        Ok(Self { base, directions })
    }

    /// The whole algebra as a (trivial) slice.
    pub fn whole(ambient: LieAlgebraSpec) -> Self {
        Self { base: ambient.zero(), directions: Subspace::whole(ambient) }
    }

    pub fn base(&self) -> &LieElement {
        &self.base
    }

    pub fn directions(&self) -> &Subspace {
        &self.directions
    }

    pub fn dim(&self) -> usize {
        self.directions.dim()
    }

    /// `base + sum c_i b_i`.
    pub fn point(&self, coords: &[Rational]) -> Result<LieElement> {
        let basis = self.directions.basis();
        if coords.len() != basis.len() {
            return Err(LieError::DimensionMismatch(format!("{} coordinates for a {}-dim slice", coords.len(), basis.len())));
        }
        let m = basis.iter().zip(coords).fold(self.base.matrix().clone(), |acc, (b, c)| &acc + &b.scale(c));
        self.base.algebra().element(m)
    }

    pub fn contains_matrix(&self, m: &RationalMatrix) -> bool {
        m.rows() == self.base.n() && self.directions.contains(&(m - self.base.matrix()))
    }
}

impl Slice for AffineSlice {
    fn ambient(&self) -> LieAlgebraSpec {
        self.base.algebra()
    }

    fn contains(&self, y: &LieElement) -> Result<bool> {
        if y.algebra() != self.ambient() {
            return Err(LieError::MismatchedAlgebras(y.algebra().name(), self.ambient().name()));
        }
        Ok(self.contains_matrix(y.matrix()))
    }

    fn tangent_at(&self, _y: &LieElement) -> Result<Subspace> {
        Ok(self.directions.clone())
    }
}

/// Re-tag a triple's matrices into `ambient`.
fn triple_in(t: &Sl2Triple, ambient: LieAlgebraSpec) -> Result<Sl2Triple> {
    let tag = |x: &LieElement| ambient.element(x.matrix().clone());
    let moved = Sl2Triple { e: tag(&t.e)?, h: tag(&t.h)?, f: tag(&t.f)? };
    if !moved.check()?.all() {
        return Err(LieError::InvalidTriple("bracket relations fail".into()));
    }
    Ok(moved)
}

/// `S_T = e + g_f`.
pub fn slodowy_slice(t: &Sl2Triple, ambient: LieAlgebraSpec) -> Result<AffineSlice> {
    let t = triple_in(t, ambient)?;
    AffineSlice::new(t.e.clone(), centralizer(&t.f))
}

/// Eigenvalues of `ad_h` on `g_f` with multiplicity, ascending. `ad_h`
/// preserves `g_f` and has integer spectrum there, so each weight space is
/// found as a kernel; the multiplicities must exhaust `g_f`.
pub fn contracting_weights(t: &Sl2Triple, ambient: LieAlgebraSpec) -> Result<Vec<i64>> {
    let t = triple_in(t, ambient)?;
    let g_f = centralizer(&t.f);
    let n = ambient.n as i64;
    let h = t.h.matrix();
    let mut weights = Vec::new();
    let mut found = 0;
    for m in -2 * (n - 1)..=2 * (n - 1) {
        let shifted = RationalMatrix::identity(ambient.n).scale(&int(m));
        // ad_h y = m y  <=>  (h - m) y - y h = 0
        let eigen = eigen_space(ambient, &(h - &shifted), h);
        let mult = g_f.intersection(&eigen).dim();
        weights.extend(std::iter::repeat(m).take(mult));
        found += mult;
    }
    if found != g_f.dim() {
        return Err(LieError::CrossCheckFailed(format!("weights cover {found} of {} dimensions", g_f.dim())));
    }
    Ok(weights)
}

/// `{y : a y - y b = 0}` within the ambient algebra.
fn eigen_space(ambient: LieAlgebraSpec, a: &RationalMatrix, b: &RationalMatrix) -> Subspace {
    let n = ambient.n;
    let mut eqs: Vec<Vec<Rational>> = crate::lie::sl2::sylvester(a, b).row_vecs();
    if !ambient.is_gl() {
        eqs.push(RationalMatrix::identity(n).into_entries());
    }
    let gens = crate::lie::subspace::solve_homogeneous(n * n, eqs);
    Subspace::span(ambient, gens.into_iter().map(|v| RationalMatrix::from_flat(n, v)))
}

/// The principal triple of `ambient`, completed from `x_{(n)}`.
pub fn principal_triple(ambient: LieAlgebraSpec) -> Result<Sl2Triple> {
    let e = ambient.element(Partition::regular(ambient.n).nilpotent_representative())?;
    jm_complete(&e)
}

/// The point of `e + span{I?, f, f^2, ..., f^{m-1}}` with characteristic
/// polynomial `target`, for a principal pair `(e, f)` of `gl_m`. The
/// coefficient of `f^k` has contracting weight `2k + 2`, so the coefficient
/// of `t^{m-k-1}` in the characteristic polynomial is affine in it once the
/// lower ones are fixed; the solve is sequential and the solution unique.
pub fn principal_slice_point(
    e: &RationalMatrix,
    f: &RationalMatrix,
    include_identity: bool,
    target: &RationalPolynomial,
) -> Result<RationalMatrix> {
    let m = e.ensure_square()?;
    let powers: Vec<RationalMatrix> = (0..m).map(|k| f.pow(k as u32)).collect();
    let mut coeffs = vec![Rational::zero(); m];
    let build = |coeffs: &[Rational]| {
        powers
            .iter()
            .zip(coeffs)
            .fold(e.clone(), |acc, (p, c)| if c.is_zero() { acc } else { &acc + &p.scale(c) })
    };
    let start = if include_identity { 0 } else { 1 };
    for k in start..m {
        let slot = m - k - 1;
        coeffs[k] = Rational::zero();
        let at0 = char_poly(&build(&coeffs))?.coeff(slot);
        coeffs[k] = Rational::one();
        let at1 = char_poly(&build(&coeffs))?.coeff(slot);
        let slope = &at1 - &at0;
        if slope.is_zero() {
            return Err(LieError::CrossCheckFailed("degenerate principal slice coordinate".into()));
        }
        coeffs[k] = (target.coeff(slot) - at0) / slope;
    }
    let point = build(&coeffs);
    if &char_poly(&point)? != target {
        return Err(LieError::NotOnSlice);
    }
    Ok(point)
}

/// The unique point of the principal Slodowy slice conjugate to a regular `x`.
pub fn fundamental_rep(x: &LieElement) -> Result<LieElement> {
    let ambient = x.algebra();
    let dim = centralizer(x).dim();
    if dim != ambient.rank() {
        return Err(LieError::NotRegular { centralizer_dim: dim, rank: ambient.rank() });
    }
    let target = char_poly(x.matrix())?;
    if ambient.n == 1 {
        return Ok(x.clone());
    }
    let t = principal_triple(ambient)?;
    let point = principal_slice_point(t.e.matrix(), t.f.matrix(), ambient.is_gl(), &target)?;
    ambient.element(point)
}

/// Outcome of the exact Poisson-transversal test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PoissonVerdict {
    pub transversal_ok: bool,
    pub symplectic_ok: bool,
    /// `dim([g,x] + T_x S)`.
    pub sum_dim: usize,
    pub ambient_dim: usize,
    /// `dim([g,x] ∩ T_x S)`.
    pub intersection_dim: usize,
    pub gram_rank: usize,
}

impl PoissonVerdict {
    pub fn ok(&self) -> bool {
        self.transversal_ok && self.symplectic_ok
    }
}

/// Transversality is `[g,x] + T_x S = g`. The leaf `Gx ∩ S` has tangent
/// `W = [g,x] ∩ T_x S`; it is symplectic iff the Gram matrix
/// `⟨x, [y_i, y_j]⟩` is nondegenerate, where `[y_i, x] = w_i` for a basis
/// `w_i` of `W` (independent of the choice of the `y_i`).
pub fn poisson_slice_check(slice: &dyn Slice, x: &LieElement) -> Result<PoissonVerdict> {
    if !slice.contains(x)? {
        return Err(LieError::NotOnSlice);
    }
    let ambient = x.algebra();
    let tangent = slice.tangent_at(x)?;
    let orbit = bracket_image(x);
    let sum_dim = orbit.sum(&tangent).dim();
    let w = orbit.intersection(&tangent);
    let basis = ambient.basis();
    let images: Vec<Vec<Rational>> = basis.iter().map(|b| b.commutator(x.matrix()).into_entries()).collect();
    let n = ambient.n;
    let ad = RationalMatrix::from_columns(n * n, &images);
    let preimages: Vec<RationalMatrix> = w
        .basis()
        .iter()
        .map(|wi| {
            let c = ad.solve(wi.entries()).expect("w lies in [g,x]");
            basis.iter().zip(&c).fold(RationalMatrix::zeros(n, n), |acc, (b, c)| &acc + &b.scale(c))
        })
        .collect();
    let k = preimages.len();
    let mut gram = RationalMatrix::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            gram[(i, j)] = (x.matrix() * &preimages[i].commutator(&preimages[j])).trace();
        }
    }
    let gram_rank = gram.rank();
    Ok(PoissonVerdict {
        transversal_ok: sum_dim == ambient.dim(),
        symplectic_ok: gram_rank == k,
        sum_dim,
        ambient_dim: ambient.dim(),
        intersection_dim: k,
        gram_rank,
    })
}

/// `h ∈ S_x ∩ t` for diagonal `x`: `α(h) ≠ 0` whenever `α(x) ≠ 0`.
pub fn cartan_membership(h: &LieElement, x: &LieElement) -> Result<bool> {
    if !h.matrix().is_diagonal() || !x.matrix().is_diagonal() {
        return Err(LieError::NonDiagonal);
    }
    let (hd, xd) = (h.matrix().diagonal(), x.matrix().diagonal());
    let n = hd.len();
    Ok((0..n).all(|i| (0..n).all(|j| xd[i] == xd[j] || hd[i] != hd[j])))
}

/// The natural slice at `x`, described by the `gl_{m_i}` decomposition
/// classes allowed on each eigenspace block of `x_s`.
#[derive(Clone, Debug)]
pub struct NaturalSliceDescriptor {
    pub x: LieElement,
    /// Blocks of `I`: eigenspace dimensions of `x_s`, ascending eigenvalue.
    pub levi: LeviSubset,
    pub eigenvalues: Vec<Rational>,
    pub jordan_types: Vec<Partition>,
    /// Each entry picks one `gl_{m_i}` label per block; listed iff the
    /// induced partition dominates the Jordan type of `x_n` on every block.
    pub pairs: Vec<Vec<ClassLabel>>,
    semisimple: RationalMatrix,
    basis: RationalMatrix,
    basis_inv: RationalMatrix,
}

/// Serializable `{I, pairs: [{J, orbits}]}` form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DescriptorDoc {
    #[serde(rename = "I")]
    pub i: Vec<usize>,
    pub pairs: Vec<PairDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairDoc {
    #[serde(rename = "J")]
    pub j: Vec<usize>,
    pub orbits: Vec<Partition>,
}

impl NaturalSliceDescriptor {
    pub fn to_doc(&self) -> DescriptorDoc {
        DescriptorDoc {
            i: self.levi.blocks().to_vec(),
            pairs: self
                .pairs
                .iter()
                .map(|tuple| PairDoc {
                    j: tuple.iter().flat_map(|l| l.pairs().iter().map(|p| p.size)).collect(),
                    orbits: tuple.iter().flat_map(|l| l.pairs().iter().map(|p| p.partition.clone())).collect(),
                })
                .collect(),
        }
    }

    /// `P^{-1} y P`, block diagonal for `y ∈ g_{x_s}`.
    fn to_blocks(&self, y: &RationalMatrix) -> Vec<RationalMatrix> {
        let z = &(&self.basis_inv * y) * &self.basis;
        self.levi.ranges().into_iter().map(|r| z.submatrix(r.clone(), r)).collect()
    }

    /// The `gl_{m_i}` label of each block, when `y` lies in `S_{x_s}`
    /// (commutes with `x_s`, blocks with pairwise disjoint spectra).
    pub fn block_labels(&self, y: &LieElement) -> Result<Option<Vec<ClassLabel>>> {
        let Some(blocks) = self.coprime_blocks(y)? else {
            return Ok(None);
        };
        let labels = blocks
            .into_iter()
            .map(|b| classify(&LieAlgebraSpec::gl(b.rows()).element(b)?))
            .collect::<Result<Vec<_>>>()?;
        Ok(Some(labels))
    }

    /// Descriptor-path membership. Works for any `y`: a listed label tuple is exactly one whose induced
    /// partitions dominate the Jordan types of `x_n`, and that condition only
    /// needs the induced partition of each block over the algebraic closure,
    /// so blocks with irrational spectrum are fine.
    pub fn contains_element(&self, y: &LieElement) -> Result<bool> {
        let Some(blocks) = self.coprime_blocks(y)? else {
            return Ok(false);
        };
        for (b, mu) in blocks.iter().zip(&self.jordan_types) {
            if !dominance_leq(mu, &geometric_induced_partition(b)?)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The blocks of `P^{-1} y P` when `y` commutes with `x_s` and the
    /// blocks have pairwise coprime characteristic polynomials.
    fn coprime_blocks(&self, y: &LieElement) -> Result<Option<Vec<RationalMatrix>>> {
        if y.algebra() != self.x.algebra() {
            return Err(LieError::MismatchedAlgebras(y.algebra().name(), self.x.algebra().name()));
        }
        if !y.matrix().commutator(&self.semisimple).is_zero() {
            return Ok(None);
        }
        let blocks = self.to_blocks(y.matrix());
        let polys = blocks.iter().map(char_poly).collect::<Result<Vec<_>>>()?;
        for i in 0..polys.len() {
            for j in i + 1..polys.len() {
                if polys[i].gcd(&polys[j]).degree() != Some(0) {
                    return Ok(None);
                }
            }
        }
        Ok(Some(blocks))
    }

    /// `g_{x_s}` in the ambient algebra.
    pub fn levi_subalgebra(&self) -> Subspace {
        centralizer_of_matrix(self.x.algebra(), &self.semisimple)
    }
}

impl Slice for NaturalSliceDescriptor {
    fn ambient(&self) -> LieAlgebraSpec {
        self.x.algebra()
    }

    fn contains(&self, y: &LieElement) -> Result<bool> {
        self.contains_element(y)
    }

    /// `S_x` is open in `g_{x_s}`.
    fn tangent_at(&self, _y: &LieElement) -> Result<Subspace> {
        Ok(self.levi_subalgebra())
    }
}

pub fn natural_slice(x: &LieElement) -> Result<NaturalSliceDescriptor> {
    let c = classify_detailed(x)?;
    let basis = eigenbasis(&c);
    let basis_inv = basis.inverse().expect("eigenbasis is a basis");
    let per_block: Vec<Vec<ClassLabel>> = c
        .multiplicities
        .iter()
        .zip(&c.jordan_types)
        .map(|(&m, mu)| {
            enumerate_classes(LieAlgebraSpec::gl(m))
                .into_iter()
                .filter(|l| dominance_leq(mu, &l.induced_partition()).expect("same total"))
                .collect()
        })
        .collect();
    let mut pairs: Vec<Vec<ClassLabel>> = vec![Vec::new()];
    for options in &per_block {
        pairs = pairs
            .iter()
            .flat_map(|prefix| {
                options.iter().map(move |o| {
                    let mut v = prefix.clone();
                    v.push(o.clone());
                    v
                })
            })
            .collect();
    }
    Ok(NaturalSliceDescriptor {
        x: x.clone(),
        levi: c.levi(),
        eigenvalues: c.eigenvalues.clone(),
        jordan_types: c.jordan_types.clone(),
        pairs,
        semisimple: c.jordan.semisimple.matrix().clone(),
        basis,
        basis_inv,
    })
}

/// Membership verdicts on both available paths.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MembershipReport {
    pub member: bool,
    /// `y ∈ g_x` and `[g,y] + g_x = g`; only for semisimple `x`.
    pub rank_test: Option<bool>,
}

/// `y ∈ S_x`, by the descriptor and (for semisimple `x`) by the rank test;
/// disagreement is an error.
pub fn membership_sx(y: &LieElement, x: &LieElement) -> Result<MembershipReport> {
    let desc = natural_slice(x)?;
    let member = desc.contains_element(y)?;
    let rank_test = if desc.x.matrix() == &desc.semisimple { Some(rank_membership(y, x)) } else { None };
    if let Some(r) = rank_test {
        if r != member {
            return Err(LieError::CrossCheckFailed(format!("descriptor says {member}, rank test says {r}")));
        }
    }
    Ok(MembershipReport { member, rank_test })
}

/// The rank criterion for semisimple `x`.
pub fn rank_membership(y: &LieElement, x: &LieElement) -> bool {
    let g_x = centralizer(x);
    g_x.contains(y.matrix()) && bracket_image(y).sum(&g_x).dim() == x.algebra().dim()
}

/// `S_{x,T} = S_x ∩ (e + g_f)`, cut out inside `g_{x_s}` by
/// `y - e ∈ (g_{x_s})_f`. For semisimple `x` the zero triple is used and
/// `S_{x,T} = S_x`.
#[derive(Clone, Debug)]
pub struct ComplementarySlice {
    pub natural: NaturalSliceDescriptor,
    pub triple: Option<Sl2Triple>,
    pub affine: AffineSlice,
}

impl Slice for ComplementarySlice {
    fn ambient(&self) -> LieAlgebraSpec {
        self.natural.x.algebra()
    }

    fn contains(&self, y: &LieElement) -> Result<bool> {
        Ok(self.affine.contains(y)? && self.natural.contains_element(y)?)
    }

    fn tangent_at(&self, _y: &LieElement) -> Result<Subspace> {
        Ok(self.affine.directions().clone())
    }
}

/// Derived algebra `[l, l]` of `l = g_{x_s}`, as a subspace of `gl_n`.
fn derived_levi(semisimple: &RationalMatrix) -> Subspace {
    let l = centralizer_of_matrix(LieAlgebraSpec::gl(semisimple.rows()), semisimple);
    bracket_span(&l, &l)
}

pub fn complementary_slice(x: &LieElement, triple: Option<&Sl2Triple>) -> Result<ComplementarySlice> {
    let natural = natural_slice(x)?;
    let ambient = x.algebra();
    let xn = x.sub(&ambient.element(natural.semisimple.clone())?)?;
    let levi = natural.levi_subalgebra();
    if xn.is_zero() {
        if let Some(t) = triple {
            if !t.is_zero() {
                return Err(LieError::InvalidTriple("x is semisimple; only the zero triple applies".into()));
            }
        }
        let affine = AffineSlice::new(ambient.zero(), levi)?;
        return Ok(ComplementarySlice { natural, triple: None, affine });
    }
    let derived = derived_levi(&natural.semisimple);
    let t = match triple {
        Some(t) => {
            let t = triple_in(t, ambient)?;
            if t.e != xn {
                return Err(LieError::InvalidTriple("e does not equal the nilpotent part of x".into()));
            }
            if !derived.contains(t.h.matrix()) || !derived.contains(t.f.matrix()) {
                return Err(LieError::InvalidTriple("triple is not inside [g_{x_s}, g_{x_s}]".into()));
            }
            t
        }
        None => jm_complete_in(&xn, &derived)?,
    };
    let directions = levi.intersection(&centralizer(&t.f));
    let affine = AffineSlice::new(t.e.clone(), directions)?;
    Ok(ComplementarySlice { natural, triple: Some(t), affine })
}

/// Try to move `y ∈ S_x` into `S_{x,T}` by a block-diagonal element of
/// `G_{x_s}`. Blocks where the triple vanishes need nothing; blocks where
/// `e` is regular nilpotent use the principal slice point (conjugate since
/// both are regular with the same characteristic polynomial). Other blocks
/// are not handled: `Ok(None)`.
pub fn saturate_into(cs: &ComplementarySlice, y: &LieElement) -> Result<Option<LieElement>> {
    let nat = &cs.natural;
    if !nat.contains_element(y)? {
        return Err(LieError::NotOnSlice);
    }
    let ys = nat.to_blocks(y.matrix());
    let (es, fs) = match &cs.triple {
        Some(t) => (nat.to_blocks(t.e.matrix()), nat.to_blocks(t.f.matrix())),
        None => {
            let zeros: Vec<RationalMatrix> = ys.iter().map(|b| RationalMatrix::zeros(b.rows(), b.rows())).collect();
            (zeros.clone(), zeros)
        }
    };
    let mut out = Vec::with_capacity(ys.len());
    for ((yb, eb), fb) in ys.iter().zip(&es).zip(&fs) {
        let m = yb.rows();
        if eb.is_zero() {
            out.push(yb.clone());
        } else if nilpotent_type(eb)? == Partition::regular(m) {
            if centralizer_of_matrix(LieAlgebraSpec::gl(m), yb).dim() != m {
                return Ok(None);
            }
            let point = principal_slice_point(eb, fb, true, &char_poly(yb)?)?;
            if rational_canonical_form(&point)? != rational_canonical_form(yb)? {
                return Err(LieError::CrossCheckFailed("slice point not conjugate to block".into()));
            }
            out.push(point);
        } else {
            return Ok(None);
        }
    }
    let z = &(&nat.basis * &RationalMatrix::block_diag(&out)) * &nat.basis_inv;
    let z = y.algebra().element(z)?;
    if !cs.contains(&z)? {
        return Err(LieError::CrossCheckFailed("saturated point left S_{x,T}".into()));
    }
    Ok(Some(z))
}

/// Restrict a subspace of `gl_n` to the ambient of `x`.
pub fn in_ambient(space: &Subspace, ambient: LieAlgebraSpec) -> Subspace {
    restrict(space, ambient)
}
