//! Example Hamiltonian spaces: coadjoint orbits of `GL_n`, the defining
//! representation of `Sp_{2n}`, and the cotangent groupoid of `GL_n`.
//! `g` and `g*` are identified through the trace form throughout.

use num_traits::Zero;
use rand::Rng;
use serde::Serialize;

use crate::classes::classify;
use crate::error::{LieError, Result};
use crate::lie::{bracket_image, centralizer, LieAlgebraSpec, LieElement};
use crate::linalg::rational::{frac, int};
use crate::linalg::{rational_canonical_form, Rational, RationalMatrix};
use crate::random::{random_invertible, rng, small_rational};
use crate::roots::LeviSubset;
use crate::slices::{poisson_slice_check, PoissonVerdict, Slice};

/// Spaces that the CLI and the class machinery can refer to by name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExampleSpace {
    CoadjointOrbit(CoadjointOrbitSpace),
    /// `T^*(G/P)` for the parabolic with Levi blocks `blocks`.
    CotangentFlag { algebra: LieAlgebraSpec, blocks: Vec<usize> },
    /// `Q^{2n}` with `Sp_{2n}` acting.
    SymplecticVector { n: usize },
}

/// The orbit through `base`; the moment map is the inclusion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoadjointOrbitSpace {
    pub base: LieElement,
}

impl CoadjointOrbitSpace {
    pub fn new(base: LieElement) -> Self {
        Self { base }
    }

    pub fn ambient(&self) -> LieAlgebraSpec {
        self.base.algebra()
    }

    pub fn dimension(&self) -> usize {
        bracket_image(&self.base).dim()
    }

    /// Same `GL_n(Q)`-orbit, decided by rational canonical forms.
    pub fn contains(&self, y: &LieElement) -> Result<bool> {
        if y.algebra() != self.ambient() {
            return Ok(false);
        }
        Ok(rational_canonical_form(y.matrix())? == rational_canonical_form(self.base.matrix())?)
    }

    pub fn moment(&self, p: &LieElement) -> Result<LieElement> {
        if !self.contains(p)? {
            return Err(LieError::Precondition("point is not on the orbit".into()));
        }
        Ok(p.clone())
    }

    /// The decomposition class of `μ(p)` for each sample; constant on an orbit.
    pub fn class_is_constant(&self, samples: &[LieElement]) -> Result<bool> {
        let base = classify(&self.base)?;
        for p in samples {
            if classify(&self.moment(p)?)? != base {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `O ∩ t` for a regular diagonal base point: the `n!` permuted diagonals,
/// each confirmed to lie on the orbit.
pub fn orbit_fiber_over_cartan(orbit: &CoadjointOrbitSpace) -> Result<Vec<LieElement>> {
    let m = orbit.base.matrix();
    if !m.is_diagonal() {
        return Err(LieError::NonDiagonal);
    }
    let ambient = orbit.ambient();
    let dim = centralizer(&orbit.base).dim();
    if dim != ambient.rank() {
        return Err(LieError::NotRegular { centralizer_dim: dim, rank: ambient.rank() });
    }
    let whole = LeviSubset::new(vec![ambient.n])?;
    let points = crate::roots::weyl_orbit(&m.diagonal(), &whole)?;
    let mut out = Vec::with_capacity(points.len());
    for d in points {
        let y = ambient.element(RationalMatrix::diag(&d))?;
        if !orbit.contains(&y)? {
            return Err(LieError::CrossCheckFailed("permuted diagonal left the orbit".into()));
        }
        out.push(y);
    }
    Ok(out)
}

/// `Q^{2n}` with `ω(u, v) = uᵀ J v`, `J = [[0, I], [-I, 0]]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymplecticVectorSpace {
    pub n: usize,
}

impl SymplecticVectorSpace {
    pub fn new(n: usize) -> Self {
        Self { n }
    }

    pub fn form(&self) -> RationalMatrix {
        symplectic_form(self.n)
    }

    pub fn omega(&self, u: &[Rational], v: &[Rational]) -> Rational {
        let jv = self.form().mul_vec(v);
        u.iter().zip(&jv).map(|(a, b)| a * b).sum()
    }

    pub fn moment(&self, v: &[Rational]) -> Result<RationalMatrix> {
        if v.len() != 2 * self.n {
            return Err(LieError::DimensionMismatch(format!("vector of length {} in dimension {}", v.len(), 2 * self.n)));
        }
        sp_moment(v)
    }
}

pub fn symplectic_form(n: usize) -> RationalMatrix {
    let mut j = RationalMatrix::zeros(2 * n, 2 * n);
    for a in 0..n {
        j[(a, a + n)] = int(1);
        j[(a + n, a)] = int(-1);
    }
    j
}

/// `ξᵀ J + J ξ = 0`.
pub fn in_sp(m: &RationalMatrix) -> bool {
    if !m.is_square() || m.rows() % 2 != 0 {
        return false;
    }
    let j = symplectic_form(m.rows() / 2);
    (&(&m.transpose() * &j) + &(&j * m)).is_zero()
}

/// `gᵀ J g = J`.
pub fn in_symplectic_group(g: &RationalMatrix) -> bool {
    if !g.is_square() || g.rows() % 2 != 0 {
        return false;
    }
    let j = symplectic_form(g.rows() / 2);
    &(&g.transpose() * &j) * g == j
}

/// Basis of `sp_{2n}` as a kernel of the defining linear equations.
pub fn sp_basis(n: usize) -> Vec<RationalMatrix> {
    sp_solve(n, &[])
}

/// Elements of `sp_{2n}` commuting with every matrix in `with`.
fn sp_solve(n: usize, with: &[&RationalMatrix]) -> Vec<RationalMatrix> {
    let d = 2 * n;
    let j = symplectic_form(n);
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let flat = |f: &dyn Fn(&RationalMatrix) -> RationalMatrix| -> Vec<Vec<Rational>> {
        let images: Vec<Vec<Rational>> = (0..d * d).map(|k| f(&RationalMatrix::unit(d, k / d, k % d)).into_entries()).collect();
        RationalMatrix::from_columns(d * d, &images).row_vecs()
    };
    rows.extend(flat(&|x| &(&x.transpose() * &j) + &(&j * x)));
    for w in with {
        rows.extend(flat(&|x| x.commutator(w)));
    }
    crate::lie::subspace::solve_homogeneous(d * d, rows)
        .into_iter()
        .map(|v| RationalMatrix::from_flat(d, v))
        .collect()
}

/// `μ(v) = -½ v vᵀ J`, so that `tr(μ(v) ξ) = ½ ω(ξv, v)` for `ξ ∈ sp_{2n}`.
pub fn sp_moment(v: &[Rational]) -> Result<RationalMatrix> {
    if v.len() % 2 != 0 {
        return Err(LieError::DimensionMismatch(format!("odd length {}", v.len())));
    }
    let n = v.len() / 2;
    let col = RationalMatrix::column(v.to_vec());
    let outer = &col * &col.transpose();
    Ok((&outer * &symplectic_form(n)).scale(&frac(-1, 2)))
}

/// Symbolic proof that `μ(v) = 0` forces `v = 0`: each entry of `μ` is a
/// quadratic form in `v`, recovered exactly by polarization; for every
/// coordinate `a` some entry is a nonzero multiple of `v_a²`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KernelCertificate {
    pub n: usize,
    pub witnesses: Vec<SquareWitness>,
}

/// `μ(v)[entry] = coefficient · v_coordinate²`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SquareWitness {
    pub coordinate: usize,
    pub entry: (usize, usize),
    #[serde(serialize_with = "crate::linalg::rational::serialize")]
    pub coefficient: Rational,
}

impl KernelCertificate {
    pub fn complete(&self) -> bool {
        self.witnesses.len() == 2 * self.n
    }
}

pub fn sp_kernel_certificate(n: usize) -> Result<KernelCertificate> {
    let d = 2 * n;
    let e = |k: usize| -> Vec<Rational> { (0..d).map(|i| if i == k { int(1) } else { int(0) }).collect() };
    // forms[(r,c)] is the Gram matrix of the quadratic form in entry (r, c)
    let mut forms = vec![RationalMatrix::zeros(d, d); d * d];
    let diag: Vec<RationalMatrix> = (0..d).map(|k| sp_moment(&e(k))).collect::<Result<_>>()?;
    for k in 0..d {
        for l in 0..d {
            let sum: Vec<Rational> = e(k).iter().zip(e(l)).map(|(a, b)| a + b).collect();
            let polar = &(&sp_moment(&sum)? - &diag[k]) - &diag[l];
            for (idx, val) in polar.entries().iter().enumerate() {
                // Q(e_k + e_l) - Q(e_k) - Q(e_l) = 2 B(e_k, e_l)
                forms[idx][(k, l)] = if k == l { diag[k].entries()[idx].clone() } else { val / int(2) };
            }
        }
    }
    let mut witnesses = Vec::new();
    for a in 0..d {
        let found = forms.iter().enumerate().find_map(|(idx, q)| {
            let c = q[(a, a)].clone();
            let pure = !c.is_zero() && q.entries().iter().enumerate().all(|(i, v)| i == a * d + a || v.is_zero());
            pure.then(|| SquareWitness { coordinate: a, entry: (idx / d, idx % d), coefficient: c })
        });
        match found {
            Some(w) => witnesses.push(w),
            None => return Err(LieError::CrossCheckFailed(format!("no pure square for coordinate {a}"))),
        }
    }
    Ok(KernelCertificate { n, witnesses })
}

/// `I + c u uᵀ J`, a symplectic transvection.
pub fn transvection(u: &[Rational], c: &Rational) -> RationalMatrix {
    let d = u.len();
    let col = RationalMatrix::column(u.to_vec());
    let t = &(&col * &col.transpose()) * &symplectic_form(d / 2);
    &RationalMatrix::identity(d) + &t.scale(c)
}

/// A product of a few random transvections.
pub fn random_symplectic<R: Rng>(rng: &mut R, n: usize) -> RationalMatrix {
    let d = 2 * n;
    let mut g = RationalMatrix::identity(d);
    for _ in 0..3 {
        let u: Vec<Rational> = (0..d).map(|_| small_rational(rng, 2)).collect();
        g = &g * &transvection(&u, &small_rational(rng, 2));
    }
    g
}

/// For `x = μ(v) ≠ 0`: `n(x)` (here `sp_x`, as `x` is nilpotent) kills the
/// fibre sample `{v, -v}`, while `-I` fixes `x` and moves `v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrivialActionReport {
    pub n: usize,
    pub n_x_dim: usize,
    pub fiber_killed: bool,
    pub minus_identity_fixes_x: bool,
    pub minus_identity_moves_v: bool,
}

impl TrivialActionReport {
    pub fn ok(&self) -> bool {
        self.fiber_killed && self.minus_identity_fixes_x && self.minus_identity_moves_v
    }
}

pub fn sp_trivial_action(v: &[Rational]) -> Result<TrivialActionReport> {
    let x = sp_moment(v)?;
    if x.is_zero() {
        return Err(LieError::ZeroElement);
    }
    let n = v.len() / 2;
    let n_x = sp_solve(n, &[&x]);
    let minus_v: Vec<Rational> = v.iter().map(|a| -a).collect();
    let fiber_killed = n_x
        .iter()
        .all(|xi| [v, &minus_v[..]].iter().all(|w| xi.mul_vec(w).iter().all(Zero::is_zero)));
    let minus_i = RationalMatrix::identity(2 * n).scale(&int(-1));
    let moved: Vec<Rational> = minus_i.mul_vec(v);
    Ok(TrivialActionReport {
        n,
        n_x_dim: n_x.len(),
        fiber_killed,
        minus_identity_fixes_x: &(&minus_i * &x) * &minus_i == x && sp_moment(&moved)? == x,
        minus_identity_moves_v: moved != v,
    })
}

/// `T^*GL_n ≅ GL_n × gl_n` (left trivialization), over `gl_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CotangentGroupoid {
    pub n: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub g: RationalMatrix,
    pub xi: RationalMatrix,
}

impl CotangentGroupoid {
    pub fn new(n: usize) -> Self {
        Self { n }
    }

    pub fn arrow(&self, g: RationalMatrix, xi: RationalMatrix) -> Result<Arrow> {
        if g.rows() != self.n || xi.rows() != self.n || !g.is_square() || !xi.is_square() {
            return Err(LieError::DimensionMismatch(format!("arrow of T*GL_{}", self.n)));
        }
        if g.determinant()?.is_zero() {
            return Err(LieError::Precondition("g is singular".into()));
        }
        Ok(Arrow { g, xi })
    }

    pub fn source(&self, a: &Arrow) -> RationalMatrix {
        a.xi.clone()
    }

    pub fn target(&self, a: &Arrow) -> RationalMatrix {
        &(&a.g * &a.xi) * &a.g.inverse().expect("invertible")
    }

    pub fn unit(&self, x: &RationalMatrix) -> Arrow {
        Arrow { g: RationalMatrix::identity(self.n), xi: x.clone() }
    }

    /// `(g, ξ)(h, η) = (gh, η)`, defined when `s(g, ξ) = t(h, η)`.
    pub fn compose(&self, a: &Arrow, b: &Arrow) -> Option<Arrow> {
        (self.source(a) == self.target(b)).then(|| Arrow { g: &a.g * &b.g, xi: b.xi.clone() })
    }

    pub fn inverse(&self, a: &Arrow) -> Arrow {
        Arrow { g: a.g.inverse().expect("invertible"), xi: self.target(a) }
    }

    /// `(h', η)` with `t(h', η) = ξ`: `η = h'^{-1} ξ h'`.
    fn arrow_into<R: Rng>(&self, rng: &mut R, xi: &RationalMatrix) -> Arrow {
        let h = random_invertible(rng, self.n);
        let h_inv = h.inverse().expect("invertible");
        Arrow { xi: &(&h_inv * xi) * &h, g: h }
    }
}

/// Pass counts per axiom (i)–(vi).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupoidReport {
    pub n: usize,
    pub samples: usize,
    pub passed: [usize; 6],
}

impl GroupoidReport {
    pub fn all_ok(&self) -> bool {
        self.passed.iter().all(|&p| p == self.samples)
    }
}

/// Seeded composable triples `(a, b, c)`; every axiom is tested exactly on each.
pub fn groupoid_axiom_suite(gpd: &CotangentGroupoid, seed: u64, samples: usize) -> GroupoidReport {
    let mut rng = rng(seed);
    let n = gpd.n;
    let mut passed = [0; 6];
    for _ in 0..samples {
        let xi: Vec<Rational> = (0..n * n).map(|_| small_rational(&mut rng, 3)).collect();
        let a = Arrow { g: random_invertible(&mut rng, n), xi: RationalMatrix::from_flat(n, xi) };
        let b = gpd.arrow_into(&mut rng, &gpd.source(&a));
        let c = gpd.arrow_into(&mut rng, &gpd.source(&b));
        let ab = gpd.compose(&a, &b).expect("composable by construction");
        let bc = gpd.compose(&b, &c).expect("composable by construction");
        let checks = [
            gpd.source(&ab) == gpd.source(&b) && gpd.target(&ab) == gpd.target(&a),
            gpd.compose(&ab, &c) == gpd.compose(&a, &bc),
            {
                let u = gpd.unit(&a.xi);
                gpd.source(&u) == a.xi && gpd.target(&u) == a.xi
            },
            gpd.compose(&gpd.unit(&gpd.target(&a)), &a).as_ref() == Some(&a)
                && gpd.compose(&a, &gpd.unit(&gpd.source(&a))).as_ref() == Some(&a),
            {
                let inv = gpd.inverse(&a);
                gpd.source(&inv) == gpd.target(&a) && gpd.target(&inv) == gpd.source(&a)
            },
            {
                let inv = gpd.inverse(&a);
                gpd.compose(&a, &inv) == Some(gpd.unit(&gpd.target(&a)))
                    && gpd.compose(&inv, &a) == Some(gpd.unit(&gpd.source(&a)))
            },
        ];
        for (p, ok) in passed.iter_mut().zip(checks) {
            *p += ok as usize;
        }
    }
    GroupoidReport { n, samples, passed }
}

/// Tangent dimensions at `(1, x)` and `x` for the slice theorem on an orbit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TangentReport {
    /// `dim T G_S = dim g + dim T S` (`G_S = s^{-1}(S)`).
    pub g_s: usize,
    /// `dim T(μ^{-1}(S)) = dim([g,x] ∩ T S)`.
    pub mu_inverse: usize,
    /// `dim T G_S^S = dim T S + dim{u : [u,x] ∈ T S}`.
    pub g_s_s: usize,
    pub orbit_dim: usize,
    pub closes: bool,
    pub poisson: PoissonVerdict,
}

impl TangentReport {
    pub fn ok(&self) -> bool {
        self.closes && self.poisson.ok()
    }
}

pub fn slice_theorem_tangent_check(space: &CoadjointOrbitSpace, slice: &dyn Slice, x: &LieElement) -> Result<TangentReport> {
    if !space.contains(x)? {
        return Err(LieError::Precondition("x is not on the orbit".into()));
    }
    if !slice.contains(x)? {
        return Err(LieError::NotOnSlice);
    }
    let g = x.algebra();
    let ts = slice.tangent_at(x)?;
    let orbit = bracket_image(x);
    // {u : [u,x] ∈ T S} = ker of g -> g/T S, u -> [u,x]
    let quotient = ts.annihilator();
    let basis = g.basis();
    let cols: Vec<Vec<Rational>> = basis
        .iter()
        .map(|u| {
            let bu = u.commutator(x.matrix());
            quotient.basis().iter().map(|a| (a * &bu).trace()).collect()
        })
        .collect();
    let preimage = if quotient.dim() == 0 {
        g.dim()
    } else {
        g.dim() - RationalMatrix::from_columns(quotient.dim(), &cols).rank()
    };
    let g_s = g.dim() + ts.dim();
    let mu_inverse = orbit.intersection(&ts).dim();
    let g_s_s = ts.dim() + preimage;
    let orbit_dim = space.dimension();
    let poisson = poisson_slice_check(slice, x)?;
    Ok(TangentReport { g_s, mu_inverse, g_s_s, orbit_dim, closes: g_s + mu_inverse == g_s_s + orbit_dim, poisson })
}
