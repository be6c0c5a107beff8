//! Decomposition classes of `gl_n` / `sl_n`: labels, classification of
//! elements with rational spectrum, dimensions, enumeration and the
//! tangent-space identities behind them.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{LieError, Result};
use crate::hamiltonian::ExampleSpace;
use crate::lie::subspace::centralizer_of_matrix;
use crate::lie::{bracket_image, bracket_span, jordan_decompose, JordanDecomposition, LieAlgebraSpec, LieElement, Subspace};
use crate::linalg::rational::{frac, int};
use crate::linalg::{char_poly, invariant_factors, rational_canonical_form, Rational, RationalMatrix, RationalPolynomial};
use crate::roots::{richardson, LeviSubset, Partition};

/// One Levi block together with the nilpotent orbit on it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ClassPair {
    pub size: usize,
    pub partition: Partition,
}

/// Label of a decomposition class: a multiset of (block size, partition),
/// stored sorted by size then partition, both decreasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ClassLabel {
    pub algebra: LieAlgebraSpec,
    pairs: Vec<ClassPair>,
}

impl ClassLabel {
    pub fn new(algebra: LieAlgebraSpec, mut pairs: Vec<ClassPair>) -> Result<Self> {
        for p in &pairs {
            if p.partition.total() != p.size || p.size == 0 {
                return Err(LieError::InvalidLabel(format!("{} does not partition {}", p.partition, p.size)));
            }
        }
        let total: usize = pairs.iter().map(|p| p.size).sum();
        if total != algebra.n {
            return Err(LieError::InvalidLabel(format!("block sizes sum to {total}, expected {}", algebra.n)));
        }
        pairs.sort_by(|a, b| b.cmp(a));
        Ok(Self { algebra, pairs })
    }

    pub fn from_parts(algebra: LieAlgebraSpec, parts: &[(usize, &[usize])]) -> Result<Self> {
        let pairs = parts
            .iter()
            .map(|&(size, p)| Ok(ClassPair { size, partition: Partition::new(p.to_vec())? }))
            .collect::<Result<Vec<_>>>()?;
        Self::new(algebra, pairs)
    }

    pub fn pairs(&self) -> &[ClassPair] {
        &self.pairs
    }

    pub fn num_blocks(&self) -> usize {
        self.pairs.len()
    }

    pub fn levi(&self) -> LeviSubset {
        LeviSubset::new(self.pairs.iter().map(|p| p.size).collect()).expect("nonempty label")
    }

    pub fn is_regular_semisimple(&self) -> bool {
        self.pairs.iter().all(|p| p.size == 1)
    }

    /// Partition induced from the Levi orbit (componentwise sum).
    pub fn induced_partition(&self) -> Partition {
        self.pairs.iter().fold(Partition::regular(0), |acc, p| acc.add(&p.partition))
    }

    /// Block `i` carries `c_i I + x_{λ_i}` with distinct scalars `c_i`
    /// (shifted to be traceless in `sl_n`).
    pub fn representative(&self) -> LieElement {
        let n = self.algebra.n;
        let mut scalars: Vec<Rational> = (0..self.pairs.len()).map(|i| int(i as i64)).collect();
        if !self.algebra.is_gl() {
            let weighted: i64 = self.pairs.iter().enumerate().map(|(i, p)| (i * p.size) as i64).sum();
            let shift = frac(weighted, n as i64);
            for s in &mut scalars {
                *s -= &shift;
            }
        }
        let blocks: Vec<RationalMatrix> = self
            .pairs
            .iter()
            .zip(&scalars)
            .map(|(p, c)| &p.partition.nilpotent_representative() + &RationalMatrix::identity(p.size).scale(c))
            .collect();
        self.algebra.element(RationalMatrix::block_diag(&blocks)).expect("representative lies in the algebra")
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.pairs.iter().map(|p| format!("({},{})", p.size, p.partition)).collect();
        write!(f, "{}{{{}}}", self.algebra, s.join(","))
    }
}

/// Induced partition of the decomposition class of `m` over the algebraic
/// closure: the sum of the Jordan types at every eigenvalue. Needs no roots,
/// only a coprime base of the invariant factors.
pub fn geometric_induced_partition(m: &RationalMatrix) -> Result<Partition> {
    let factors: Vec<RationalPolynomial> =
        invariant_factors(m)?.into_iter().filter(|f| f.degree().is_some_and(|d| d > 0)).collect();
    // level[i][e-1]: squarefree polynomial of the roots with multiplicity >= e in factor i
    let mut levels: Vec<Vec<RationalPolynomial>> = Vec::new();
    for f in &factors {
        let mut row = Vec::new();
        let mut h = f.clone();
        while h.degree().is_some_and(|d| d > 0) {
            let r = h.squarefree_part()?;
            h = h.div_rem(&r)?.0;
            row.push(r);
        }
        levels.push(row);
    }
    let Some(top) = levels.last().and_then(|row| row.first()).cloned() else {
        return Ok(Partition::regular(0));
    };
    let mut base = vec![top];
    for q in levels.iter().flatten() {
        base = base
            .into_iter()
            .flat_map(|p| {
                let g = p.gcd(q);
                let rest = p.div_rem(&g).expect("nonzero divisor").0;
                [g, rest]
            })
            .filter(|p| p.degree().is_some_and(|d| d > 0))
            .collect();
    }
    let mut total = Partition::regular(0);
    for p in &base {
        let jordan = Partition::from_unsorted(
            levels.iter().map(|row| row.iter().take_while(|r| p.divides(r)).count()).filter(|&c| c > 0).collect(),
        );
        for _ in 0..p.degree().unwrap_or(0) {
            total = total.add(&jordan);
        }
    }
    Ok(total)
}

/// `dim [g,x] + dim z(l)` for any representative `x`.
pub fn class_dimension(label: &ClassLabel) -> Result<usize> {
    let n = label.algebra.n;
    let centralizer: usize = label.pairs.iter().map(|p| p.partition.centralizer_dim()).sum();
    let gl = n * n - centralizer + label.num_blocks();
    Ok(if label.algebra.is_gl() { gl } else { gl - 1 })
}

/// Every label of the algebra, in a fixed order.
pub fn enumerate_classes(algebra: LieAlgebraSpec) -> Vec<ClassLabel> {
    let n = algebra.n;
    let mut types: Vec<ClassPair> = (1..=n)
        .flat_map(|k| Partition::all(k).into_iter().map(move |p| ClassPair { size: k, partition: p }))
        .collect();
    types.sort_by(|a, b| b.cmp(a));
    fn rec(types: &[ClassPair], start: usize, rest: usize, cur: &mut Vec<ClassPair>, out: &mut Vec<Vec<ClassPair>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..types.len() {
            if types[i].size <= rest {
                cur.push(types[i].clone());
                rec(types, i, rest - types[i].size, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(&types, 0, n, &mut Vec::new(), &mut out);
    out.into_iter().map(|pairs| ClassLabel::new(algebra, pairs).expect("valid by construction")).collect()
}

/// Jordan data of an element with rational spectrum.
#[derive(Clone, Debug)]
pub struct Classification {
    pub label: ClassLabel,
    /// Distinct eigenvalues of `x_s`, ascending.
    pub eigenvalues: Vec<Rational>,
    pub multiplicities: Vec<usize>,
    /// Jordan type of `x_n` on each eigenspace, same order.
    pub jordan_types: Vec<Partition>,
    pub jordan: JordanDecomposition,
}

impl Classification {
    /// The Levi `g_{x_s}` in eigenvalue order.
    pub fn levi(&self) -> LeviSubset {
        LeviSubset::new(self.multiplicities.clone()).expect("nonempty")
    }
}

pub fn classify(x: &LieElement) -> Result<ClassLabel> {
    Ok(classify_detailed(x)?.label)
}

pub fn classify_detailed(x: &LieElement) -> Result<Classification> {
    let jordan = jordan_decompose(x)?;
    let m = x.matrix();
    let n = x.n();
    let (eigenvalues, rest) = char_poly(m)?.squarefree_part()?.rational_roots()?;
    if rest.degree() != Some(0) {
        return Err(LieError::IrrationalSpectrum { factor: rest.to_string() });
    }
    let mut multiplicities = Vec::new();
    let mut jordan_types = Vec::new();
    for c in &eigenvalues {
        let shifted = m - &RationalMatrix::identity(n).scale(c);
        // blocks of size >= k on this eigenspace: rank((x-c)^{k-1}) - rank((x-c)^k)
        let mut ranks = vec![n];
        let mut pow = RationalMatrix::identity(n);
        loop {
            pow = &pow * &shifted;
            let r = pow.rank();
            if r == *ranks.last().unwrap() {
                break;
            }
            ranks.push(r);
        }
        let transpose: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
        let lambda = Partition::new(transpose).expect("rank drops decrease").transpose();
        multiplicities.push(lambda.total());
        jordan_types.push(lambda);
    }
    let pairs = multiplicities
        .iter()
        .zip(&jordan_types)
        .map(|(&size, p)| ClassPair { size, partition: p.clone() })
        .collect();
    let label = ClassLabel::new(x.algebra(), pairs)?;
    Ok(Classification { label, eigenvalues, multiplicities, jordan_types, jordan })
}

/// Columns: bases of the eigenspaces of `x_s` in ascending eigenvalue
/// order, so `P^{-1} x P` is block diagonal.
pub fn eigenbasis(c: &Classification) -> RationalMatrix {
    let s = c.jordan.semisimple.matrix();
    let n = s.rows();
    let mut cols = Vec::with_capacity(n);
    for ev in &c.eigenvalues {
        cols.extend((s - &RationalMatrix::identity(n).scale(ev)).kernel_vectors());
    }
    RationalMatrix::from_columns(n, &cols)
}

/// `h` in `z(l)` lies in `z(l)_gen` iff distinct blocks carry distinct scalars.
pub fn generic_locus_member(h: &LieElement, levi: &LeviSubset) -> Result<bool> {
    let scalars = center_scalars(h.matrix(), levi)?;
    let mut sorted = scalars.clone();
    sorted.sort();
    sorted.dedup();
    Ok(sorted.len() == scalars.len())
}

/// The scalar on each block, erroring if `h` is not in `z(l)`.
fn center_scalars(h: &RationalMatrix, levi: &LeviSubset) -> Result<Vec<Rational>> {
    if levi.n() != h.rows() {
        return Err(LieError::DimensionMismatch(format!("Levi of gl_{} for a {}x{} matrix", levi.n(), h.rows(), h.cols())));
    }
    if !h.is_diagonal() {
        return Err(LieError::NotInCenter("not diagonal".into()));
    }
    let d = h.diagonal();
    levi.ranges()
        .into_iter()
        .map(|r| {
            let c = d[r.start].clone();
            if d[r].iter().all(|v| *v == c) {
                Ok(c)
            } else {
                Err(LieError::NotInCenter("not constant on a block".into()))
            }
        })
        .collect()
}

/// Jordan type of a nilpotent matrix, from ranks of its powers.
pub fn nilpotent_type(e: &RationalMatrix) -> Result<Partition> {
    if !e.is_nilpotent() {
        return Err(LieError::NotNilpotent);
    }
    let mut ranks = vec![e.rows()];
    let mut pow = RationalMatrix::identity(e.rows());
    while *ranks.last().unwrap() > 0 {
        pow = &pow * e;
        ranks.push(pow.rank());
    }
    let transpose: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).filter(|&c| c > 0).collect();
    Ok(Partition::new(transpose)?.transpose())
}

/// Is `e + y` conjugate to `e + x`? Answered by the block-permutation model
/// of `Γ` (permute blocks carrying equal (size, partition)), and checked
/// against equality of rational canonical forms.
pub fn orbit_equal_via_gamma(e: &LieElement, x: &LieElement, y: &LieElement, levi: &LeviSubset) -> Result<bool> {
    let ranges = levi.ranges();
    let em = e.matrix();
    let block_of = levi.block_of();
    for i in 0..em.rows() {
        for j in 0..em.cols() {
            if block_of[i] != block_of[j] && !em[(i, j)].is_zero() {
                return Err(LieError::Precondition("e is not in the Levi".into()));
            }
        }
    }
    let types = ranges
        .iter()
        .map(|r| nilpotent_type(&em.submatrix(r.clone(), r.clone())))
        .collect::<Result<Vec<_>>>()?;
    if !generic_locus_member(x, levi)? || !generic_locus_member(y, levi)? {
        return Err(LieError::Precondition("x and y must lie in z(l)_gen".into()));
    }
    let tag = |s: Vec<Rational>| {
        let mut v: Vec<(usize, Partition, Rational)> =
            levi.blocks().iter().zip(&types).zip(s).map(|((&b, p), c)| (b, p.clone(), c)).collect();
        v.sort();
        v
    };
    let gamma = tag(center_scalars(x.matrix(), levi)?) == tag(center_scalars(y.matrix(), levi)?);
    let canonical = rational_canonical_form(&(em + x.matrix()))? == rational_canonical_form(&(em + y.matrix()))?;
    if gamma != canonical {
        return Err(LieError::CrossCheckFailed(format!("Γ model says {gamma}, canonical forms say {canonical}")));
    }
    Ok(gamma)
}

/// Intersect a subspace of `gl_n` with `ambient` and relabel it.
pub(crate) fn restrict(space: &Subspace, ambient: LieAlgebraSpec) -> Subspace {
    if ambient.is_gl() {
        return space.reinterpret(ambient).expect("gl contains everything");
    }
    let traceless = Subspace::span(space.ambient(), ambient.basis());
    space.intersection(&traceless).reinterpret(ambient).expect("traceless part lies in sl")
}

/// `z(l)` for `l = g_{x_s}`: polynomials in `x_s`, cut down to the ambient.
pub fn levi_center(c: &Classification) -> Subspace {
    let s = c.jordan.semisimple.matrix();
    let n = s.rows();
    let gl = LieAlgebraSpec::gl(n);
    let powers = (0..c.eigenvalues.len()).map(|k| s.pow(k as u32));
    restrict(&Subspace::span(gl, powers), c.label.algebra)
}

/// Tangent space `[g, x] + z(l)` to the decomposition class at `x`.
pub fn class_tangent(x: &LieElement) -> Result<Subspace> {
    let c = classify_detailed(x)?;
    Ok(bracket_image(x).sum(&levi_center(&c)))
}

/// Trace-form annihilator of the class tangent space.
pub fn class_perp(x: &LieElement) -> Result<Subspace> {
    Ok(class_tangent(x)?.annihilator())
}

/// `n(x)`: centralizer of `x_n` in the derived algebra `[l, l]` of
/// `l = g_{x_s}`, with `[l, l]` built from brackets of basis pairs.
pub fn derived_levi_centralizer(x: &LieElement) -> Result<Subspace> {
    let jd = jordan_decompose(x)?;
    let n = x.n();
    let gl = LieAlgebraSpec::gl(n);
    let l = centralizer_of_matrix(gl, jd.semisimple.matrix());
    let derived = bracket_span(&l, &l);
    let n_x = derived.intersection(&centralizer_of_matrix(gl, jd.nilpotent.matrix()));
    Ok(restrict(&n_x, x.algebra()))
}

/// Label of the principal decomposition class of an example space, or the
/// tag of the symplectic example (outside type A).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PrincipalClass {
    Label { label: ClassLabel },
    /// `C^{2n}` under `Sp_{2n}`: the closure of the minimal nilpotent orbit.
    SpMinimalOrbit { n: usize },
}

pub fn principal_class(space: &ExampleSpace) -> Result<PrincipalClass> {
    match space {
        ExampleSpace::CoadjointOrbit(orbit) => Ok(PrincipalClass::Label { label: classify(&orbit.base)? }),
        ExampleSpace::CotangentFlag { algebra, blocks } => {
            let r = richardson(blocks)?;
            if r.total() != algebra.n {
                return Err(LieError::InvalidPartition(format!("blocks {blocks:?} do not fill {algebra}")));
            }
            let label = ClassLabel::new(*algebra, vec![ClassPair { size: algebra.n, partition: r }])?;
            Ok(PrincipalClass::Label { label })
        }
        ExampleSpace::SymplecticVector { n } => Ok(PrincipalClass::SpMinimalOrbit { n: *n }),
    }
}
