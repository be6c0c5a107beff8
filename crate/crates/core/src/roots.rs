//! Type-A combinatorics: partitions, dominance, Levi subsets (compositions),
//! root systems, Weyl group orbits and Lusztig-Spaltenstein induction.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{LieError, Result};
use crate::linalg::{Rational, RationalMatrix};

/// Weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validating constructor: parts must be positive and weakly decreasing.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(LieError::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(LieError::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Self { parts })
    }

    /// Sort (and drop zeros) instead of rejecting.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    /// `(1, ..., 1)`: the zero orbit.
    pub fn trivial(n: usize) -> Self {
        Self { parts: vec![1; n] }
    }

    /// `(n)`: the regular orbit.
    pub fn regular(n: usize) -> Self {
        Self { parts: if n == 0 { vec![] } else { vec![n] } }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn transpose(&self) -> Self {
        let max = self.parts.first().copied().unwrap_or(0);
        Self { parts: (1..=max).map(|i| self.parts.iter().filter(|&&p| p >= i).count()).collect() }
    }

    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// gcd of the parts (0 for the empty partition).
    pub fn gcd(&self) -> usize {
        self.parts.iter().fold(0, |g, &p| num_integer::gcd(g, p))
    }

    /// Dimension of the centralizer of `x_λ` in `gl_m`: `sum (λ'_i)^2 = sum (2i-1) λ_i`.
    pub fn centralizer_dim(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, &c)| (2 * i + 1) * c).sum()
    }

    /// `x_λ`: Jordan blocks with ones on the superdiagonal, sizes in
    /// decreasing order.
    pub fn nilpotent_representative(&self) -> RationalMatrix {
        let n = self.total();
        let mut m = RationalMatrix::zeros(n, n);
        let mut start = 0;
        for &p in &self.parts {
            for i in start..start + p - 1 {
                m[(i, i + 1)] = crate::linalg::rational::one();
            }
            start += p;
        }
        m
    }

    /// All partitions of `n`, lexicographically decreasing.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: prefix.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                prefix.push(p);
                rec(rest - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Componentwise sum (zero padded), as used by induction.
    pub fn add(&self, other: &Partition) -> Partition {
        let len = self.len().max(other.len());
        Partition::from_unsorted((0..len).map(|i| self.part(i) + other.part(i)).collect())
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = LieError;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Dominance order: every partial sum of `a` is at most that of `b`.
pub fn dominance_leq(a: &Partition, b: &Partition) -> Result<bool> {
    if a.total() != b.total() {
        return Err(LieError::InvalidPartition(format!("{a} and {b} have different totals")));
    }
    let len = a.len().max(b.len());
    let (mut sa, mut sb) = (0, 0);
    for i in 0..len {
        sa += a.part(i);
        sb += b.part(i);
        if sa > sb {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Dimension of the `GL_m`-orbit of `x_λ`.
pub fn orbit_dimension(lambda: &Partition, m: usize) -> Result<usize> {
    if lambda.total() != m {
        return Err(LieError::InvalidPartition(format!("{lambda} does not partition {m}")));
    }
    Ok(m * m - lambda.centralizer_dim())
}

/// Ordered block sizes of a standard Levi subalgebra of `gl_n`; equivalently
/// the set `I` of simple roots `α_i` not separating two blocks.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct LeviSubset {
    blocks: Vec<usize>,
}

impl LeviSubset {
    pub fn new(blocks: Vec<usize>) -> Result<Self> {
        if blocks.is_empty() || blocks.iter().any(|&b| b == 0) {
            return Err(LieError::InvalidPartition(format!("{blocks:?} is not a composition")));
        }
        Ok(Self { blocks })
    }

    /// From a subset of simple roots `{1..n-1}` (1-based `α_i`).
    pub fn from_simple_roots(n: usize, simple: &[usize]) -> Result<Self> {
        if simple.iter().any(|&i| i == 0 || i >= n) {
            return Err(LieError::InvalidPartition(format!("simple roots {simple:?} out of range for n = {n}")));
        }
        let mut blocks = Vec::new();
        let mut size = 1;
        for i in 1..n {
            if simple.contains(&i) {
                size += 1;
            } else {
                blocks.push(size);
                size = 1;
            }
        }
        blocks.push(size);
        Self::new(blocks)
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().sum()
    }

    /// Simple roots (1-based) inside the Levi.
    pub fn simple_roots(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut start = 0;
        for &b in &self.blocks {
            out.extend(start + 1..start + b);
            start += b;
        }
        out
    }

    /// Index ranges of the blocks.
    pub fn ranges(&self) -> Vec<std::ops::Range<usize>> {
        let mut start = 0;
        self.blocks
            .iter()
            .map(|&b| {
                let r = start..start + b;
                start += b;
                r
            })
            .collect()
    }

    /// Block index of each coordinate.
    pub fn block_of(&self) -> Vec<usize> {
        self.blocks.iter().enumerate().flat_map(|(i, &b)| std::iter::repeat(i).take(b)).collect()
    }

    /// `dim u(p) = (n^2 - sum n_i^2) / 2` for any parabolic with this Levi.
    pub fn nilradical_dim(&self) -> usize {
        let n = self.n();
        (n * n - self.blocks.iter().map(|b| b * b).sum::<usize>()) / 2
    }

    /// Block sizes sorted decreasingly, the conjugacy-class label.
    pub fn sorted(&self) -> Partition {
        Partition::from_unsorted(self.blocks.clone())
    }

    /// All compositions of `n`.
    pub fn all(n: usize) -> Vec<LeviSubset> {
        (0u64..1 << n.saturating_sub(1))
            .map(|mask| {
                let simple: Vec<usize> = (1..n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
                LeviSubset::from_simple_roots(n, &simple).expect("in range")
            })
            .collect()
    }
}

impl TryFrom<Vec<usize>> for LeviSubset {
    type Error = LieError;
    fn try_from(blocks: Vec<usize>) -> Result<Self> {
        LeviSubset::new(blocks)
    }
}

impl From<LeviSubset> for Vec<usize> {
    fn from(l: LeviSubset) -> Vec<usize> {
        l.blocks
    }
}

/// Roots `e_i - e_j` of `gl_n` (0-based pairs `(i, j)`, `i != j`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RootSystemA {
    pub n: usize,
}

impl RootSystemA {
    pub fn new(n: usize) -> Self {
        Self { n }
    }

    pub fn simple_roots(&self) -> Vec<(usize, usize)> {
        (0..self.n.saturating_sub(1)).map(|i| (i, i + 1)).collect()
    }

    pub fn positive_roots(&self) -> Vec<(usize, usize)> {
        (0..self.n).flat_map(|i| (i + 1..self.n).map(move |j| (i, j))).collect()
    }

    pub fn roots(&self) -> Vec<(usize, usize)> {
        let pos = self.positive_roots();
        pos.iter().copied().chain(pos.iter().map(|&(i, j)| (j, i))).collect()
    }

    /// `α_{ij}(diag(h)) = h_i - h_j`.
    pub fn eval(root: (usize, usize), h: &[Rational]) -> Rational {
        &h[root.0] - &h[root.1]
    }

    /// Roots of the Levi `g_I`.
    pub fn levi_roots(&self, levi: &LeviSubset) -> Vec<(usize, usize)> {
        let b = levi.block_of();
        self.roots().into_iter().filter(|&(i, j)| b[i] == b[j]).collect()
    }

    /// Roots vanishing on `h`: the root system of the centralizer `g_h`.
    pub fn centralizer_roots(&self, h: &[Rational]) -> Vec<(usize, usize)> {
        self.roots().into_iter().filter(|&r| Self::eval(r, h).is_zero()).collect()
    }
}

/// A Levi of `gl_n` with a nilpotent orbit of it (one partition per block).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LeviOrbitPair {
    pub blocks: Vec<usize>,
    pub orbit_parts: Vec<Partition>,
}

impl LeviOrbitPair {
    pub fn new(blocks: Vec<usize>, orbit_parts: Vec<Partition>) -> Result<Self> {
        let p = Self { blocks, orbit_parts };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        LeviSubset::new(self.blocks.clone())?;
        if self.blocks.len() != self.orbit_parts.len() {
            return Err(LieError::InvalidPartition(format!(
                "{} blocks but {} orbits",
                self.blocks.len(),
                self.orbit_parts.len()
            )));
        }
        for (b, p) in self.blocks.iter().zip(&self.orbit_parts) {
            if p.total() != *b {
                return Err(LieError::InvalidPartition(format!("{p} does not partition block {b}")));
            }
        }
        Ok(())
    }

    /// Dimension of the Levi orbit: sum over blocks.
    pub fn levi_orbit_dim(&self) -> usize {
        self.blocks.iter().zip(&self.orbit_parts).map(|(&b, p)| b * b - p.centralizer_dim()).sum()
    }
}

/// Lusztig-Spaltenstein induction in type A: componentwise sum of the block
/// partitions.
pub fn ls_induce(pair: &LeviOrbitPair) -> Result<Partition> {
    pair.validate()?;
    Ok(pair.orbit_parts.iter().fold(Partition::regular(0), |acc, p| acc.add(p)))
}

/// The Richardson orbit of a parabolic with the given Levi blocks.
pub fn richardson(blocks: &[usize]) -> Result<Partition> {
    let pair = LeviOrbitPair::new(blocks.to_vec(), blocks.iter().map(|&b| Partition::trivial(b)).collect())?;
    ls_induce(&pair)
}

/// Orbit of a diagonal vector under `W_I`, the product of the symmetric
/// groups of the blocks.
pub fn weyl_orbit(h: &[Rational], levi: &LeviSubset) -> Result<BTreeSet<Vec<Rational>>> {
    if levi.n() != h.len() {
        return Err(LieError::DimensionMismatch(format!("vector of length {} for {:?}", h.len(), levi.blocks())));
    }
    let mut out: BTreeSet<Vec<Rational>> = BTreeSet::new();
    out.insert(Vec::new());
    for range in levi.ranges() {
        let perms = distinct_permutations(&h[range]);
        out = out
            .iter()
            .flat_map(|prefix| {
                perms.iter().map(move |p| {
                    let mut v = prefix.clone();
                    v.extend(p.iter().cloned());
                    v
                })
            })
            .collect();
    }
    Ok(out)
}

fn distinct_permutations(items: &[Rational]) -> Vec<Vec<Rational>> {
    let mut cur = items.to_vec();
    cur.sort();
    let mut out = vec![cur.clone()];
    // lexicographic next-permutation
    loop {
        let Some(i) = (0..cur.len().saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            return out;
        };
        let j = (i + 1..cur.len()).rev().find(|&j| cur[j] > cur[i]).expect("exists");
        cur.swap(i, j);
        cur[i + 1..].reverse();
        out.push(cur.clone());
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::int;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&p(&[2, 2]), &p(&[3, 1])).unwrap());
        assert!(!dominance_leq(&p(&[3, 1]), &p(&[2, 2])).unwrap());
        assert!(dominance_leq(&p(&[2, 1, 1]), &p(&[2, 2])).unwrap());
        assert!(dominance_leq(&p(&[2]), &p(&[1])).is_err());
    }

    #[test]
    fn orbit_dimension_examples() {
        assert_eq!(orbit_dimension(&p(&[4]), 4).unwrap(), 12);
        assert_eq!(orbit_dimension(&Partition::trivial(4), 4).unwrap(), 0);
        assert_eq!(orbit_dimension(&p(&[2, 2]), 4).unwrap(), 8);
        assert!(orbit_dimension(&p(&[2]), 3).is_err());
    }

    #[test]
    fn induction_examples() {
        assert_eq!(richardson(&[1, 1, 1]).unwrap(), p(&[3]));
        assert_eq!(richardson(&[3]).unwrap(), p(&[1, 1, 1]));
        assert_eq!(richardson(&[2, 2]).unwrap(), p(&[2, 2]));
        let pair = LeviOrbitPair::new(vec![2, 1], vec![p(&[1, 1]), p(&[1])]).unwrap();
        let ind = ls_induce(&pair).unwrap();
        assert_eq!(ind, p(&[2, 1]));
        let levi = LeviSubset::new(vec![2, 1]).unwrap();
        assert_eq!(levi.nilradical_dim(), 2);
        assert_eq!(orbit_dimension(&ind, 3).unwrap(), pair.levi_orbit_dim() + 2 * levi.nilradical_dim());
        assert!(LeviOrbitPair::new(vec![2], vec![p(&[1])]).is_err());
    }

    #[test]
    fn weyl_orbit_examples() {
        let h = vec![int(1), int(2)];
        let full = LeviSubset::new(vec![2]).unwrap();
        assert_eq!(weyl_orbit(&h, &full).unwrap().len(), 2);
        let h3 = vec![int(1), int(1), int(2)];
        assert_eq!(weyl_orbit(&h3, &LeviSubset::new(vec![3]).unwrap()).unwrap().len(), 3);
        let cartan = LeviSubset::new(vec![1, 1, 1]).unwrap();
        let orbit = weyl_orbit(&h3, &cartan).unwrap();
        assert_eq!(orbit.into_iter().collect::<Vec<_>>(), vec![h3]);
    }

    #[test]
    fn levi_simple_root_round_trip() {
        for n in 1..6 {
            for l in LeviSubset::all(n) {
                assert_eq!(LeviSubset::from_simple_roots(n, &l.simple_roots()).unwrap(), l);
            }
            assert_eq!(LeviSubset::all(n).len(), 1 << (n - 1));
        }
    }

    #[test]
    fn partition_counts_and_transpose() {
        let counts: Vec<usize> = (0..8).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
        assert_eq!(p(&[3, 1]).transpose(), p(&[2, 1, 1]));
        assert_eq!(RootSystemA::new(4).roots().len(), 12);
    }
}
