//! Univariate polynomials over Q, coefficients stored lowest degree first.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::RationalMatrix;
use super::rational::{self, Rational};
use crate::error::{LieError, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RationalPolynomial {
    coeffs: Vec<Rational>,
}

impl RationalPolynomial {
    /// Build from coefficients (lowest degree first); trailing zeros are dropped.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rational::int(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::new(vec![Rational::zero(), Rational::one()])
    }

    /// `t - r`.
    pub fn linear(r: &Rational) -> Self {
        Self::new(vec![-r.clone(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rational::int(i as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_matrix(&self, m: &RationalMatrix) -> RationalMatrix {
        let n = m.rows();
        let mut acc = RationalMatrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * m) + &RationalMatrix::identity(n).scale(c);
        }
        acc
    }

    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(LieError::ZeroPolynomial)?;
        let lc_inv = divisor.leading().unwrap().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let shift = rem.len() - 1 - dd;
            let c = rem.last().unwrap() * &lc_inv;
            if !c.is_zero() {
                for (i, d) in divisor.coeffs.iter().enumerate() {
                    rem[shift + i] -= &c * d;
                }
            }
            quot[shift] = c;
            rem.pop();
        }
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn divides(&self, other: &Self) -> bool {
        match other.div_rem(self) {
            Ok((_, r)) => r.is_zero(),
            Err(_) => other.is_zero(),
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `p / gcd(p, p')`, made monic: same roots, all simple.
    pub fn squarefree_part(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(LieError::ZeroPolynomial);
        }
        let g = self.gcd(&self.derivative());
        let (q, _) = self.div_rem(&g)?;
        Ok(q.monic())
    }

    /// Rational roots (distinct, ascending) and the cofactor left after
    /// dividing out every linear factor with multiplicity.
    pub fn rational_roots(&self) -> Result<(Vec<Rational>, Self)> {
        if self.is_zero() {
            return Err(LieError::ZeroPolynomial);
        }
        let mut rest = self.monic();
        let mut roots = Vec::new();
        if rest.coeff(0).is_zero() {
            roots.push(Rational::zero());
            while rest.coeff(0).is_zero() && rest.degree() > Some(0) {
                rest = Self::new(rest.coeffs[1..].to_vec());
            }
        }
        if rest.degree() > Some(0) {
            let ints = rest.integer_coefficients();
            let a0 = ints.first().unwrap().abs();
            let ad = ints.last().unwrap().abs();
            let ps = divisors(&a0);
            let qs = divisors(&ad);
            let mut candidates: Vec<Rational> = Vec::new();
            for p in &ps {
                for q in &qs {
                    let r = Rational::new(p.clone(), q.clone());
                    candidates.push(r.clone());
                    candidates.push(-r);
                }
            }
            candidates.sort();
            candidates.dedup();
            for r in candidates {
                if rest.degree() == Some(0) {
                    break;
                }
                let lin = Self::linear(&r);
                let mut hit = false;
                loop {
                    let (q, rem) = rest.div_rem(&lin)?;
                    if !rem.is_zero() {
                        break;
                    }
                    rest = q;
                    hit = true;
                }
                if hit {
                    roots.push(r);
                }
            }
        }
        roots.sort();
        Ok((roots, rest.monic()))
    }

    /// Primitive integer coefficients with the same roots.
    fn integer_coefficients(&self) -> Vec<BigInt> {
        let lcm = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        ints.into_iter().map(|c| c / &g).collect()
    }

    /// Companion matrix: ones on the subdiagonal, last column `-c_i` of the
    /// monic normalization.
    pub fn companion(&self) -> Result<RationalMatrix> {
        let d = self.degree().ok_or(LieError::ZeroPolynomial)?;
        let p = self.monic();
        let mut m = RationalMatrix::zeros(d, d);
        for i in 1..d {
            m[(i, i - 1)] = Rational::one();
        }
        for i in 0..d {
            m[(i, d - 1)] = -p.coeff(i);
        }
        Ok(m)
    }
}

/// Positive divisors of `|n|` by trial division; `{1}` for zero.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if n.is_zero() {
        return vec![BigInt::one()];
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            let other = &n / &d;
            if other != d {
                large.push(other);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

impl Add for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn add(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RationalPolynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn sub(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RationalPolynomial::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn mul(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPolynomial::new(out)
    }
}

impl Neg for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn neg(self) -> RationalPolynomial {
        RationalPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let show_coeff = i == 0 || !abs.is_one();
            if show_coeff {
                write!(f, "{abs}")?;
                if i > 0 {
                    write!(f, "*")?;
                }
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::{frac, int};

    fn p(c: &[i64]) -> RationalPolynomial {
        RationalPolynomial::from_ints(c)
    }

    #[test]
    fn squarefree_examples() {
        // (t-1)^2
        assert_eq!(p(&[1, -2, 1]).squarefree_part().unwrap(), p(&[-1, 1]));
        assert_eq!(p(&[1, 0, 1]).squarefree_part().unwrap(), p(&[1, 0, 1]));
        // t^3 - t^2 -> t^2 - t
        assert_eq!(p(&[0, 0, -1, 1]).squarefree_part().unwrap(), p(&[0, -1, 1]));
        assert_eq!(RationalPolynomial::zero().squarefree_part(), Err(LieError::ZeroPolynomial));
    }

    #[test]
    fn division_round_trips() {
        let a = p(&[3, 0, -2, 5, 1]);
        let b = p(&[1, 2, 3]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn rational_roots_and_leftover() {
        // (2t - 1)(t + 3)^2 (t^2 + 1)
        let f = &(&(&p(&[-1, 2]) * &p(&[3, 1])) * &p(&[3, 1])) * &p(&[1, 0, 1]);
        let (roots, rest) = f.rational_roots().unwrap();
        assert_eq!(roots, vec![int(-3), frac(1, 2)]);
        assert_eq!(rest, p(&[1, 0, 1]));
        let (roots, rest) = p(&[0, 0, 1]).rational_roots().unwrap();
        assert_eq!(roots, vec![int(0)]);
        assert_eq!(rest, p(&[1]));
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(p(&[2, -3, 1]).to_string(), "t^2 - 3*t + 2");
        assert_eq!(p(&[-2, 0, 1]).to_string(), "t^2 - 2");
        assert_eq!(p(&[]).to_string(), "0");
    }

    #[test]
    fn companion_annihilated_by_its_polynomial() {
        let f = p(&[2, -3, 1]);
        let c = f.companion().unwrap();
        assert_eq!(c, RationalMatrix::from_ints(&[&[0, -2], &[1, 3]]));
        assert!(f.eval_matrix(&c).is_zero());
    }
}
