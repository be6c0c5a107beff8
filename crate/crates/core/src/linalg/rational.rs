//! Arbitrary-precision rationals.
//!
//! `BigRational` already keeps values reduced with a positive denominator,
//! and its `Display` impl prints `p/q` (or `p` when `q = 1`), which is the
//! document encoding used throughout.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

/// Integer as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den` as a reduced rational. Panics on a zero denominator.
pub fn frac(num: i64, den: i64) -> Rational {
    assert!(den != 0, "zero denominator");
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Parse `"p/q"` or `"p"`. Rejects zero denominators and surrounding junk.
pub fn parse(s: &str) -> Option<Rational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(Rational::new(p, q))
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

pub fn format(r: &Rational) -> String {
    r.to_string()
}

/// Combined bit length of numerator and denominator; the pivot heuristic
/// in elimination prefers the smallest.
pub fn bit_size(r: &Rational) -> u64 {
    r.numer().abs().bits() + r.denom().bits()
}

/// `serialize_with` helper: rationals travel as strings.
pub fn serialize<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(r)
}

pub fn serialize_vec<S: serde::Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(format))
}
