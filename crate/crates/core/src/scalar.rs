//! Exact rational scalars.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Coefficient field element. Always reduced with a positive denominator.
pub type Scalar = BigRational;

/// `n / d` as an exact rational. Panics on `d == 0`.
pub fn q(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

pub fn half() -> Scalar {
    q(1, 2)
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_scalar(s: &str) -> Option<Scalar> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num.parse().ok()?;
    let d: BigInt = den.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(BigRational::new(n, d))
}

/// Integer power, negative exponents allowed for nonzero bases.
pub fn pow(base: &Scalar, e: i64) -> Scalar {
    let mut acc = one();
    let b = if e < 0 { base.recip() } else { base.clone() };
    for _ in 0..e.unsigned_abs() {
        acc *= &b;
    }
    acc
}

pub fn to_f64(s: &Scalar) -> f64 {
    let n: f64 = s.numer().to_string().parse().unwrap_or(f64::NAN);
    let d: f64 = s.denom().to_string().parse().unwrap_or(f64::NAN);
    n / d
}
