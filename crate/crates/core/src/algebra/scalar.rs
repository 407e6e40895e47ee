//! Exact rational scalars.
//!
//! Every coefficient in the crate is a [`Scalar`], an arbitrary-precision
//! rational kept in lowest terms with a positive denominator.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Scalar = BigRational;

/// `n / d` as a [`Scalar`]. Panics if `d == 0`.
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

pub fn is_integer(x: &Scalar) -> bool {
    x.denom().is_one()
}

/// Renders as `p` or `p/q`.
pub fn format(x: &Scalar) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `p` or `p/q` with an optional leading sign.
pub fn parse(s: &str) -> Option<Scalar> {
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

pub fn abs(x: &Scalar) -> Scalar {
    x.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_positive_denominator() {
        let x = q(6, -4);
        assert_eq!(x.numer(), &BigInt::from(-3));
        assert_eq!(x.denom(), &BigInt::from(2));
    }

    #[test]
    fn format_and_parse() {
        assert_eq!(format(&q(-1, 24)), "-1/24");
        assert_eq!(format(&int(7)), "7");
        assert_eq!(parse(" -2/4 "), Some(q(-1, 2)));
        assert_eq!(parse("3"), Some(int(3)));
        assert_eq!(parse("1/0"), None);
        assert_eq!(parse("x"), None);
    }
}
