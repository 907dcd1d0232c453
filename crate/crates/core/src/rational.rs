//! Exact rational scalars.
//!
//! Every probability and every series coefficient in this crate is a
//! [`Rational`]: an arbitrary-precision fraction kept in lowest terms with a
//! positive denominator. The `Display` form is `p/q`, or just `p` when the
//! denominator is one, and that is the form written to every export.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};

pub type Rational = num_rational::BigRational;

/// `p/q` from machine integers. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn integer(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

pub fn pow2(n: u64) -> BigInt {
    BigInt::one() << n
}

pub fn pow2_unsigned(n: u64) -> BigUint {
    BigUint::one() << n
}

/// Nearest `f64`. Works for numerators and denominators far beyond the
/// `f64` exponent range as long as the quotient itself is representable.
pub fn to_f64(r: &Rational) -> f64 {
    if r.is_zero() {
        return 0.0;
    }
    r.to_f64().unwrap_or(f64::NAN)
}

/// Parses the `p/q` (or `p`) form produced by `Display`.
pub fn parse(s: &str) -> crate::Result<Rational> {
    let r: Rational = s
        .trim()
        .parse()
        .map_err(|_| crate::Error::Parse(format!("not a fraction: `{s}`")))?;
    Ok(r)
}
