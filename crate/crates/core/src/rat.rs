//! Arbitrary-precision rationals and their textual form.
//!
//! `BigRational` already keeps the invariants we need (reduced fraction,
//! positive denominator), so the ground field is a type alias plus the
//! handful of constructors and the `"num/den"` string format used by the
//! JSON interfaces.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Exact rational scalar.
pub type Rat = num_rational::BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Fraction `n/d`. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn is_integer(q: &Rat) -> bool {
    q.denom().is_one()
}

/// Parses `"num"` or `"num/den"` with decimal integers.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let mk_err = || Error::BadInput(format!("malformed rational `{s}`"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| mk_err())?;
    let den: BigInt = den.parse().map_err(|_| mk_err())?;
    if den.is_zero() {
        return Err(mk_err());
    }
    Ok(Rat::new(num, den))
}

/// Canonical string form: `"num"` when the denominator is 1, else `"num/den"`.
pub fn format_rat(q: &Rat) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Exact conversion to `f64` rounding through the reduced fraction.
///
/// Values of magnitude beyond `f64` range saturate to `±inf`.
pub fn rat_to_f64(q: &Rat) -> f64 {
    num_traits::ToPrimitive::to_f64(q).unwrap_or_else(|| {
        if q.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}
