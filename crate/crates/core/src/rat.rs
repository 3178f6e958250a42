//! Exact rational scalars.
//!
//! Every quantity in this crate is an arbitrary-precision integer or a
//! ratio of two such integers; nothing is ever rounded. `Rat` keeps itself
//! in lowest terms with a positive denominator.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always in lowest terms.
pub type Rat = num_rational::BigRational;

/// Parses a rational written as `p` or `p/q` in base 10.
///
/// Decimal notation is rejected: exactness on the wire means integer
/// numerator and denominator only.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("expected a rational `p` or `p/q`, got `{s}`"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let numer = BigInt::from_str(num).map_err(|_| bad())?;
    let denom = match den {
        Some(d) => BigInt::from_str(d).map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{s}`")));
    }
    Ok(Rat::new(numer, denom))
}

/// Renders a rational as `p` when integral, `p/q` otherwise.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Smallest integer >= r, as a byte-sized building block for box bounds.
pub fn ceil_to_u64(r: &Rat) -> Result<u64> {
    let c = r.ceil();
    let n = c.numer();
    if n.is_negative() {
        return Ok(0);
    }
    u64::try_from(n).map_err(|_| Error::ExponentOverflow)
}

pub fn rat_from_u64(n: u64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// JSON value for a rational: a plain number when it is an integer that
/// fits in i64, otherwise the `p` / `p/q` string form.
pub fn rat_to_json(r: &Rat) -> serde_json::Value {
    if r.denom().is_one() {
        if let Ok(n) = i64::try_from(r.numer()) {
            return serde_json::Value::from(n);
        }
    }
    serde_json::Value::String(rat_to_string(r))
}
