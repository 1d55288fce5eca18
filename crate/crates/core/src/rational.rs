//! Exact rationals used for break points and `d_k` values.

use num_rational::Rational64;
use num_traits::Zero;

use crate::{Error, Result};

pub type Rational = Rational64;

/// Formats a rational as `"p/q"`; integers are printed as `"p/1"`.
pub fn to_fraction_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"p/q"` or a bare integer.
pub fn parse_fraction(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Argument(format!("malformed rational `{s}`"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// `r * n` when it is an integer.
pub fn integral_product(r: &Rational, n: i64) -> Option<i64> {
    let v = *r * Rational::from_integer(n);
    v.is_integer().then(|| v.to_integer())
}
