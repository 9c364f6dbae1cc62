//! Exact rational scalars used for every payoff, probability and type
//! coordinate in the crate. No floating point appears anywhere: equilibrium
//! inequalities are decided exactly, with no tolerance parameter.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::GameError;

/// Exact fraction, always stored in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand constructor from machine integers.
///
/// Panics if `den == 0`; intended for literals in code and tests.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Whole-number rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parse a `"p/q"` or `"p"` literal. Unlike `BigRational::from_str` this
/// reports a zero denominator as an error instead of panicking.
pub fn parse_rational(s: &str) -> Result<Rational, GameError> {
    let s = s.trim();
    let bad = |reason: &str| GameError::InvalidRational {
        literal: s.to_string(),
        reason: reason.to_string(),
    };
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let num: BigInt = num_str.parse().map_err(|_| bad("numerator is not an integer"))?;
    let den: BigInt = match den_str {
        Some(d) => d.parse().map_err(|_| bad("denominator is not an integer"))?,
        None => BigInt::from(1),
    };
    if den.is_zero() {
        return Err(bad("denominator is zero"));
    }
    Ok(Rational::new(num, den))
}

/// Render a rational as `"p/q"` (or `"p"` when the denominator is 1), the
/// exact form used in game files and reports.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

/// True iff `q > 0`.
pub fn is_positive(q: &Rational) -> bool {
    q.is_positive()
}
