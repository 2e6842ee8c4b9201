//! Exact rational scalars.
//!
//! [`ExactRational`] is `num_rational::BigRational`, which always stores a
//! positive denominator coprime to the numerator. This module adds parsing,
//! formatting and the power helpers the closed forms need (signed and
//! arbitrary-size exponents).

use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type ExactRational = num_rational::BigRational;

/// `n / d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> ExactRational {
    ExactRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> ExactRational {
    ExactRational::from_integer(BigInt::from(n))
}

pub fn from_bigint(n: BigInt) -> ExactRational {
    ExactRational::from_integer(n)
}

/// Parses `"p"`, `"-p"` or `"p/q"` (surrounding whitespace allowed).
pub fn parse_rational(s: &str) -> Result<ExactRational> {
    let t = s.trim();
    if t.is_empty() {
        return Err(Error::Parse("empty rational literal".into()));
    }
    if let Some((n, d)) = t.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|e| Error::Parse(format!("{t:?}: {e}")))?;
        let d = BigInt::from_str(d.trim()).map_err(|e| Error::Parse(format!("{t:?}: {e}")))?;
        if d.is_zero() {
            return Err(Error::Parse(format!("{t:?}: zero denominator")));
        }
        Ok(ExactRational::new(n, d))
    } else {
        BigInt::from_str(t)
            .map(ExactRational::from_integer)
            .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
    }
}

/// Canonical `"p/q"` string, or `"p"` for integers.
pub fn format_rational(q: &ExactRational) -> String {
    q.to_string()
}

pub fn is_integer(q: &ExactRational) -> bool {
    q.denom().is_one()
}

/// `Some(m)` when `q` is an integer `<= 0`, returning `m = -q`.
pub fn nonpositive_integer(q: &ExactRational) -> Option<usize> {
    if is_integer(q) && !q.is_positive() {
        (-q.numer()).to_usize()
    } else {
        None
    }
}

/// `base^e` for a machine exponent.
pub fn pow_u(base: &ExactRational, e: u64) -> Result<ExactRational> {
    if e == 0 {
        return Ok(ExactRational::one());
    }
    if base.is_zero() || base.is_one() {
        return Ok(base.clone());
    }
    if *base == -ExactRational::one() {
        return Ok(if e.is_even() {
            ExactRational::one()
        } else {
            base.clone()
        });
    }
    let e32 = u32::try_from(e).map_err(|_| Error::ExponentOverflow(e.to_string()))?;
    // Powers of coprime integers stay coprime, so no re-normalisation is needed.
    Ok(ExactRational::new_raw(
        base.numer().pow(e32),
        base.denom().pow(e32),
    ))
}

/// `base^e` for a signed exponent; a negative power of zero is an error.
pub fn pow_i(base: &ExactRational, e: i64) -> Result<ExactRational> {
    if e >= 0 {
        pow_u(base, e as u64)
    } else {
        if base.is_zero() {
            return Err(Error::DivisionByZero(format!("0^{e}")));
        }
        Ok(pow_u(base, e.unsigned_abs())?.recip())
    }
}

/// `base^e` for an arbitrary-precision exponent.
///
/// Bases `0` and `±1` are handled for any exponent size; other bases need the
/// exponent to fit in a machine word, beyond which the result could not be
/// stored anyway.
pub fn pow_big(base: &ExactRational, e: &BigInt) -> Result<ExactRational> {
    if e.is_zero() {
        return Ok(ExactRational::one());
    }
    if base.is_zero() {
        return if e.is_positive() {
            Ok(ExactRational::zero())
        } else {
            Err(Error::DivisionByZero(format!("0^{e}")))
        };
    }
    if base.is_one() {
        return Ok(base.clone());
    }
    if *base == -ExactRational::one() {
        return Ok(if e.is_even() {
            ExactRational::one()
        } else {
            base.clone()
        });
    }
    let small = e
        .to_i64()
        .ok_or_else(|| Error::ExponentOverflow(e.to_string()))?;
    pow_i(base, small)
}

/// `(-1)^e`.
pub fn sign_of(e: &BigInt) -> ExactRational {
    if e.is_even() {
        ExactRational::one()
    } else {
        -ExactRational::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_are_canonical() {
        assert_eq!(parse_rational("6/4").unwrap(), rat(3, 2));
        assert_eq!(parse_rational(" -14/9 ").unwrap(), rat(-14, 9));
        assert_eq!(parse_rational("2/-4").unwrap(), rat(-1, 2));
        assert_eq!(format_rational(&rat(-14, 9)), "-14/9");
        assert_eq!(format_rational(&rat(12, 2)), "6");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn powers() {
        assert_eq!(pow_i(&rat(2, 3), -2).unwrap(), rat(9, 4));
        assert_eq!(pow_u(&rat(-1, 2), 3).unwrap(), rat(-1, 8));
        assert!(pow_i(&int(0), -1).is_err());
        let huge = BigInt::from(10).pow(40u32);
        assert_eq!(pow_big(&int(-1), &(huge.clone() + 1)).unwrap(), int(-1));
        assert_eq!(pow_big(&int(0), &huge).unwrap(), int(0));
        assert!(pow_big(&int(2), &huge).is_err());
    }

    #[test]
    fn nonpositive_integer_detection() {
        assert_eq!(nonpositive_integer(&int(-3)), Some(3));
        assert_eq!(nonpositive_integer(&int(0)), Some(0));
        assert_eq!(nonpositive_integer(&int(2)), None);
        assert_eq!(nonpositive_integer(&rat(-1, 2)), None);
    }
}
