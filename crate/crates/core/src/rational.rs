//! The scalar type and its textual form (`"p/q"`, or `"p"` for integers).

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal {0:?}")]
pub struct ParseRationalError(pub String);

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Parses `"p/q"` or `"p"`, rejecting zero denominators and stray whitespace.
pub fn parse(s: &str) -> Result<Rational, ParseRationalError> {
    let err = || ParseRationalError(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let num: BigInt = parse_int(num).ok_or_else(err)?;
    let den: BigInt = match den {
        Some(d) => parse_int(d).ok_or_else(err)?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(num, den))
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Canonical text: reduced, denominator omitted when it is one.
pub fn format(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!(parse("3").unwrap(), rat(3));
        assert_eq!(parse("-6/4").unwrap(), ratio(-3, 2));
        assert_eq!(parse("2/-4").unwrap(), ratio(-1, 2));
        assert_eq!(parse("0/7").unwrap(), zero());
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "1/0", "a", "1/", "/2", " 1", "1.5", "+1"] {
            assert!(parse(s).is_err(), "{s}");
        }
    }

    #[test]
    fn formats_reduced() {
        assert_eq!(format(&ratio(4, 6)), "2/3");
        assert_eq!(format(&ratio(-4, 2)), "-2");
        assert_eq!(format(&zero()), "0");
        assert_eq!(format(&ratio(1, -3)), "-1/3");
    }
}
