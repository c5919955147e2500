//! Exact rational coordinates and planar points.
//!
//! Every geometric decision in this crate reduces to the sign of an integer
//! determinant over these coordinates, so they are stored as arbitrary
//! precision rationals. No floating point enters any predicate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Exact rational plane coordinate. Kept in lowest terms with a positive
/// denominator by the underlying rational type; canonical zero is `0/1`.
pub type Coordinate = BigRational;

/// Builds a coordinate from an integer value.
pub fn coord_int(v: i64) -> Coordinate {
    BigRational::from_integer(BigInt::from(v))
}

/// Builds a coordinate from a numerator/denominator pair.
///
/// Panics if `den` is zero.
pub fn coord_ratio(num: i64, den: i64) -> Coordinate {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Error raised when a coordinate string cannot be parsed exactly.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseCoordinateError {
    #[error("empty coordinate string")]
    Empty,
    #[error("invalid coordinate syntax: {0:?}")]
    Syntax(String),
    #[error("zero denominator in coordinate: {0:?}")]
    ZeroDenominator(String),
}

/// Parses a coordinate from its string form.
///
/// Accepted forms are a plain integer (`"5"`, `"-12"`), a decimal converted
/// exactly (`"1.25"` becomes `5/4`), or a fraction in lowest or non-lowest
/// terms (`"5/6"`, `"-10/4"`). The denominator of a fraction must be a
/// positive integer literal.
pub fn parse_coordinate(s: &str) -> Result<Coordinate, ParseCoordinateError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseCoordinateError::Empty);
    }
    let (sign, body) = match s.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, s),
    };
    if body.is_empty() {
        return Err(ParseCoordinateError::Syntax(s.to_owned()));
    }
    let signed = |mag: BigInt| if sign < 0 { -mag } else { mag };

    if let Some((num_str, den_str)) = body.split_once('/') {
        let num = parse_digits(num_str).ok_or_else(|| ParseCoordinateError::Syntax(s.to_owned()))?;
        let den = parse_digits(den_str).ok_or_else(|| ParseCoordinateError::Syntax(s.to_owned()))?;
        if den.is_zero() {
            return Err(ParseCoordinateError::ZeroDenominator(s.to_owned()));
        }
        return Ok(BigRational::new(signed(num), den));
    }
    if let Some((int_str, frac_str)) = body.split_once('.') {
        let int_part =
            parse_digits(int_str).ok_or_else(|| ParseCoordinateError::Syntax(s.to_owned()))?;
        let frac_part =
            parse_digits(frac_str).ok_or_else(|| ParseCoordinateError::Syntax(s.to_owned()))?;
        let scale = BigInt::from(10u8).pow(frac_str.len() as u32);
        let num = int_part * &scale + frac_part;
        return Ok(BigRational::new(signed(num), scale));
    }
    let num = parse_digits(body).ok_or_else(|| ParseCoordinateError::Syntax(s.to_owned()))?;
    Ok(BigRational::from_integer(signed(num)))
}

fn parse_digits(s: &str) -> Option<BigInt> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigInt::from_str(s).ok()
}

/// Formats a coordinate as a lowest-terms fraction string: `"5"` for
/// integers, `"5/6"` otherwise. Inverse of [`parse_coordinate`].
pub fn coordinate_to_string(c: &Coordinate) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// A point of the plane with exact rational coordinates.
///
/// Equality is exact value equality of both coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: Coordinate,
    pub y: Coordinate,
}

impl Point {
    pub fn new(x: Coordinate, y: Coordinate) -> Self {
        Point { x, y }
    }

    /// Point from integer coordinates.
    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(coord_int(x), coord_int(y))
    }

    /// True when both coordinates are integers (denominator one).
    pub fn is_lattice(&self) -> bool {
        self.x.denom().is_one() && self.y.denom().is_one()
    }

    /// Squared euclidean distance to `other`, exactly.
    pub fn distance_sq(&self, other: &Point) -> Coordinate {
        let dx = &self.x - &other.x;
        let dy = &self.y - &other.y;
        &dx * &dx + &dy * &dy
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {})",
            coordinate_to_string(&self.x),
            coordinate_to_string(&self.y)
        )
    }
}

/// Shorthand for a lattice point, used heavily in tests.
pub fn pt(x: i64, y: i64) -> Point {
    Point::from_ints(x, y)
}

/// Largest absolute numerator/denominator appearing in the point, as a
/// rough magnitude measure for overflow-safe fast paths.
pub(crate) fn magnitude_bound(p: &Point) -> Option<i64> {
    fn co(c: &Coordinate) -> Option<i64> {
        let n: i64 = c.numer().try_into().ok()?;
        let d: i64 = c.denom().try_into().ok()?;
        Some(n.abs().max(d))
    }
    Some(co(&p.x)?.max(co(&p.y)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_decimals_and_fractions() {
        assert_eq!(parse_coordinate("5").unwrap(), coord_int(5));
        assert_eq!(parse_coordinate("-12").unwrap(), coord_int(-12));
        assert_eq!(parse_coordinate("1.25").unwrap(), coord_ratio(5, 4));
        assert_eq!(parse_coordinate("-0.5").unwrap(), coord_ratio(-1, 2));
        assert_eq!(parse_coordinate("5/6").unwrap(), coord_ratio(5, 6));
        assert_eq!(parse_coordinate("-10/4").unwrap(), coord_ratio(-5, 2));
        assert_eq!(parse_coordinate(" 7 ").unwrap(), coord_int(7));
    }

    #[test]
    fn rejects_malformed_strings() {
        for bad in ["", "x", "1..2", "5/", "/6", "1/-2", "--3", "1e3", "5."] {
            assert!(parse_coordinate(bad).is_err(), "accepted {bad:?}");
        }
        assert_eq!(
            parse_coordinate("3/0"),
            Err(ParseCoordinateError::ZeroDenominator("3/0".to_owned()))
        );
    }

    #[test]
    fn formats_in_lowest_terms() {
        assert_eq!(coordinate_to_string(&coord_ratio(10, 4)), "5/2");
        assert_eq!(coordinate_to_string(&coord_ratio(-10, 4)), "-5/2");
        assert_eq!(coordinate_to_string(&coord_int(7)), "7");
        assert_eq!(coordinate_to_string(&coord_int(0)), "0");
    }

    #[test]
    fn round_trips_through_strings() {
        for c in [coord_ratio(22, 7), coord_int(-4), coord_ratio(-1, 1000)] {
            let s = coordinate_to_string(&c);
            assert_eq!(parse_coordinate(&s).unwrap(), c);
        }
    }
}
