//! Exact rational scalars.
//!
//! `Rational` is a thin alias over [`num_rational::BigRational`], which already
//! keeps values in lowest terms with a positive denominator.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Integer-valued rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d` reduced to lowest terms. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Parses `"p/q"`, `"p"` or `"-p/q"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(p, q))
        }
        None => {
            let p: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(p))
        }
    }
}

/// `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Sign as `-1`, `0` or `1`.
pub fn sign(x: &Rational) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Least common multiple of the denominators.
pub fn denominator_lcm<'a, I: IntoIterator<Item = &'a Rational>>(xs: I) -> BigInt {
    xs.into_iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// Greatest common divisor of integers; zero for an all-zero list.
pub fn gcd_all<'a, I: IntoIterator<Item = &'a BigInt>>(xs: I) -> BigInt {
    xs.into_iter().fold(BigInt::zero(), |acc, x| acc.gcd(x))
}

/// Lossy conversion used only when emitting drawing coordinates.
pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["3/4", "-7/2", "5", "0", "-1"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
        assert_eq!(parse_rational("6/8").unwrap(), rat(3, 4));
        assert_eq!(parse_rational("4/-6").unwrap(), rat(-2, 3));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn lowest_terms_positive_denominator() {
        let x = rat(10, -4);
        assert_eq!(x.numer(), &BigInt::from(-5));
        assert_eq!(x.denom(), &BigInt::from(2));
    }

    #[test]
    fn lcm_and_gcd() {
        let xs = [rat(1, 4), rat(5, 6), int(3)];
        assert_eq!(denominator_lcm(xs.iter()), BigInt::from(12));
        let ns = [BigInt::from(12), BigInt::from(-18), BigInt::from(0)];
        assert_eq!(gcd_all(ns.iter()), BigInt::from(6));
    }
}
