//! Integer and rational value types plus decimal parsing.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Pow, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer.
pub type Int = BigInt;

/// Exact rational, always reduced with a positive denominator.
pub type Rat = BigRational;

/// Parses a decimal integer. `base^exp` is accepted as a shorthand for
/// large bounds such as `10^11`.
pub fn parse_int(s: &str) -> Result<Int> {
    let s = s.trim();
    let err = || Error::Parse {
        input: s.to_string(),
        kind: "integer",
    };
    if let Some((base, exp)) = s.split_once('^') {
        let base: BigInt = base.trim().parse().map_err(|_| err())?;
        let exp: u32 = exp.trim().parse().map_err(|_| err())?;
        return Ok(Pow::pow(base, exp));
    }
    s.parse().map_err(|_| err())
}

/// Parses `num/den` or a plain integer into a reduced rational.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let err = || Error::Parse {
        input: s.to_string(),
        kind: "rational",
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let n = parse_int(n).map_err(|_| err())?;
            let d = parse_int(d).map_err(|_| err())?;
            if d.is_zero() {
                return Err(err());
            }
            Ok(Rat::new(n, d))
        }
        None => Ok(Rat::from_integer(parse_int(s).map_err(|_| err())?)),
    }
}

/// Converts a small non-negative exponent.
pub(crate) fn exponent(n: &Int, what: &'static str) -> Result<u32> {
    n.to_u32()
        .ok_or_else(|| Error::InvalidInput(format!("{what} = {n} is out of range")))
}

/// Natural logarithm of a positive integer of any size.
pub(crate) fn ln(x: &Int) -> f64 {
    debug_assert!(x.is_positive());
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().unwrap().ln();
    }
    let shift = bits - 64;
    let top: Int = x >> shift;
    top.to_f64().unwrap().ln() + shift as f64 * std::f64::consts::LN_2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_powers_and_rationals() {
        assert_eq!(parse_int("10^7").unwrap(), Int::from(10_000_000));
        assert_eq!(parse_int("-42").unwrap(), Int::from(-42));
        assert!(parse_int("1e7").is_err());
        let r = parse_rat("500/27").unwrap();
        assert_eq!(r.to_string(), "500/27");
        assert_eq!(parse_rat("-6/4").unwrap().to_string(), "-3/2");
        assert_eq!(parse_rat("4/-6").unwrap().to_string(), "-2/3");
        assert!(parse_rat("1/0").is_err());
    }

    #[test]
    fn zero_is_canonical() {
        let z = parse_int("-0").unwrap();
        assert_eq!(z.to_string(), "0");
        assert_eq!(parse_rat("0/5").unwrap().to_string(), "0");
    }

    #[test]
    fn log_of_huge_values() {
        let x: Int = Pow::pow(Int::from(3), 2000u32);
        let expect = 2000.0 * 3f64.ln();
        assert!((ln(&x) - expect).abs() / expect < 1e-14);
    }
}
