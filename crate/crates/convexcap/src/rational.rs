//! Arbitrary-precision rational scalars.
//!
//! `Rational` is a reduced fraction with positive denominator (`num`'s
//! `BigRational` maintains both invariants). Every coordinate that feeds an
//! exact predicate lives in this type; floats are lifted losslessly when
//! exactness is needed (every finite f64 is a dyadic rational).

use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};
use std::str::FromStr;

pub type Rational = BigRational;

pub fn rat_i64(v: i64) -> Rational {
    BigRational::from_integer(BigInt::from(v))
}

/// 1 / 2^e
pub fn pow2_inv(e: u32) -> Rational {
    BigRational::new(BigInt::one(), BigInt::one() << e)
}

/// Exact lift of a finite f64. Panics on NaN/infinity, which never enter the
/// pipeline.
pub fn rat_from_f64(v: f64) -> Rational {
    BigRational::from_float(v).expect("finite float")
}

/// Nearest-f64 snapshot of a rational. Good to within one ulp for the
/// magnitudes used here; only the float pipeline consumes it.
pub fn rat_to_f64(v: &Rational) -> f64 {
    v.to_f64().unwrap_or_else(|| {
        // Out-of-range values would need exponents beyond ±1022; fall back
        // to a manual division of truncated parts.
        let n = v.numer().to_f64().unwrap_or(f64::MAX);
        let d = v.denom().to_f64().unwrap_or(f64::MAX);
        n / d
    })
}

/// Parses "num/den", a plain integer, or a decimal like "0.25".
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let num = BigInt::from_str(n.trim())
            .map_err(|_| Error::InvalidArgument(format!("bad rational numerator `{n}`")))?;
        let den = BigInt::from_str(d.trim())
            .map_err(|_| Error::InvalidArgument(format!("bad rational denominator `{d}`")))?;
        if den.is_zero() {
            return Err(Error::InvalidArgument(format!("zero denominator in `{s}`")));
        }
        return Ok(BigRational::new(num, den));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let digits = frac.len() as u32;
        let int_part = BigInt::from_str(if int.is_empty() { "0" } else { int })
            .map_err(|_| Error::InvalidArgument(format!("bad decimal `{s}`")))?;
        let frac_part = BigInt::from_str(frac)
            .map_err(|_| Error::InvalidArgument(format!("bad decimal `{s}`")))?;
        let scale = BigInt::from(10u32).pow(digits);
        let sign = if s.starts_with('-') { -1 } else { 1 };
        let total = &int_part * &scale + BigInt::from(sign) * frac_part;
        return Ok(BigRational::new(total, scale));
    }
    let num = BigInt::from_str(s)
        .map_err(|_| Error::InvalidArgument(format!("bad rational `{s}`")))?;
    Ok(BigRational::from_integer(num))
}

/// Serialized form used in point-set JSON: always "num/den".
pub fn format_rational(v: &Rational) -> String {
    format!("{}/{}", v.numer(), v.denom())
}

/// |v| as f64, for cheap magnitude checks in tests.
pub fn rat_abs_f64(v: &Rational) -> f64 {
    rat_to_f64(&v.abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_roundtrip() {
        let r = parse_rational("17/64").unwrap();
        assert_eq!(format_rational(&r), "17/64");
        assert_eq!(parse_rational("-3").unwrap(), rat_i64(-3));
        assert_eq!(parse_rational("0.25").unwrap(), parse_rational("1/4").unwrap());
        assert_eq!(parse_rational("-0.5").unwrap(), parse_rational("-1/2").unwrap());
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn float_lift_is_exact() {
        let v = 0.1f64;
        let r = rat_from_f64(v);
        assert_eq!(rat_to_f64(&r), v);
        // 0.1 is not 1/10 in binary; the lift must reflect the actual bits.
        assert_ne!(r, parse_rational("1/10").unwrap());
    }

    #[test]
    fn pow2_inv_values() {
        assert_eq!(pow2_inv(3), parse_rational("1/8").unwrap());
    }
}
