//! Helpers around [`num_rational::BigRational`], which already keeps every
//! value in lowest terms with a positive denominator.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

use super::ExactError;

/// Exact arbitrary-precision fraction.
pub type Rational = BigRational;

/// `n/d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `10^-k`.
pub fn ten_pow_neg(k: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::from(10u32).pow(k))
}

/// Re-reduce a rational. `BigRational` arithmetic already does this; the
/// function exists so the canonical-form invariant can be stated and tested.
pub fn normalize(r: &Rational) -> Rational {
    let (n, d) = (r.numer().clone(), r.denom().clone());
    if d.is_zero() {
        panic!("rational with zero denominator");
    }
    let g = n.gcd(&d);
    let (mut n, mut d) = (n / &g, d / &g);
    if d.is_negative() {
        n = -n;
        d = -d;
    }
    Rational::new_raw(n, d)
}

/// Canonical text form: `"n"` for integers, `"n/d"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse `"n"`, `"n/d"`, a plain decimal (`"-0.25"`) or scientific
/// notation (`"1e-6"`, `"2.5E3"`) into an exact rational.
pub fn parse_rational(text: &str) -> Result<Rational, ExactError> {
    let s = text.trim();
    let bad = || ExactError::Parse(text.to_string());
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        return Ok(Rational::new(n, d));
    }
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(i) => {
            let e: i32 = s[i + 1..].parse().map_err(|_| bad())?;
            (&s[..i], e)
        }
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let all_digits = format!("{whole}{frac}");
    let mut value = Rational::from_integer(all_digits.parse::<BigInt>().map_err(|_| bad())?);
    let shift = exponent - frac.len() as i32;
    let ten = BigInt::from(10u32);
    if shift >= 0 {
        value *= Rational::from_integer(Pow::pow(&ten, shift as u32));
    } else {
        value /= Rational::from_integer(Pow::pow(&ten, (-shift) as u32));
    }
    Ok(if negative { -value } else { value })
}

/// Nearest `f64`, for display only.
pub fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_all_supported_forms() {
        assert_eq!(parse_rational("3/4").unwrap(), rat(3, 4));
        assert_eq!(parse_rational("-6/8").unwrap(), rat(-3, 4));
        assert_eq!(parse_rational("17").unwrap(), int(17));
        assert_eq!(parse_rational("0.25").unwrap(), rat(1, 4));
        assert_eq!(parse_rational("-1.5").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational("1e-6").unwrap(), ten_pow_neg(6));
        assert_eq!(parse_rational("2.5E3").unwrap(), int(2500));
        assert_eq!(parse_rational(".5").unwrap(), rat(1, 2));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_rational("").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1.2.3").is_err());
        assert!(parse_rational("-").is_err());
    }

    #[test]
    fn formats_canonically() {
        assert_eq!(format_rational(&rat(6, -8)), "-3/4");
        assert_eq!(format_rational(&rat(10, 5)), "2");
    }

    proptest! {
        #[test]
        fn normalize_is_idempotent(n in -10_000i64..10_000, d in 1i64..10_000) {
            let raw = Rational::new_raw(BigInt::from(n * 6), BigInt::from(d * 6));
            let once = normalize(&raw);
            prop_assert_eq!(normalize(&once), once.clone());
            prop_assert!(once.denom().is_positive());
            prop_assert!(once.numer().gcd(once.denom()).is_one() || once.numer().is_zero());
            prop_assert_eq!(once, rat(n, d));
        }

        #[test]
        fn text_round_trip(n in any::<i64>(), d in 1i64..i64::MAX) {
            let r = rat(n, d);
            prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
        }
    }
}
