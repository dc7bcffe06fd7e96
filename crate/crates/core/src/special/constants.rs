use serde::Serialize;

use super::functions::{maximize_delta, psi2};
use super::hp::{Hp, Precision};
use super::SpecialError;
use crate::exact::{int, Rational};
use crate::yang;

/// `2 pi^2 / 3 - 4`, the sharp constant in the lower rational bound for
/// `1/(xy) - B(x, y)`.
pub fn alpha(prec: Precision) -> Hp {
    let pi = Hp::pi(prec);
    &pi * &pi * 2 / 3 - 4
}

/// `(40 + 3 sqrt 205) / 105`.
pub fn a1(prec: Precision) -> Hp {
    (Hp::from_i64(205, prec).sqrt() * 3 + 40) / 105
}

/// `(45 - 4 pi^2 + 3 sqrt(4 pi^4 - 80 pi^2 + 405)) / (30 (pi^2 - 9))`.
pub fn a2(prec: Precision) -> Hp {
    let pi2 = Hp::pi(prec).powi(2);
    let disc = &pi2 * &pi2 * 4 - &pi2 * 80 + 405;
    (-(&pi2 * 4) + 45 + disc.sqrt() * 3) / ((pi2 - 9) * 30)
}

/// Root of `a -> L_xx(0, a) - psi''(1)` on `(1/15, 2)`, by bisection down to
/// a bracket of width `1e-15`.
///
/// The bracket starts a hair above `1/15`, where the second log term of
/// `L` degenerates.
pub fn solve_a3(prec: Precision) -> Result<Hp, SpecialError> {
    let target = psi2(&Hp::one(prec))?;
    let zero = Hp::zero(prec);
    let h = |a: &Hp| yang::lxx_general(&zero, a) - &target;
    let mut lo = Hp::from_ratio(1, 15, prec) + Hp::ten_pow(-6, prec);
    let mut hi = Hp::from_i64(2, prec);
    let (h_lo, h_hi) = (h(&lo), h(&hi));
    if h_lo.is_negative() == h_hi.is_negative() {
        return Err(SpecialError::NoSignChange { lo: format!("{lo:.10}"), hi: format!("{hi:.10}") });
    }
    let lo_negative = h_lo.is_negative();
    let tol = Hp::ten_pow(-15, prec);
    while (&hi - &lo) > tol {
        let mid = (&lo + &hi) / 2;
        if h(&mid).is_negative() == lo_negative {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((lo + hi) / 2)
}

/// Every named constant, evaluated at one precision.
#[derive(Clone, Debug, Serialize)]
pub struct Constants {
    #[serde(serialize_with = "as_decimal")]
    pub alpha: Hp,
    #[serde(serialize_with = "as_fraction")]
    pub beta_const: Rational,
    #[serde(serialize_with = "as_decimal")]
    pub a1: Hp,
    #[serde(serialize_with = "as_decimal")]
    pub a2: Hp,
    #[serde(serialize_with = "as_decimal")]
    pub a3: Hp,
    #[serde(serialize_with = "as_decimal")]
    pub alzer_max: Hp,
    /// Where the maximum of `Delta` on `x >= 1` is attained.
    #[serde(serialize_with = "as_decimal")]
    pub alzer_argmax: Hp,
}

impl Constants {
    pub fn compute(prec: Precision) -> Result<Self, SpecialError> {
        let max = maximize_delta(prec)?;
        Ok(Constants {
            alpha: alpha(prec),
            beta_const: int(1),
            a1: a1(prec),
            a2: a2(prec),
            a3: solve_a3(prec)?,
            alzer_max: max.value,
            alzer_argmax: max.argmax,
        })
    }
}

fn as_decimal<S: serde::Serializer>(v: &Hp, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_sci_string(25))
}

fn as_fraction<S: serde::Serializer>(v: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&crate::exact::format_rational(v))
}
