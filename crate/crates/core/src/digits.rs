//! Comparing computed values with decimal prefixes quoted as `0.03733...`.
//!
//! A quoted prefix with `d` decimals is read as a truncation: the true
//! value lies in `[p, p + 10^-d)`.

use std::fmt;

use num_traits::Signed;

use crate::exact::{parse_rational, ten_pow_neg, ExactError, Rational};
use crate::sign::Interval;
use crate::special::{Hp, Precision};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrintedPrefix {
    text: String,
    value: Rational,
    decimals: usize,
}

impl PrintedPrefix {
    pub fn parse(text: &str) -> Result<Self, ExactError> {
        let decimals = text.split_once('.').map_or(0, |(_, frac)| frac.len());
        Ok(PrintedPrefix { text: text.to_string(), value: parse_rational(text)?, decimals })
    }

    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn value(&self) -> &Rational {
        &self.value
    }

    pub fn decimals(&self) -> usize {
        self.decimals
    }

    /// One unit in the last quoted place.
    pub fn ulp(&self) -> Rational {
        ten_pow_neg(self.decimals as u32)
    }

    /// Truncation interval `[p, p + ulp)` for a nonnegative prefix, mirrored
    /// for a negative one; returned as closed bounds `(lo, hi)`.
    pub fn truncation_bounds(&self) -> (Rational, Rational) {
        if self.value.is_negative() || self.text.starts_with('-') {
            (&self.value - self.ulp(), self.value.clone())
        } else {
            (self.value.clone(), &self.value + self.ulp())
        }
    }

    /// Strict reading: the value truncated to the quoted number of decimals
    /// reproduces the quoted text.
    pub fn truncation_matches(&self, v: &Hp) -> bool {
        v.to_fixed_trunc(self.decimals) == self.text
    }

    /// Tolerant reading: the value is within one unit in the last place of
    /// the truncation interval.
    pub fn within_one_ulp(&self, v: &Hp) -> bool {
        let prec = v.precision();
        let (lo, hi) = self.truncation_bounds();
        let ulp = self.ulp();
        let lo = Hp::from_rational(&(lo - &ulp), prec);
        let hi = Hp::from_rational(&(hi + &ulp), prec);
        lo <= *v && *v < hi
    }

    /// The enclosure is compatible with the quoted digits: it meets the
    /// truncation interval.
    pub fn consistent_with_interval(&self, enclosure: &Interval) -> bool {
        let (lo, hi) = self.truncation_bounds();
        enclosure.lo < hi && lo <= enclosure.hi
    }

    /// Quoted value as a multi-precision number.
    pub fn to_hp(&self, prec: Precision) -> Hp {
        Hp::from_rational(&self.value, prec)
    }
}

impl fmt::Display for PrintedPrefix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}...", self.text)
    }
}
