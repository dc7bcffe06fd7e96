//! Multi-precision real numbers for the transcendental side.
//!
//! [`Hp`] wraps an `astro_float::BigFloat` together with the decimal
//! precision it was created at. Binary operations run at the larger of
//! the two operand precisions, so a computation started at 50 digits stays
//! at 50 digits without any ambient global setting.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use serde::Serialize;

use crate::exact::{Poly, Rational};

const RM: RoundingMode = RoundingMode::ToEven;
const GUARD_BITS: usize = 64;
const LOG2_10: f64 = std::f64::consts::LOG2_10;

thread_local! {
    // Memo of pi / ln 2 / powers of ten used by astro-float; values do not
    // depend on anything but the requested precision.
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("astro-float constant cache"));
}

fn with_consts<R>(f: impl FnOnce(&mut Consts) -> R) -> R {
    CONSTS.with(|cc| f(&mut cc.borrow_mut()))
}

/// Working precision in significant decimal digits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Precision(u32);

impl Precision {
    pub const DEFAULT: Precision = Precision(50);

    pub const fn digits(digits: u32) -> Self {
        Precision(digits)
    }

    pub fn decimal_digits(self) -> u32 {
        self.0
    }

    /// Mantissa bits: the decimal digits plus 64 guard bits, rounded up to
    /// whole words.
    pub fn bits(self) -> usize {
        let raw = (self.0 as f64 * LOG2_10).ceil() as usize + GUARD_BITS;
        raw.div_ceil(64) * 64
    }

    /// Exponent `e` of the documented error budget `10^-e`: `10^-30` at 50
    /// digits, twenty digits below the working precision above that, and
    /// five digits below it at low precision. Observed absolute errors stay
    /// under `10^-(digits+4)`, so every choice keeps at least nine digits in
    /// reserve.
    pub fn budget_exponent(self) -> u32 {
        let d = self.0;
        d.saturating_sub(20).max(d.saturating_sub(5).min(30)).max(1)
    }

    pub fn error_budget(self) -> Hp {
        Hp::ten_pow(-(self.budget_exponent() as i32), self)
    }
}

impl Default for Precision {
    fn default() -> Self {
        Precision::DEFAULT
    }
}

#[derive(Clone)]
pub struct Hp {
    v: BigFloat,
    prec: Precision,
}

impl Hp {
    fn wrap(v: BigFloat, prec: Precision) -> Self {
        debug_assert!(!v.is_nan(), "multi-precision NaN");
        Hp { v, prec }
    }

    pub fn precision(&self) -> Precision {
        self.prec
    }

    /// Same value, carried at a different precision.
    pub fn with_precision(&self, prec: Precision) -> Hp {
        let mut v = self.v.clone();
        v.set_precision(prec.bits(), RM).expect("precision change");
        Hp::wrap(v, prec)
    }

    pub fn from_i64(n: i64, prec: Precision) -> Self {
        Hp::wrap(BigFloat::from_i64(n, prec.bits()), prec)
    }

    pub fn zero(prec: Precision) -> Self {
        Hp::from_i64(0, prec)
    }

    pub fn one(prec: Precision) -> Self {
        Hp::from_i64(1, prec)
    }

    /// `n / d` rounded once.
    pub fn from_ratio(n: i128, d: i128, prec: Precision) -> Self {
        let p = prec.bits();
        let v = BigFloat::from_i128(n, p).div(&BigFloat::from_i128(d, p), p, RM);
        Hp::wrap(v, prec)
    }

    pub fn from_rational(r: &Rational, prec: Precision) -> Self {
        let p = prec.bits();
        let v = with_consts(|cc| {
            let n = BigFloat::parse(&r.numer().to_string(), Radix::Dec, p, RM, cc);
            let d = BigFloat::parse(&r.denom().to_string(), Radix::Dec, p, RM, cc);
            n.div(&d, p, RM)
        });
        Hp::wrap(v, prec)
    }

    /// Exact binary value of an `f64`, then carried at `prec`.
    pub fn from_f64(x: f64, prec: Precision) -> Self {
        Hp::wrap(BigFloat::from_f64(x, prec.bits()), prec)
    }

    /// Parse a decimal literal such as `"0.0554"` or `"1e-6"`.
    pub fn parse(text: &str, prec: Precision) -> Option<Self> {
        let v = with_consts(|cc| BigFloat::parse(text.trim(), Radix::Dec, prec.bits(), RM, cc));
        (!v.is_nan() && !v.is_inf()).then(|| Hp::wrap(v, prec))
    }

    pub fn ten_pow(e: i32, prec: Precision) -> Self {
        Hp::parse(&format!("1e{e}"), prec).expect("power of ten parses")
    }

    pub fn pi(prec: Precision) -> Self {
        let v = with_consts(|cc| cc.pi(prec.bits(), RM));
        Hp::wrap(v, prec)
    }

    fn p(&self) -> usize {
        self.prec.bits()
    }

    pub fn ln(&self) -> Hp {
        assert!(self.is_positive(), "logarithm of a nonpositive number");
        let v = with_consts(|cc| self.v.ln(self.p(), RM, cc));
        Hp::wrap(v, self.prec)
    }

    pub fn exp(&self) -> Hp {
        let v = with_consts(|cc| self.v.exp(self.p(), RM, cc));
        Hp::wrap(v, self.prec)
    }

    pub fn sqrt(&self) -> Hp {
        assert!(!self.is_negative(), "square root of a negative number");
        Hp::wrap(self.v.sqrt(self.p(), RM), self.prec)
    }

    pub fn powi(&self, n: u32) -> Hp {
        Hp::wrap(self.v.powi(n as usize, self.p(), RM), self.prec)
    }

    pub fn recip(&self) -> Hp {
        Hp::wrap(self.v.reciprocal(self.p(), RM), self.prec)
    }

    pub fn abs(&self) -> Hp {
        Hp::wrap(self.v.abs(), self.prec)
    }

    pub fn is_positive(&self) -> bool {
        !self.v.is_zero() && self.v.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        !self.v.is_zero() && self.v.is_negative()
    }

    pub fn is_zero(&self) -> bool {
        self.v.is_zero()
    }

    pub fn min(self, other: Hp) -> Hp {
        if other < self {
            other
        } else {
            self
        }
    }

    pub fn max(self, other: Hp) -> Hp {
        if other > self {
            other
        } else {
            self
        }
    }

    /// Nearest-ish `f64` read straight off the top mantissa word.
    pub fn to_f64(&self) -> f64 {
        if self.v.is_zero() {
            return 0.0;
        }
        let Some((words, _, sign, exponent, _)) = self.v.as_raw_parts() else {
            return f64::NAN;
        };
        let top = *words.last().expect("nonzero mantissa") as f64;
        // two steps so that tiny exponents do not underflow the scale factor
        let half = (exponent - 64) / 2;
        let magnitude = top * 2f64.powi(half) * 2f64.powi(exponent - 64 - half);
        if sign.is_negative() {
            -magnitude
        } else {
            magnitude
        }
    }

    /// Scientific notation with `sig` significant digits, rounded.
    pub fn to_sci_string(&self, sig: usize) -> String {
        let d = self.decimal();
        if d.digits.is_empty() {
            return "0".to_string();
        }
        let (digits, point) = d.rounded(sig.max(1));
        let mut s = String::new();
        if d.negative {
            s.push('-');
        }
        s.push_str(&digits[..1]);
        if digits.len() > 1 {
            s.push('.');
            s.push_str(&digits[1..]);
        }
        s.push_str(&format!("e{}", point - 1));
        s
    }

    /// Fixed notation with `decimals` digits after the point, truncated
    /// toward zero (the way printed constants are quoted).
    pub fn to_fixed_trunc(&self, decimals: usize) -> String {
        let d = self.decimal();
        let mut int_part = String::new();
        let mut frac_part = String::new();
        for (k, ch) in d.digits.chars().enumerate() {
            let position = d.point - 1 - k as i64;
            if position >= 0 {
                int_part.push(ch);
            } else if (-position) as usize <= decimals {
                frac_part.push(ch);
            }
        }
        if d.point > d.digits.len() as i64 {
            int_part.extend(std::iter::repeat_n('0', (d.point - d.digits.len() as i64) as usize));
        }
        if d.point < 0 {
            let lead = ((-d.point) as usize).min(decimals);
            frac_part = "0".repeat(lead) + &frac_part;
            frac_part.truncate(decimals);
        }
        while frac_part.len() < decimals {
            frac_part.push('0');
        }
        if int_part.is_empty() {
            int_part.push('0');
        }
        let all_zero = int_part.chars().chain(frac_part.chars()).all(|c| c == '0');
        let sign = if d.negative && !all_zero { "-" } else { "" };
        if decimals == 0 {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{frac_part}")
        }
    }

    fn decimal(&self) -> Decimal {
        let text = with_consts(|cc| self.v.format(Radix::Dec, RM, cc)).expect("finite value formats");
        Decimal::parse(&text)
    }
}

/// `0.digits * 10^point`, digits without leading zeros.
struct Decimal {
    negative: bool,
    digits: String,
    point: i64,
}

impl Decimal {
    fn parse(text: &str) -> Decimal {
        let (negative, body) = match text.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, text.strip_prefix('+').unwrap_or(text)),
        };
        let (mantissa, exp) = match body.split_once(['e', 'E']) {
            Some((m, e)) => (m, e.parse::<i64>().expect("decimal exponent")),
            None => (body, 0),
        };
        let (whole, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
        let raw = format!("{whole}{frac}");
        let leading = raw.len() - raw.trim_start_matches('0').len();
        let digits = raw.trim_start_matches('0').trim_end_matches('0').to_string();
        let point = whole.len() as i64 + exp - leading as i64;
        Decimal { negative, digits, point }
    }

    fn rounded(&self, sig: usize) -> (String, i64) {
        let mut digits: Vec<u8> = self.digits.bytes().map(|b| b - b'0').collect();
        digits.resize(digits.len().max(sig + 1), 0);
        let round_up = digits[sig] >= 5;
        digits.truncate(sig);
        let mut point = self.point;
        if round_up {
            let mut k = sig;
            loop {
                if k == 0 {
                    digits.insert(0, 1);
                    digits.truncate(sig);
                    point += 1;
                    break;
                }
                k -= 1;
                if digits[k] == 9 {
                    digits[k] = 0;
                } else {
                    digits[k] += 1;
                    break;
                }
            }
        }
        (digits.iter().map(|d| char::from(b'0' + d)).collect(), point)
    }
}

impl fmt::Display for Hp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sig = f.precision().unwrap_or(25);
        f.write_str(&self.to_sci_string(sig))
    }
}

impl fmt::Debug for Hp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hp({})", self.to_sci_string(self.prec.decimal_digits() as usize))
    }
}

impl PartialEq for Hp {
    fn eq(&self, other: &Self) -> bool {
        self.partial_cmp(other) == Some(Ordering::Equal)
    }
}

impl PartialOrd for Hp {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.v.cmp(&other.v).map(|c| c.cmp(&0))
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident) => {
        impl<'a> $tr<&'a Hp> for &'a Hp {
            type Output = Hp;
            fn $m(self, rhs: &Hp) -> Hp {
                let prec = self.prec.max(rhs.prec);
                Hp::wrap(self.v.$m(&rhs.v, prec.bits(), RM), prec)
            }
        }
        impl $tr<Hp> for Hp {
            type Output = Hp;
            fn $m(self, rhs: Hp) -> Hp {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Hp> for Hp {
            type Output = Hp;
            fn $m(self, rhs: &Hp) -> Hp {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<Hp> for &'a Hp {
            type Output = Hp;
            fn $m(self, rhs: Hp) -> Hp {
                self.$m(&rhs)
            }
        }
        impl $tr<i64> for &Hp {
            type Output = Hp;
            fn $m(self, rhs: i64) -> Hp {
                self.$m(&Hp::from_i64(rhs, self.prec))
            }
        }
        impl $tr<i64> for Hp {
            type Output = Hp;
            fn $m(self, rhs: i64) -> Hp {
                (&self).$m(&Hp::from_i64(rhs, self.prec))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl Neg for &Hp {
    type Output = Hp;
    fn neg(self) -> Hp {
        Hp::wrap(-self.v.clone(), self.prec)
    }
}

impl Neg for Hp {
    type Output = Hp;
    fn neg(self) -> Hp {
        Hp::wrap(-self.v, self.prec)
    }
}

/// A polynomial with coefficients pre-rounded to a fixed precision, for
/// repeated evaluation at multi-precision points.
#[derive(Clone, Debug)]
pub struct HpPoly {
    coeffs: Vec<Hp>,
}

impl HpPoly {
    pub fn new(p: &Poly, prec: Precision) -> Self {
        HpPoly { coeffs: p.coeffs().iter().map(|c| Hp::from_rational(c, prec)).collect() }
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Hp) -> Hp {
        let mut acc = Hp::zero(x.precision());
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    const P: Precision = Precision::DEFAULT;

    #[test]
    fn precision_bits_cover_the_digits() {
        assert!(P.bits() >= 167 + 64);
        assert_eq!(P.bits() % 64, 0);
        assert_eq!(P.budget_exponent(), 30);
        assert_eq!(Precision::digits(30).budget_exponent(), 25);
        assert_eq!(Precision::digits(40).budget_exponent(), 30);
        assert_eq!(Precision::digits(100).budget_exponent(), 80);
    }

    #[test]
    fn pi_digits() {
        assert_eq!(
            Hp::pi(P).to_fixed_trunc(40),
            "3.1415926535897932384626433832795028841971"
        );
    }

    #[test]
    fn rational_conversion_is_correctly_rounded() {
        let third = Hp::from_rational(&rat(1, 3), P);
        assert_eq!(third.to_fixed_trunc(45), format!("0.{}", "3".repeat(45)));
        let big = Hp::from_rational(&rat(64124455182553, 15625), P);
        assert_eq!(big.to_fixed_trunc(5), "4103965131.68339");
        assert_eq!(Hp::from_ratio(-7, 2, P).to_fixed_trunc(2), "-3.50");
    }

    #[test]
    fn fixed_and_scientific_formatting() {
        let x = Hp::parse("0.001914965840445789969", P).unwrap();
        assert_eq!(x.to_fixed_trunc(6), "0.001914");
        assert_eq!(x.to_sci_string(4), "1.915e-3");
        assert_eq!(Hp::parse("9.9996", P).unwrap().to_sci_string(3), "1.00e1");
        assert_eq!(Hp::from_i64(123, P).to_fixed_trunc(0), "123");
        assert_eq!(Hp::zero(P).to_fixed_trunc(3), "0.000");
        assert_eq!(Hp::parse("-0.0001", P).unwrap().to_fixed_trunc(2), "0.00");
    }

    #[test]
    fn f64_view_matches_decimal_view() {
        for s in ["0.1", "-2.5e-7", "123456.789", "1e-300", "7.25e20"] {
            let x = Hp::parse(s, P).unwrap();
            let expected: f64 = s.parse().unwrap();
            assert!((x.to_f64() - expected).abs() <= expected.abs() * 1e-15, "{s}");
        }
    }

    #[test]
    fn elementary_functions() {
        let two = Hp::from_i64(2, P);
        let ln2 = two.ln();
        assert_eq!(ln2.to_fixed_trunc(30), "0.693147180559945309417232121458");
        assert!((ln2.exp() - &two).abs() < Hp::ten_pow(-48, P));
        assert_eq!(two.sqrt().to_fixed_trunc(30), "1.414213562373095048801688724209");
        assert_eq!(two.powi(10).to_fixed_trunc(0), "1024");
    }

    #[test]
    fn mixed_precision_takes_the_larger() {
        let low = Hp::from_i64(1, Precision::digits(30));
        let high = Hp::from_i64(3, Precision::digits(60));
        assert_eq!((&low / &high).precision(), Precision::digits(60));
    }
}
