//! Rational sandwich bounds for the tri- and tetragamma functions.
//!
//! `L(x, a) = c1 log(x^2 + x + u) + c2 log(x^2 + x + v)` with
//! `c1 = 1/(90a^2+2)`, `c2 = 45a^2/(90a^2+2)`, `u = (3a+1)/3` and
//! `v = (15a-1)/(45a)`. Its `x`-derivatives are rational in `x`, and for
//! suitable `a` they bracket `psi'(x+1)` and `psi''(x+1)`. The parameters
//! `2/5` and `4/5` give closed forms with integer coefficients, which are
//! hard-coded here and cross-checked against symbolic differentiation.
//!
//! Also home to the lower bound for `psi(x+1) - psi(x+s)` as a finite sum.

use std::fmt;

use serde::Serialize;

use crate::exact::{int, rat, Poly, Rational, RationalFn};
use crate::special::{self, Hp, HpPoly, Precision, SpecialError};

#[derive(Debug, thiserror::Error)]
pub enum YangError {
    #[error("parameter a = {0} must exceed 1/15")]
    Parameter(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error(transparent)]
    Special(#[from] SpecialError),
}

/// The two parameters with printed closed forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum YangA {
    #[serde(rename = "2/5")]
    TwoFifths,
    #[serde(rename = "4/5")]
    FourFifths,
}

impl YangA {
    pub const ALL: [YangA; 2] = [YangA::TwoFifths, YangA::FourFifths];

    pub fn value(self) -> Rational {
        match self {
            YangA::TwoFifths => rat(2, 5),
            YangA::FourFifths => rat(4, 5),
        }
    }
}

impl fmt::Display for YangA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            YangA::TwoFifths => "2/5",
            YangA::FourFifths => "4/5",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Order {
    First,
    Second,
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Order::First => "L_x",
            Order::Second => "L_xx",
        })
    }
}

/// `L(., a)` for an exact parameter `a > 1/15`.
#[derive(Clone, Debug)]
pub struct YangL {
    a: Rational,
}

impl YangL {
    pub fn new(a: Rational) -> Result<Self, YangError> {
        if a <= rat(1, 15) {
            return Err(YangError::Parameter(crate::exact::format_rational(&a)));
        }
        Ok(YangL { a })
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    /// `(c1, u, c2, v)`.
    pub fn coefficients(&self) -> (Rational, Rational, Rational, Rational) {
        let a = &self.a;
        let a2 = a * a;
        let norm = &a2 * int(90) + int(2);
        let c1 = int(1) / &norm;
        let c2 = &a2 * int(45) / &norm;
        let u = (a * int(3) + int(1)) / int(3);
        let v = (a * int(15) - int(1)) / (a * int(45));
        (c1, u, c2, v)
    }

    fn quadratic(shift: &Rational) -> Poly {
        Poly::new(vec![shift.clone(), int(1), int(1)])
    }

    /// `L_x` or `L_xx` as an exact rational function of `x`, by the rule
    /// `d/dx log P = P'/P` followed by the quotient rule.
    pub fn derivative(&self, order: Order) -> RationalFn {
        let (c1, u, c2, v) = self.coefficients();
        let log_derivative = |c: &Rational, shift: &Rational| {
            let p = Self::quadratic(shift);
            RationalFn::univariate(p.derivative().scale(c), p).expect("quadratic with positive shift is nonzero")
        };
        let first = log_derivative(&c1, &u) + log_derivative(&c2, &v);
        match order {
            Order::First => first,
            Order::Second => first.derivative_x(),
        }
    }

    /// `L(x, a)` itself.
    pub fn eval_hp(&self, x: &Hp) -> Hp {
        let prec = x.precision();
        let (c1, u, c2, v) = self.coefficients();
        let base = x * x + x;
        let term = |c: &Rational, shift: &Rational| Hp::from_rational(c, prec) * (&base + Hp::from_rational(shift, prec)).ln();
        term(&c1, &u) + term(&c2, &v)
    }
}

/// One of the four printed closed forms.
#[derive(Clone, Debug)]
pub struct YangDeriv {
    pub order: Order,
    pub a: YangA,
    pub numerator: Poly,
    pub denominator: Poly,
}

impl YangDeriv {
    pub fn form(&self) -> RationalFn {
        RationalFn::univariate(self.numerator.clone(), self.denominator.clone()).expect("nonzero denominator")
    }
}

fn ip(coeffs: &[i64]) -> Poly {
    Poly::from_ints(coeffs)
}

/// The printed closed form of `L_x(x, a)` or `L_xx(x, a)`.
pub fn printed(order: Order, a: YangA) -> YangDeriv {
    let one_plus_2x = ip(&[1, 2]);
    let (num, den) = match (order, a) {
        (Order::First, YangA::TwoFifths) => (
            &(&one_plus_2x * &ip(&[61, 90, 90])) * &ip(&[3]),
            &(&ip(&[11, 15, 15]) * &ip(&[5, 18, 18])) * &ip(&[2]),
        ),
        (Order::First, YangA::FourFifths) => (
            &(&one_plus_2x * &ip(&[199, 180, 180])) * &ip(&[3]),
            &(&ip(&[17, 15, 15]) * &ip(&[11, 36, 36])) * &ip(&[2]),
        ),
        (Order::Second, YangA::TwoFifths) => (
            &ip(&[4993, 36546, 110526, 196560, 219780, 145800, 48600]) * &ip(&[-3]),
            &(&ip(&[11, 15, 15]).pow(2) * &ip(&[5, 18, 18]).pow(2)) * &ip(&[2]),
        ),
        (Order::Second, YangA::FourFifths) => (
            &ip(&[46537, 322206, 784446, 1118880, 1045440, 583200, 194400]) * &ip(&[-3]),
            &(&ip(&[17, 15, 15]).pow(2) * &ip(&[11, 36, 36]).pow(2)) * &ip(&[2]),
        ),
    };
    YangDeriv { order, a, numerator: num, denominator: den }
}

/// Outcome of comparing one printed form with the symbolic derivative.
#[derive(Clone, Debug, Serialize)]
pub struct ClosedFormCheck {
    pub order: Order,
    pub a: YangA,
    pub matches: bool,
}

/// Differentiate `L` symbolically at `a = 2/5` and `a = 4/5` and compare
/// with all four printed forms.
pub fn verify_closed_forms() -> Vec<ClosedFormCheck> {
    let mut out = Vec::new();
    for a in YangA::ALL {
        let l = YangL::new(a.value()).expect("2/5 and 4/5 exceed 1/15");
        for order in [Order::First, Order::Second] {
            let matches = l.derivative(order).equivalent(&printed(order, a).form());
            out.push(ClosedFormCheck { order, a, matches });
        }
    }
    out
}

pub fn all_closed_forms_match() -> bool {
    verify_closed_forms().iter().all(|c| c.matches)
}

fn eval_exact(order: Order, a: YangA, x: &Rational) -> Result<Rational, YangError> {
    if *x < int(0) {
        return Err(YangError::Domain(format!("x = {} is negative", crate::exact::format_rational(x))));
    }
    let d = printed(order, a);
    Ok(d.numerator.eval(x) / d.denominator.eval(x))
}

fn eval_hp(order: Order, a: YangA, x: &Hp) -> Hp {
    let d = printed(order, a);
    let prec = x.precision();
    HpPoly::new(&d.numerator, prec).eval(x) / HpPoly::new(&d.denominator, prec).eval(x)
}

/// Exact `L_x(x, a)` from the printed closed form, `x >= 0`.
pub fn lx(x: &Rational, a: YangA) -> Result<Rational, YangError> {
    eval_exact(Order::First, a, x)
}

/// Exact `L_xx(x, a)` from the printed closed form, `x >= 0`.
pub fn lxx(x: &Rational, a: YangA) -> Result<Rational, YangError> {
    eval_exact(Order::Second, a, x)
}

pub fn lx_hp(x: &Hp, a: YangA) -> Hp {
    eval_hp(Order::First, a, x)
}

pub fn lxx_hp(x: &Hp, a: YangA) -> Hp {
    eval_hp(Order::Second, a, x)
}

fn general_parts(a: &Hp) -> (Hp, Hp, Hp, Hp) {
    let a2 = a * a;
    let norm = &a2 * 90 + 2;
    let c1 = norm.recip();
    let c2 = &a2 * 45 / &norm;
    let u = (a * 3 + 1) / 3;
    let v = (a * 15 - 1) / (a * 45);
    (c1, u, c2, v)
}

/// `L_x(x, a)` for a real parameter, used for the irrational `a1`, `a2`.
pub fn lx_general(x: &Hp, a: &Hp) -> Hp {
    let (c1, u, c2, v) = general_parts(a);
    let base = x * x + x;
    let slope = x * 2 + 1;
    &slope * (c1 / (&base + u) + c2 / (&base + v))
}

/// `L_xx(x, a)` for a real parameter.
pub fn lxx_general(x: &Hp, a: &Hp) -> Hp {
    let (c1, u, c2, v) = general_parts(a);
    let base = x * x + x;
    let slope_sq = (x * 2 + 1).powi(2);
    let term = |c: Hp, shift: Hp| {
        let p = &base + shift;
        c * ((&p * 2) - &slope_sq) / (&p * &p)
    };
    term(c1, u) + term(c2, v)
}

/// Parameters of the inner sandwich bounds.
#[derive(Clone, Debug)]
pub struct SandwichParams {
    pub a1: Hp,
    pub a2: Hp,
    pub a3: Hp,
}

impl SandwichParams {
    pub fn compute(prec: Precision) -> Result<Self, SpecialError> {
        Ok(SandwichParams { a1: special::a1(prec), a2: special::a2(prec), a3: special::solve_a3(prec)? })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Inconclusive,
    Fails,
}

/// All ten values of the two five-term chains at one point, in the order
/// they are claimed to increase.
#[derive(Clone, Debug)]
pub struct SandwichReport {
    /// `L_x(x,4/5), L_x(x,a1), psi'(x+1), L_x(x,a2), L_x(x,2/5)`.
    pub first: [Hp; 5],
    /// `L_xx(x,2/5), L_xx(x,a3), psi''(x+1), L_xx(x,a1), L_xx(x,4/5)`.
    pub second: [Hp; 5],
    /// Smallest gap between neighbours in either chain.
    pub min_margin: Hp,
    pub verdict: Verdict,
}

/// Check both chains at `x > 0`. A gap counts as established only when
/// it exceeds ten times the error budget of the working precision.
pub fn sandwich_check(x: &Hp, params: &SandwichParams) -> Result<SandwichReport, YangError> {
    if !x.is_positive() {
        return Err(YangError::Domain("sandwich_check needs x > 0".into()));
    }
    let shifted = x + 1;
    let first = [
        lx_hp(x, YangA::FourFifths),
        lx_general(x, &params.a1),
        special::psi1(&shifted)?,
        lx_general(x, &params.a2),
        lx_hp(x, YangA::TwoFifths),
    ];
    let second = [
        lxx_hp(x, YangA::TwoFifths),
        lxx_general(x, &params.a3),
        special::psi2(&shifted)?,
        lxx_general(x, &params.a1),
        lxx_hp(x, YangA::FourFifths),
    ];
    let min_margin = first
        .windows(2)
        .chain(second.windows(2))
        .map(|w| &w[1] - &w[0])
        .reduce(|a, b| a.min(b))
        .expect("chains are nonempty");
    let budget = x.precision().error_budget();
    let verdict = if min_margin > &budget * 10 {
        Verdict::Holds
    } else if min_margin < -budget {
        Verdict::Fails
    } else {
        Verdict::Inconclusive
    };
    Ok(SandwichReport { first, second, min_margin, verdict })
}

fn check_s(s_positive: bool, s_below_one: bool) -> Result<(), YangError> {
    if s_positive && s_below_one {
        Ok(())
    } else {
        Err(YangError::Domain("s must lie in (0, 1)".into()))
    }
}

/// `(1-s) [1/(x+s+n) + sum_{i<n} 1/((x+i+1)(x+i+s))]`, a lower bound for
/// `psi(x+1) - psi(x+s)` when `x > 0` and `0 < s < 1`.
pub fn alzer_psi_diff_lower(x: &Hp, s: &Hp, n: u32) -> Result<Hp, YangError> {
    check_s(s.is_positive(), *s < Hp::one(s.precision()))?;
    let mut sum = (x + s + n as i64).recip();
    for i in 0..n as i64 {
        sum = sum + ((x + (i + 1)) * (x + s + i)).recip();
    }
    Ok((Hp::one(x.precision()) - s) * sum)
}

/// Exact form of [`alzer_psi_diff_lower`] for rational arguments.
pub fn alzer_psi_diff_lower_exact(x: &Rational, s: &Rational, n: u32) -> Result<Rational, YangError> {
    check_s(*s > int(0), *s < int(1))?;
    let mut sum = int(1) / (x + s + int(n as i64));
    for i in 0..n as i64 {
        sum += int(1) / ((x + int(i + 1)) * (x + s + int(i)));
    }
    Ok((int(1) - s) * sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: Precision = Precision::DEFAULT;

    #[test]
    fn printed_forms_at_small_integers() {
        assert_eq!(lx(&int(0), YangA::TwoFifths).unwrap(), rat(183, 110));
        assert_eq!(lx(&int(1), YangA::TwoFifths).unwrap(), rat(2169, 3362));
        assert_eq!(lx(&int(1), YangA::FourFifths).unwrap(), rat(5031, 7802));
        assert_eq!(lxx(&int(0), YangA::TwoFifths).unwrap(), rat(-14979, 6050));
        assert_eq!(lxx(&int(0), YangA::FourFifths).unwrap(), rat(-139611, 69938));
        assert!(lx(&int(-1), YangA::TwoFifths).is_err());
    }

    #[test]
    fn second_derivatives_negative() {
        for x in [rat(1, 10), int(1), int(5)] {
            for a in YangA::ALL {
                assert!(lxx(&x, a).unwrap() < int(0));
            }
        }
    }

    #[test]
    fn symbolic_and_printed_forms_agree() {
        let checks = verify_closed_forms();
        assert_eq!(checks.len(), 4);
        assert!(checks.iter().all(|c| c.matches), "{checks:?}");
    }

    #[test]
    fn perturbed_form_is_caught() {
        let l = YangL::new(rat(2, 5)).unwrap();
        let mut d = printed(Order::First, YangA::TwoFifths);
        d.numerator = &d.numerator + &Poly::from_ints(&[0, 0, 1]);
        assert!(!l.derivative(Order::First).equivalent(&d.form()));
    }

    #[test]
    fn parameter_domain() {
        assert!(YangL::new(rat(1, 15)).is_err());
        for k in 1..=40 {
            let l = YangL::new(rat(1, 15) + rat(k, 20)).unwrap();
            let (_, u, _, v) = l.coefficients();
            assert!(u > int(0) && v > int(0) && u != v);
            l.derivative(Order::Second).eval_x(&int(0)).unwrap();
        }
    }

    #[test]
    fn general_matches_printed() {
        let x = Hp::parse("0.37", P).unwrap();
        for a in YangA::ALL {
            let ah = Hp::from_rational(&a.value(), P);
            assert!((lx_general(&x, &ah) - lx_hp(&x, a)).abs() < Hp::ten_pow(-45, P));
            assert!((lxx_general(&x, &ah) - lxx_hp(&x, a)).abs() < Hp::ten_pow(-45, P));
        }
    }

    #[test]
    fn sandwich_at_one() {
        let params = SandwichParams::compute(P).unwrap();
        let r = sandwich_check(&Hp::one(P), &params).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert!(sandwich_check(&Hp::zero(P), &params).is_err());
    }

    #[test]
    fn alzer_lower_bound() {
        assert_eq!(alzer_psi_diff_lower_exact(&rat(1, 2), &rat(1, 2), 0).unwrap(), rat(1, 2));
        // (1/2)[1/4 + 2/3 + 1/5 + 2/21]
        let v = alzer_psi_diff_lower_exact(&rat(1, 2), &rat(1, 2), 3).unwrap();
        assert_eq!(v, rat(1, 2) * (rat(1, 4) + rat(2, 3) + rat(1, 5) + rat(2, 21)));
        assert!(alzer_psi_diff_lower_exact(&int(1), &int(1), 3).is_err());
        let half = Hp::from_ratio(1, 2, P);
        let hp = alzer_psi_diff_lower(&half, &half, 3).unwrap();
        assert!((hp - Hp::from_rational(&v, P)).abs() < Hp::ten_pow(-45, P));
    }
}
