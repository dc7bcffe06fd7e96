use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::bipoly::BiPoly;
use super::poly::Poly;
use super::rational::Rational;
use super::ExactError;

/// Quotient of two bivariate polynomials. Univariate functions use `x` only.
///
/// No cancellation is ever attempted; equivalence is decided by
/// cross-multiplication.
#[derive(Clone, Debug)]
pub struct RationalFn {
    num: BiPoly,
    den: BiPoly,
}

impl RationalFn {
    pub fn new(num: BiPoly, den: BiPoly) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        Ok(RationalFn { num, den })
    }

    /// Univariate quotient in `x`.
    pub fn univariate(num: Poly, den: Poly) -> Result<Self, ExactError> {
        RationalFn::new(BiPoly::from_poly_x(&num), BiPoly::from_poly_x(&den))
    }

    pub fn from_poly(num: BiPoly) -> Self {
        RationalFn { num, den: BiPoly::one() }
    }

    pub fn constant(c: Rational) -> Self {
        RationalFn::from_poly(BiPoly::constant(c))
    }

    pub fn x() -> Self {
        RationalFn::from_poly(BiPoly::x())
    }

    pub fn y() -> Self {
        RationalFn::from_poly(BiPoly::y())
    }

    pub fn numerator(&self) -> &BiPoly {
        &self.num
    }

    pub fn denominator(&self) -> &BiPoly {
        &self.den
    }

    /// `1/self`; fails on the zero function.
    pub fn recip(&self) -> Result<Self, ExactError> {
        RationalFn::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &RationalFn) -> Result<Self, ExactError> {
        Ok(self * &rhs.recip()?)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RationalFn { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn pow(&self, k: u32) -> Self {
        RationalFn { num: self.num.pow(k), den: self.den.pow(k) }
    }

    /// Quotient rule in `x`.
    pub fn derivative_x(&self) -> Self {
        RationalFn {
            num: &(&self.num.partial_x() * &self.den) - &(&self.num * &self.den.partial_x()),
            den: &self.den * &self.den,
        }
    }

    /// Quotient rule in `y`.
    pub fn derivative_y(&self) -> Self {
        RationalFn {
            num: &(&self.num.partial_y() * &self.den) - &(&self.num * &self.den.partial_y()),
            den: &self.den * &self.den,
        }
    }

    /// Substitute polynomials for `x` and `y`. Fails if the substituted
    /// denominator vanishes identically.
    pub fn compose(&self, xs: &BiPoly, ys: &BiPoly) -> Result<Self, ExactError> {
        RationalFn::new(self.num.compose(xs, ys), self.den.compose(xs, ys))
    }

    /// Substitute `x -> inner(x)` in a univariate function.
    pub fn compose_x(&self, inner: &Poly) -> Result<Self, ExactError> {
        self.compose(&BiPoly::from_poly_x(inner), &BiPoly::y())
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Result<Rational, ExactError> {
        let d = self.den.eval(x, y);
        if d.is_zero() {
            return Err(ExactError::PoleAt(format!(
                "({}, {})",
                super::format_rational(x),
                super::format_rational(y)
            )));
        }
        Ok(self.num.eval(x, y) / d)
    }

    /// Univariate evaluation (`y` is ignored by univariate functions).
    pub fn eval_x(&self, x: &Rational) -> Result<Rational, ExactError> {
        self.eval(x, &Rational::zero())
    }

    /// `num1*den2 - num2*den1`, the polynomial whose vanishing decides
    /// equivalence.
    pub fn cross_difference(&self, other: &RationalFn) -> BiPoly {
        &(&self.num * &other.den) - &(&other.num * &self.den)
    }

    /// Exact equivalence by expansion of the cross-multiplied difference.
    pub fn equivalent(&self, other: &RationalFn) -> bool {
        self.cross_difference(other).is_zero()
    }
}

/// Free-function form of [`RationalFn::equivalent`].
pub fn rationalfn_equal(f: &RationalFn, g: &RationalFn) -> bool {
    f.equivalent(g)
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

impl<'a> Add<&'a RationalFn> for &'a RationalFn {
    type Output = RationalFn;
    fn add(self, rhs: &RationalFn) -> RationalFn {
        if self.den == rhs.den {
            return RationalFn { num: &self.num + &rhs.num, den: self.den.clone() };
        }
        RationalFn {
            num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
    }
}

impl<'a> Sub<&'a RationalFn> for &'a RationalFn {
    type Output = RationalFn;
    fn sub(self, rhs: &RationalFn) -> RationalFn {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RationalFn> for &'a RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: &RationalFn) -> RationalFn {
        RationalFn { num: &self.num * &rhs.num, den: &self.den * &rhs.den }
    }
}

impl Neg for &RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<RationalFn> for RationalFn {
            type Output = RationalFn;
            fn $m(self, rhs: RationalFn) -> RationalFn { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a RationalFn> for RationalFn {
            type Output = RationalFn;
            fn $m(self, rhs: &RationalFn) -> RationalFn { (&self).$m(rhs) }
        }
        impl<'a> $tr<RationalFn> for &'a RationalFn {
            type Output = RationalFn;
            fn $m(self, rhs: RationalFn) -> RationalFn { self.$m(&rhs) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        -&self
    }
}

impl From<BiPoly> for RationalFn {
    fn from(p: BiPoly) -> Self {
        RationalFn::from_poly(p)
    }
}

impl From<Poly> for RationalFn {
    fn from(p: Poly) -> Self {
        RationalFn::from_poly(BiPoly::from_poly_x(&p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    fn c(n: i64) -> RationalFn {
        RationalFn::constant(int(n))
    }

    #[test]
    fn x_over_x_is_one() {
        let f = RationalFn::x().checked_div(&RationalFn::x()).unwrap();
        assert!(rationalfn_equal(&f, &c(1)));
        assert!(!rationalfn_equal(&f, &c(2)));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(RationalFn::new(BiPoly::one(), BiPoly::zero()).is_err());
        assert!(RationalFn::constant(int(0)).recip().is_err());
    }

    #[test]
    fn evaluation_reports_poles() {
        let f = c(1).checked_div(&RationalFn::x()).unwrap();
        assert_eq!(f.eval_x(&int(4)).unwrap(), rat(1, 4));
        assert!(matches!(f.eval_x(&int(0)), Err(ExactError::PoleAt(_))));
    }

    #[test]
    fn quotient_rule() {
        // d/dx 1/(1+x) = -1/(1+x)^2
        let one_plus_x = &c(1) + &RationalFn::x();
        let f = one_plus_x.recip().unwrap();
        let expected = -one_plus_x.pow(2).recip().unwrap();
        assert!(f.derivative_x().equivalent(&expected));
    }

    #[test]
    fn factored_difference_of_squares_in_two_variables() {
        // 3 - 2x - 2y - (x+y)^2 == (1 - x - y)(3 + x + y)
        let (x, y) = (RationalFn::x(), RationalFn::y());
        let s = &x + &y;
        let lhs = &(&(&c(3) - &x.scale(&int(2))) - &y.scale(&int(2))) - &s.pow(2);
        let rhs = &(&c(1) - &s) * &(&c(3) + &s);
        assert!(rationalfn_equal(&lhs, &rhs));
    }
}
