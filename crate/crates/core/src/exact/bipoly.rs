use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::poly::Poly;
use super::rational::{format_rational, int, Rational};

/// Sparse polynomial in `x` and `y` with exact rational coefficients.
///
/// Keys are `(x-degree, y-degree)`. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        BiPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        BiPoly::monomial(c, 0, 0)
    }

    pub fn x() -> Self {
        BiPoly::monomial(Rational::one(), 1, 0)
    }

    pub fn y() -> Self {
        BiPoly::monomial(Rational::one(), 0, 1)
    }

    pub fn monomial(c: Rational, i: u32, j: u32) -> Self {
        let mut p = BiPoly::zero();
        p.add_term(i, j, c);
        p
    }

    /// Build from `(i, j, coefficient)` triples; repeated keys accumulate.
    pub fn from_terms<I: IntoIterator<Item = (u32, u32, Rational)>>(terms: I) -> Self {
        let mut p = BiPoly::zero();
        for (i, j, c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    /// Embed a univariate polynomial as a polynomial in `x`.
    pub fn from_poly_x(p: &Poly) -> Self {
        BiPoly::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| (k as u32, 0, c.clone())),
        )
    }

    /// Embed a univariate polynomial as a polynomial in `y`.
    pub fn from_poly_y(p: &Poly) -> Self {
        BiPoly::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| (0, k as u32, c.clone())),
        )
    }

    fn add_term(&mut self, i: u32, j: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((i, j)).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &Rational)> {
        self.terms.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, _)| i).max()
    }

    pub fn degree_y(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    /// Coefficient polynomials in `x` of `y^0, y^1, ..., y^deg_y`.
    pub fn coefficients_in_y(&self) -> Vec<Poly> {
        let Some(dy) = self.degree_y() else {
            return Vec::new();
        };
        let mut rows = vec![Vec::<Rational>::new(); dy as usize + 1];
        for (&(i, j), c) in &self.terms {
            let row = &mut rows[j as usize];
            if row.len() <= i as usize {
                row.resize(i as usize + 1, Rational::zero());
            }
            row[i as usize] = c.clone();
        }
        rows.into_iter().map(Poly::new).collect()
    }

    /// Horner in `y` over the coefficient polynomials in `x`.
    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        self.coefficients_in_y()
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, p| acc * y + p.eval(x))
    }

    /// Fix `x`, leaving a polynomial in `y`.
    pub fn eval_x(&self, x: &Rational) -> Poly {
        Poly::new(self.coefficients_in_y().iter().map(|p| p.eval(x)).collect())
    }

    /// Univariate view, if the polynomial does not involve `y`.
    pub fn to_poly_x(&self) -> Option<Poly> {
        match self.degree_y() {
            None => Some(Poly::zero()),
            Some(0) => self.coefficients_in_y().into_iter().next(),
            Some(_) => None,
        }
    }

    pub fn partial_x(&self) -> BiPoly {
        BiPoly::from_terms(
            self.terms()
                .filter(|&(i, _, _)| i > 0)
                .map(|(i, j, c)| (i - 1, j, c * int(i as i64))),
        )
    }

    pub fn partial_y(&self) -> BiPoly {
        BiPoly::from_terms(
            self.terms()
                .filter(|&(_, j, _)| j > 0)
                .map(|(i, j, c)| (i, j - 1, c * int(j as i64))),
        )
    }

    pub fn scale(&self, c: &Rational) -> BiPoly {
        BiPoly::from_terms(self.terms().map(|(i, j, a)| (i, j, a * c)))
    }

    pub fn pow(&self, k: u32) -> BiPoly {
        (0..k).fold(BiPoly::one(), |acc, _| &acc * self)
    }

    /// Substitute `x -> xs`, `y -> ys`.
    pub fn compose(&self, xs: &BiPoly, ys: &BiPoly) -> BiPoly {
        let max_i = self.degree_x().unwrap_or(0);
        let max_j = self.degree_y().unwrap_or(0);
        let mut x_pows = vec![BiPoly::one()];
        for k in 1..=max_i as usize {
            x_pows.push(&x_pows[k - 1] * xs);
        }
        let mut y_pows = vec![BiPoly::one()];
        for k in 1..=max_j as usize {
            y_pows.push(&y_pows[k - 1] * ys);
        }
        let mut out = BiPoly::zero();
        for (i, j, c) in self.terms() {
            out = &out + &(&x_pows[i as usize] * &y_pows[j as usize]).scale(c);
        }
        out
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (i, j, c)) in self.terms().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if n > 0 {
                write!(f, " {sign} ")?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            let magnitude = c.abs();
            let mut parts = Vec::new();
            if !magnitude.is_one() || (i == 0 && j == 0) {
                parts.push(format_rational(&magnitude));
            }
            for (var, e) in [("x", i), ("y", j)] {
                match e {
                    0 => {}
                    1 => parts.push(var.to_string()),
                    _ => parts.push(format!("{var}^{e}")),
                }
            }
            f.write_str(&parts.join("*"))?;
        }
        Ok(())
    }
}

impl<'a> Add<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (i, j, c) in rhs.terms() {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (i, j, c) in rhs.terms() {
            out.add_term(i, j, -c);
        }
        out
    }
}

impl<'a> Mul<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (i1, j1, a) in self.terms() {
            for (i2, j2, b) in rhs.terms() {
                out.add_term(i1 + i2, j1 + j2, a * b);
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly::from_terms(self.terms().map(|(i, j, c)| (i, j, -c)))
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<BiPoly> for BiPoly {
            type Output = BiPoly;
            fn $m(self, rhs: BiPoly) -> BiPoly { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a BiPoly> for BiPoly {
            type Output = BiPoly;
            fn $m(self, rhs: &BiPoly) -> BiPoly { (&self).$m(rhs) }
        }
        impl<'a> $tr<BiPoly> for &'a BiPoly {
            type Output = BiPoly;
            fn $m(self, rhs: BiPoly) -> BiPoly { self.$m(&rhs) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}

impl From<&Poly> for BiPoly {
    fn from(p: &Poly) -> Self {
        BiPoly::from_poly_x(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn cancelling_terms_are_dropped() {
        let p = &(BiPoly::x() + BiPoly::y()) - &BiPoly::y();
        assert_eq!(p, BiPoly::x());
        assert_eq!(p.terms().count(), 1);
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn value_at_origin_is_constant_term() {
        let p = BiPoly::from_terms([(0, 0, rat(-7, 3)), (2, 1, int(5)), (0, 4, int(1))]);
        assert_eq!(p.eval(&int(0), &int(0)), rat(-7, 3));
        // 5*4*3 + 81 - 7/3
        assert_eq!(p.eval(&int(2), &int(3)), int(141) - rat(7, 3));
    }

    #[test]
    fn compose_along_antidiagonal() {
        // (x + y) at y = 1 - x is 1
        let p = BiPoly::x() + BiPoly::y();
        let line = &BiPoly::one() - &BiPoly::x();
        assert_eq!(p.compose(&BiPoly::x(), &line), BiPoly::one());
    }

    #[test]
    fn partials() {
        // x^2 y^3
        let p = BiPoly::monomial(int(1), 2, 3);
        assert_eq!(p.partial_x(), BiPoly::monomial(int(2), 1, 3));
        assert_eq!(p.partial_y(), BiPoly::monomial(int(3), 2, 2));
    }

    #[test]
    fn display() {
        let p = BiPoly::from_terms([(0, 0, int(3)), (1, 2, int(-2)), (0, 1, int(1))]);
        assert_eq!(p.to_string(), "3 + y - 2*x*y^2");
    }
}
