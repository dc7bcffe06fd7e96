//! Independent reference values for the integration tests.
//!
//! Gamma and beta are computed by the trapezoidal rule after a substitution
//! that maps the integral onto the whole real line with exponentially
//! decaying integrand; the rule then converges geometrically in the step
//! size. Nothing here touches the series used by the library.

#![allow(dead_code)]

use betabound::special::{Hp, Precision};

/// Precision for the quadrature; well above the 25 digits being checked.
pub const ORACLE: Precision = Precision::digits(45);

fn trapezoid(h: &Hp, lo: i64, hi: i64, f: impl Fn(&Hp) -> Hp) -> Hp {
    let mut sum = Hp::zero(h.precision());
    for k in lo..=hi {
        sum = sum + f(&(h * k));
    }
    sum * h
}

/// `Gamma(a) = int_R exp(a s - e^s) ds` for `a > 0`.
pub fn gamma_by_quadrature(a: &Hp) -> Hp {
    let h = Hp::from_ratio(1, 10, ORACLE);
    // e^(a s) < 1e-45 below s = -104/a; e^(-e^s) is negligible beyond s = 5.
    let lo = -((104.0 / a.to_f64()) * 10.0).ceil() as i64;
    trapezoid(&h, lo, 5 * 10, |s| (a * s - s.exp()).exp())
}

/// `B(a, b) = int_R sigma(s)^a sigma(-s)^b ds` with the logistic `sigma`.
pub fn beta_by_quadrature(a: &Hp, b: &Hp) -> Hp {
    let h = Hp::from_ratio(1, 4, ORACLE);
    let one = Hp::one(ORACLE);
    let lo = -((104.0 / a.to_f64()) * 4.0).ceil() as i64;
    let hi = ((104.0 / b.to_f64()) * 4.0).ceil() as i64;
    trapezoid(&h, lo, hi, |s| {
        let left = (&one + (-s).exp()).ln();
        let right = (&one + s.exp()).ln();
        (-(a * left) - b * right).exp()
    })
}

/// `|a - b| < 10^-digits`.
pub fn close(a: &Hp, b: &Hp, digits: i32) -> bool {
    (a - b).abs() < Hp::ten_pow(-digits, a.precision())
}
