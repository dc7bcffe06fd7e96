//! Every displayed algebraic identity of the argument as a pair of exact
//! rational functions. Univariate identities are written in `x` even when
//! the displayed variable is `y`.

use crate::catalogue::catalogue;
use crate::exact::{int, rat, BiPoly, Poly, Rational, RationalFn};
use crate::yang::{printed, Order, YangA};

/// `lhs == rhs` as rational functions.
#[derive(Clone, Debug)]
pub struct Identity {
    pub id: &'static str,
    pub claim: &'static str,
    pub lhs: RationalFn,
    pub rhs: RationalFn,
}

impl Identity {
    /// The same identity with a constant added to one side; a sound checker
    /// must reject it.
    pub fn perturbed(&self) -> Identity {
        Identity { rhs: &self.rhs + &cr(rat(1, 1_000_000)), ..self.clone() }
    }

    pub fn holds(&self) -> bool {
        self.lhs.equivalent(&self.rhs)
    }

    /// Number of terms in the cross-multiplied difference; zero when the
    /// identity holds.
    pub fn expanded_terms(&self) -> usize {
        self.lhs.cross_difference(&self.rhs).terms().count()
    }
}

fn c(n: i64) -> RationalFn {
    RationalFn::constant(int(n))
}

fn cr(r: Rational) -> RationalFn {
    RationalFn::constant(r)
}

fn x() -> RationalFn {
    RationalFn::x()
}

fn y() -> RationalFn {
    RationalFn::y()
}

fn poly(coeffs: &[i64]) -> RationalFn {
    RationalFn::from(Poly::from_ints(coeffs))
}

fn from_poly(p: &Poly) -> RationalFn {
    RationalFn::from(p.clone())
}

fn div(a: &RationalFn, b: &RationalFn) -> RationalFn {
    a.checked_div(b).expect("denominator is a nonzero polynomial")
}

fn lx(a: YangA) -> RationalFn {
    printed(Order::First, a).form()
}

fn lxx(a: YangA) -> RationalFn {
    printed(Order::Second, a).form()
}

/// `1 + x + y - 2xy`.
fn big_d() -> RationalFn {
    &(&(&c(1) + &x()) + &y()) - &(&x() * &y()).scale(&int(2))
}

/// Rational part of `G`: `-2(x - y)/(1 + x + y - 2xy)`.
fn g_rational() -> RationalFn {
    div(&(&x() - &y()).scale(&int(-2)), &big_d())
}

/// Substitute bivariate polynomials for `x` and `y`.
fn subst(f: &RationalFn, xs: BiPoly, ys: BiPoly) -> RationalFn {
    f.compose(&xs, &ys).expect("substituted denominator stays nonzero")
}

fn bx(coeffs: &[(i64, i64)]) -> BiPoly {
    BiPoly::from_poly_x(&Poly::new(coeffs.iter().map(|&(n, d)| rat(n, d)).collect()))
}

fn by(coeffs: &[(i64, i64)]) -> BiPoly {
    BiPoly::from_poly_y(&Poly::new(coeffs.iter().map(|&(n, d)| rat(n, d)).collect()))
}

/// `-(913 + 350x - 1250x^2) / (2 (17 + 16x - 25x^2)^2)`.
fn g_line_rational() -> RationalFn {
    -div(&poly(&[913, 350, -1250]), &poly(&[17, 16, -25]).pow(2).scale(&int(2)))
}

fn remark_identity_1() -> Identity {
    let (one_m_x, one_m_y) = (&c(1) - &x(), &c(1) - &y());
    let (one_p_x, one_p_y) = (&c(1) + &x(), &c(1) + &y());
    let ratio = div(&(&one_m_x * &one_m_y), &(&one_p_x * &one_p_y));
    let lhs = &(&(&x() + &y()) - &(&x() * &y())) - &(&c(1) - &ratio.scale(&rat(5, 2)));
    let cubic = &(&(&c(3) - &x().scale(&int(2))) - &y().scale(&int(2))) - &(&x() * &y()).scale(&int(2));
    let rhs = div(&(&(&one_m_x * &one_m_y) * &cubic), &(&one_p_x * &one_p_y).scale(&int(2)));
    Identity {
        id: "intro.remark-identity-1",
        claim: "x+y-xy-[1-(5/2)(1-x)(1-y)/((1+x)(1+y))] = (1-x)(1-y)(3-2x-2y-2xy)/(2(1+x)(1+y))",
        lhs,
        rhs,
    }
}

fn remark_identity_2() -> Identity {
    let s = &x() + &y();
    Identity {
        id: "intro.remark-identity-2",
        claim: "3-2x-2y-(x+y)^2 = (1-x-y)(3+x+y)",
        lhs: &(&(&c(3) - &x().scale(&int(2))) - &y().scale(&int(2))) - &s.pow(2),
        rhs: &(&c(1) - &s) * &(&c(3) + &s),
    }
}

fn remark_gap() -> Identity {
    let base = &(&c(3) - &x().scale(&int(2))) - &y().scale(&int(2));
    let s = &x() + &y();
    Identity {
        id: "intro.remark-gap",
        claim: "(3-2x-2y-2xy) - (3-2x-2y-(x+y)^2) = x^2 + y^2 >= 0",
        lhs: &(&base - &(&x() * &y()).scale(&int(2))) - &(&base - &s.pow(2)),
        rhs: &x().pow(2) + &y().pow(2),
    }
}

fn bound_gap() -> Identity {
    let s = &x() + &y();
    let p = &x() * &y();
    let lhs = &(&c(1) - &div(&p, &s)) - &(&c(1) - &div(&p.scale(&int(2)), &(&s + &c(1))));
    let rhs = div(&(&p * &(&s - &c(1))), &(&s * &(&s + &c(1))));
    Identity {
        id: "remark.bound-gap",
        claim: "(1 - xy/(x+y)) - (1 - 2xy/(x+y+1)) = xy(x+y-1)/((x+y)(x+y+1))",
        lhs,
        rhs,
    }
}

fn lemma_quadratic() -> RationalFn {
    poly(&[1, 2, -2])
}

fn f_derivative() -> Identity {
    let lhs = &div(&c(2), &poly(&[1, 2])) - &div(&poly(&[2, -4]), &lemma_quadratic());
    let rhs = div(&poly(&[0, 4, 4]), &(&poly(&[1, 2]) * &lemma_quadratic()));
    Identity {
        id: "diagonal.f-derivative",
        claim: "d/dx[-log(1 - 2x^2/(1+2x))] = 4x(1+x)/((1+2x)(1+2x-2x^2)), so f' = 2 fhat",
        lhs,
        rhs,
    }
}

fn fhat_rational_term() -> RationalFn {
    div(&poly(&[0, 2, 2]), &(&poly(&[1, 2]) * &lemma_quadratic()))
}

fn fhat_derivative_rational() -> RationalFn {
    div(&poly(&[2, 4, 4, 16, 8]), &(&poly(&[1, 2]).pow(2) * &lemma_quadratic().pow(2)))
}

fn fhat_derivative() -> Identity {
    Identity {
        id: "diagonal.fhat-derivative",
        claim: "d/dx[2x(1+x)/((1+2x)(1+2x-2x^2))] = 2(1+2x+2x^2+8x^3+4x^4)/((1+2x)^2(1+2x-2x^2)^2)",
        lhs: fhat_rational_term().derivative_x(),
        rhs: fhat_derivative_rational(),
    }
}

fn diagonal_lower_bound() -> Identity {
    let lx_2x = lx(YangA::TwoFifths).compose_x(&Poly::from_ints(&[0, 2])).expect("nonzero");
    let lhs = &(&lx(YangA::FourFifths) - &lx_2x.scale(&int(2))) + &fhat_derivative_rational();
    let den = [
        poly(&[1, 2]).pow(2),
        lemma_quadratic().pow(2),
        poly(&[17, 15, 15]),
        poly(&[11, 36, 36]),
        poly(&[11, 30, 60]),
        poly(&[5, 36, 72]),
    ]
    .iter()
    .fold(c(2), |acc, f| &acc * f);
    Identity {
        id: "diagonal.lower-bound",
        claim: "L_x(x,4/5) - 2 L_x(2x,2/5) + 2(1+2x+2x^2+8x^3+4x^4)/((1+2x)^2(1+2x-2x^2)^2) equals the degree-12 quotient",
        lhs,
        rhs: div(&from_poly(&catalogue().diagonal_numerator), &den),
    }
}

fn case1_q_identity() -> Identity {
    let s = &x() + &y();
    let mut bracket = div(&c(1), &(&s + &c(3)));
    for i in 0..3 {
        let a = &y() + &c(i + 1);
        let b = &(&y() + &c(i)) + &x();
        bracket = &bracket + &div(&c(1), &(&a * &b));
    }
    let tail = div(&(&x() * &(&c(1) + &x())).scale(&int(2)), &(&(&c(1) + &s) * &big_d()));
    let lhs = &(&(&(&c(1) - &x()) * &bracket) - &div(&c(1), &s)) + &tail;
    let mut den = big_d();
    for j in 1..=3 {
        den = &den * &(&(&y() + &c(j)) * &(&s + &c(j)));
    }
    let q = RationalFn::from(catalogue().big_q.clone());
    Identity {
        id: "case1.Q-identity",
        claim: "(1-x)[1/(x+y+3) + sum_{i<3} 1/((y+i+1)(y+i+x))] - 1/(x+y) + 2x(1+x)/((1+x+y)(1+x+y-2xy)) = xQ(x,y)/((1+x+y-2xy) prod_j (y+j)(x+y+j))",
        lhs,
        rhs: div(&(&x() * &q), &den),
    }
}

fn case1_q_boundary() -> Identity {
    let q = RationalFn::from(catalogue().big_q.clone());
    let lhs = subst(&q, BiPoly::x(), bx(&[(1, 1), (-1, 1)]));
    let one_m_x = poly(&[1, -1]);
    let inner = &(&c(7137) + &(&one_m_x * &poly(&[24365, 0, 375]))) + &poly(&[0, 0, 5300]);
    let bracket = &c(252) + &(&poly(&[-1, 5]) * &inner);
    Identity {
        id: "case1.Q-boundary",
        claim: "Q(x,1-x) = (4/625)(1-x)[252 + (5x-1)(7137 + (1-x)(24365 + 375x^2) + 5300x^2)]",
        lhs,
        rhs: (&one_m_x * &bracket).scale(&rat(4, 625)),
    }
}

fn case2_g_rational() -> Identity {
    let common = &(&c(1) + &(&x() + &y())) * &big_d();
    let dx = div(&(&y() * &(&c(1) + &y())).scale(&int(2)), &common);
    let dy = div(&(&x() * &(&c(1) + &x())).scale(&int(2)), &common);
    Identity {
        id: "case2.G-rational",
        claim: "2y(1+y)/((1+x+y)(1+x+y-2xy)) - 2x(1+x)/((1+x+y)(1+x+y-2xy)) = -2(x-y)/(1+x+y-2xy)",
        lhs: &dx - &dy,
        rhs: g_rational(),
    }
}

fn d_g_dx_rational() -> RationalFn {
    -div(&(&(&c(1) + &y().scale(&int(2))) - &y().pow(2).scale(&int(2))).scale(&int(2)), &big_d().pow(2))
}

fn case2_a1_dgdx() -> Identity {
    Identity {
        id: "case2.A1.dGdx",
        claim: "d/dx[-2(x-y)/(1+x+y-2xy)] = -2(1+2y-2y^2)/(1+x+y-2xy)^2",
        lhs: g_rational().derivative_x(),
        rhs: d_g_dx_rational(),
    }
}

fn mixed_rhs() -> RationalFn {
    div(&(&y() - &x()).scale(&int(12)), &big_d().pow(3))
}

fn case2_a1_mixed_xy() -> Identity {
    Identity {
        id: "case2.A1.mixed-xy",
        claim: "d^2 G/dx dy = 12(y-x)/(1+x+y-2xy)^3",
        lhs: g_rational().derivative_x().derivative_y(),
        rhs: mixed_rhs(),
    }
}

fn case2_a1_mixed_yx() -> Identity {
    Identity {
        id: "case2.A1.mixed-yx",
        claim: "d^2 G/dy dx = 12(y-x)/(1+x+y-2xy)^3",
        lhs: g_rational().derivative_y().derivative_x(),
        rhs: mixed_rhs(),
    }
}

fn case2_a1_g_line() -> Identity {
    Identity {
        id: "case2.A1.g-line",
        claim: "-2(1+2y-2y^2)/(1+x+y-2xy)^2 at y = x + 9/25 equals -(913+350x-1250x^2)/(2(17+16x-25x^2)^2)",
        lhs: subst(&d_g_dx_rational(), BiPoly::x(), bx(&[(9, 25), (1, 1)])),
        rhs: g_line_rational(),
    }
}

fn case2_a2() -> Identity {
    let num = &from_poly(&catalogue().p[0]) + &poly(&[0, 0, 0, 0, 0, 307230, 823500, 675000]);
    let den = [poly(&[17, 15, 15]), poly(&[17, 16, -25]).pow(2), poly(&[11, 36, 36])]
        .iter()
        .fold(c(2), |acc, f| &acc * f);
    Identity {
        id: "case2.A2.identity",
        claim: "L_x(x,4/5) - (913+350x-1250x^2)/(2(17+16x-25x^2)^2) = (p0(x) + 307230x^5 + 823500x^6 + 675000x^7)/(2(17+15x+15x^2)(17+16x-25x^2)^2(11+36x+36x^2))",
        lhs: &lx(YangA::FourFifths) + &g_line_rational(),
        rhs: div(&num, &den),
    }
}

fn g_prime_rational() -> RationalFn {
    div(&poly(&[11633, -21600, -13125, 31250]), &poly(&[17, 16, -25]).pow(3))
}

fn case2_a3_derivative() -> Identity {
    Identity {
        id: "case2.A3.g-derivative",
        claim: "d/dx[-(913+350x-1250x^2)/(2(17+16x-25x^2)^2)] = (11633-21600x-13125x^2+31250x^3)/(17+16x-25x^2)^3",
        lhs: g_line_rational().derivative_x(),
        rhs: g_prime_rational(),
    }
}

fn case2_a3() -> Identity {
    let num = &poly(&[-1, 10]).scale(&int(127679911)) + &(&x() * &from_poly(&catalogue().p[1]));
    let den = [poly(&[17, 15, 15]).pow(2), poly(&[17, 16, -25]).pow(3), poly(&[11, 36, 36]).pow(2)]
        .iter()
        .fold(c(2), |acc, f| &acc * f);
    Identity {
        id: "case2.A3.identity",
        claim: "L_xx(x,4/5) + (11633-21600x-13125x^2+31250x^3)/(17+16x-25x^2)^3 = -(127679911(10x-1) + x p1(x))/(2(17+15x+15x^2)^2(17+16x-25x^2)^3(11+36x+36x^2)^2)",
        lhs: &lxx(YangA::FourFifths) + &g_prime_rational(),
        rhs: -div(&num, &den),
    }
}

fn case2_a5_second() -> Identity {
    let g0 = subst(&g_rational(), BiPoly::zero(), BiPoly::y());
    Identity {
        id: "case2.A5.G0-second-derivative",
        claim: "d^2/dy^2 [2y/(1+y)] = -4/(1+y)^3, the rational part of d^2/dy^2 G(0,y)",
        lhs: g0.derivative_y().derivative_y(),
        rhs: div(&c(-4), &(&c(1) + &y()).pow(3)),
    }
}

fn case2_a5() -> Identity {
    let den = [poly(&[1, 1]).pow(3), poly(&[11, 15, 15]).pow(2), poly(&[5, 18, 18]).pow(2)]
        .iter()
        .fold(c(2), |acc, f| &acc * f);
    Identity {
        id: "case2.A5.identity",
        claim: "-4/(1+y)^3 - L_yy(y,2/5) = -p2(y)/(2(1+y)^3(11+15y+15y^2)^2(5+18y+18y^2)^2)",
        lhs: &div(&c(-4), &poly(&[1, 1]).pow(3)) - &lxx(YangA::TwoFifths),
        rhs: -div(&from_poly(&catalogue().p[2]), &den),
    }
}

fn b1_line_rational() -> RationalFn {
    div(&poly(&[13, 2150, -1250]), &poly(&[8, 34, -25]).pow(2).scale(&int(2)))
}

fn case2_b1_line() -> Identity {
    let dgdy = g_rational().derivative_y();
    let on_line = subst(&dgdy, by(&[(-9, 25), (1, 1)]), BiPoly::y());
    let rhs = subst(&b1_line_rational(), BiPoly::y(), BiPoly::y());
    Identity {
        id: "case2.B1.dGdy-line",
        claim: "d/dy[-2(x-y)/(1+x+y-2xy)] at x = y - 9/25 equals (13+2150y-1250y^2)/(2(8+34y-25y^2)^2)",
        lhs: on_line,
        rhs,
    }
}

fn case2_b1() -> Identity {
    let inner = &poly(&[4404553, 18643550, 55576875, 88996875, 9375000])
        + &(&(&poly(&[0, 0, 0, 0, 843750]) * &poly(&[1, -1])) * &poly(&[57, 50]));
    let num = &c(5275352) + &(&poly(&[-9, 25]) * &inner);
    let den = [poly(&[11, 15, 15]), poly(&[5, 18, 18]), poly(&[8, 34, -25]).pow(2)]
        .iter()
        .fold(c(6250), |acc, f| &acc * f);
    Identity {
        id: "case2.B1.identity",
        claim: "(13+2150y-1250y^2)/(2(8+34y-25y^2)^2) - L_y(y,2/5) = [5275352 + (25y-9)(4404553 + ... + 843750y^4(1-y)(57+50y))]/(6250(11+15y+15y^2)(5+18y+18y^2)(8+34y-25y^2)^2)",
        lhs: &b1_line_rational() - &lx(YangA::TwoFifths),
        rhs: div(&num, &den),
    }
}

/// Numerator of the B1 quotient, used for its positivity certificate.
pub(crate) fn b1_numerator() -> Poly {
    let inner = &Poly::from_ints(&[4404553, 18643550, 55576875, 88996875, 9375000])
        + &(&(&Poly::from_ints(&[0, 0, 0, 0, 843750]) * &Poly::from_ints(&[1, -1])) * &Poly::from_ints(&[57, 50]));
    &Poly::from_ints(&[5275352]) + &(&Poly::from_ints(&[-9, 25]) * &inner)
}

fn case2_b2_second() -> Identity {
    let on_line = subst(&g_rational(), BiPoly::x(), BiPoly::constant(rat(9, 25)));
    Identity {
        id: "case2.B2.second-derivative",
        claim: "d^2/dx^2 of the rational part of G(x,9/25) equals 25564/(34+7x)^3",
        lhs: on_line.derivative_x().derivative_x(),
        rhs: div(&c(25564), &poly(&[34, 7]).pow(3)),
    }
}

fn case2_b2() -> Identity {
    let num = &from_poly(&catalogue().p[3]) + &poly(&[0, 0, 0, 0, 0, 0, 0, 0, 0, 200037600]);
    let den = [poly(&[34, 7]).pow(3), poly(&[17, 15, 15]).pow(2), poly(&[11, 36, 36]).pow(2)]
        .iter()
        .fold(c(2), |acc, f| &acc * f);
    Identity {
        id: "case2.B2.identity",
        claim: "L_xx(x,4/5) + 25564/(34+7x)^3 = -(p3(x) + 200037600x^9)/(2(34+7x)^3(17+15x+15x^2)^2(11+36x+36x^2)^2)",
        lhs: &lxx(YangA::FourFifths) + &div(&c(25564), &poly(&[34, 7]).pow(3)),
        rhs: -div(&num, &den),
    }
}

fn case2_c1_derivative() -> Identity {
    let at_zero = subst(&g_rational().derivative_y(), BiPoly::zero(), BiPoly::y());
    Identity {
        id: "case2.C1.dGdy-at-zero",
        claim: "d/dy of the rational part of G at x = 0 equals 2/(y+1)^2",
        lhs: at_zero,
        rhs: div(&c(2), &(&y() + &c(1)).pow(2)),
    }
}

fn case2_c1() -> Identity {
    let den = [poly(&[1, 1]).pow(2), poly(&[11, 15, 15]), poly(&[5, 18, 18])]
        .iter()
        .fold(c(2), |acc, f| &acc * f);
    Identity {
        id: "case2.C1.identity",
        claim: "2/(y+1)^2 - L_y(y,2/5) = p4(y)/(2(1+y)^2(11+15y+15y^2)(5+18y+18y^2))",
        lhs: &div(&c(2), &poly(&[1, 1]).pow(2)) - &lx(YangA::TwoFifths),
        rhs: div(&from_poly(&catalogue().p[4]), &den),
    }
}

/// All identities, in the order the argument uses them.
pub struct IdentityCatalogue;

impl IdentityCatalogue {
    pub fn all() -> Vec<Identity> {
        vec![
            remark_identity_1(),
            remark_identity_2(),
            remark_gap(),
            bound_gap(),
            f_derivative(),
            fhat_derivative(),
            diagonal_lower_bound(),
            case1_q_identity(),
            case1_q_boundary(),
            case2_g_rational(),
            case2_a1_dgdx(),
            case2_a1_mixed_xy(),
            case2_a1_mixed_yx(),
            case2_a1_g_line(),
            case2_a2(),
            case2_a3_derivative(),
            case2_a3(),
            case2_a5_second(),
            case2_a5(),
            case2_b1_line(),
            case2_b1(),
            case2_b2_second(),
            case2_b2(),
            case2_c1_derivative(),
            case2_c1(),
        ]
    }

    pub fn get(id: &str) -> Option<Identity> {
        Self::all().into_iter().find(|i| i.id == id)
    }
}



#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_identity_holds() {
        for identity in IdentityCatalogue::all() {
            assert!(identity.holds(), "{} does not hold", identity.id);
        }
    }

    #[test]
    fn perturbations_are_detected() {
        for identity in IdentityCatalogue::all() {
            assert!(!Identity::perturbed(&identity).holds(), "{} survives perturbation", identity.id);
        }
    }

    #[test]
    fn ids_are_unique() {
        let mut ids: Vec<_> = IdentityCatalogue::all().iter().map(|i| i.id).collect();
        let n = ids.len();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), n);
    }
}
