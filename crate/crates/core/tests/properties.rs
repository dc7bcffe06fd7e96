use betabound::catalogue::catalogue;
use betabound::exact::{rat, Poly, RationalFn};
use betabound::proof::{big_f, big_g, d_f_dx, d_f_dy, theorem_margin};
use betabound::sign;
use betabound::special::{self, Hp, Precision};
use betabound::yang::{self, SandwichParams, Verdict};
use num_traits::Signed;
use proptest::prelude::*;

const P: Precision = Precision::DEFAULT;

fn hp(n: u32, d: u32) -> Hp {
    Hp::from_ratio(n as i128, d as i128, P)
}

fn tiny(e: i32) -> Hp {
    Hp::ten_pow(-e, P)
}

/// Rational in (0, 1] with denominator 10^4.
fn unit() -> impl Strategy<Value = u32> {
    1u32..=10_000
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn digamma_recurrences(n in 1u32..=100_000) {
        let x = hp(n, 10_000);
        let inv = x.recip();
        let d0 = special::psi(&(&x + 1)).unwrap() - special::psi(&x).unwrap() - &inv;
        let d1 = special::psi1(&(&x + 1)).unwrap() - special::psi1(&x).unwrap() + &inv * &inv;
        let d2 = special::psi2(&(&x + 1)).unwrap() - special::psi2(&x).unwrap() - inv.powi(3) * 2;
        let scale = inv.powi(3).max(Hp::one(P));
        prop_assert!(d0.abs() < tiny(25));
        prop_assert!((d1.abs() / &scale) < tiny(25));
        prop_assert!((d2.abs() / &scale) < tiny(25));
    }

    #[test]
    fn beta_recurrence_and_symmetry(a in unit(), b in unit()) {
        let (x, y) = (hp(a, 10_000), hp(b, 10_000));
        let bxy = special::beta(&x, &y).unwrap();
        let shifted = special::beta(&(&x + 1), &y).unwrap();
        let rel = (shifted - &bxy * &x / (&x + &y)).abs() / &bxy;
        prop_assert!(rel < tiny(25));
        prop_assert!(((special::beta(&y, &x).unwrap() - &bxy).abs() / &bxy) < tiny(25));
    }

    #[test]
    fn f_symmetric_and_g_antisymmetric(a in unit(), b in unit()) {
        let (x, y) = (hp(a, 10_000), hp(b, 10_000));
        prop_assert!((big_f(&x, &y).unwrap() - big_f(&y, &x).unwrap()).abs() < tiny(25));
        prop_assert!((big_g(&x, &y).unwrap() + big_g(&y, &x).unwrap()).abs() < tiny(25));
    }

    #[test]
    fn partials_match_central_differences(a in 10u32..=9_990, b in 10u32..=9_990) {
        let (x, y) = (hp(a, 10_000), hp(b, 10_000));
        let h = tiny(8);
        let fd_x = (big_f(&(&x + &h), &y).unwrap() - big_f(&(&x - &h), &y).unwrap()) / (&h * 2);
        let fd_y = (big_f(&x, &(&y + &h)).unwrap() - big_f(&x, &(&y - &h)).unwrap()) / (&h * 2);
        // O(h^2) truncation with third derivatives of size up to 1/x^3.
        let bound = tiny(16) * x.clone().min(y.clone()).recip().powi(3) * 10;
        prop_assert!((fd_x - d_f_dx(&x, &y).unwrap()).abs() < bound);
        prop_assert!((fd_y - d_f_dy(&x, &y).unwrap()).abs() < bound);
    }

    #[test]
    fn theorem_margin_positive_away_from_zero(a in 1u32..=1000, b in 1u32..=1000) {
        let m = theorem_margin(&hp(a, 1000), &hp(b, 1000)).unwrap();
        prop_assert!(m > &P.error_budget() * 10);
    }

    #[test]
    fn margin_near_zero_tends_to_g_at_zero(b in unit()) {
        let y = hp(b, 10_000);
        let m = theorem_margin(&tiny(6), &y).unwrap();
        let limit = big_g(&Hp::zero(P), &y).unwrap();
        prop_assert!((m - limit).abs() < tiny(4));
    }

    #[test]
    fn sandwich_holds_on_random_points(e in -4.0f64..2.0) {
        let params = SandwichParams::compute(P).unwrap();
        let x = Hp::from_f64(10f64.powf(e), P);
        prop_assert_eq!(yang::sandwich_check(&x, &params).unwrap().verdict, Verdict::Holds);
    }

    /// One sign change plus a positive value at `x1` gives positivity on
    /// `[0, x1]`, checked exactly at random sub-points.
    #[test]
    fn positive_below_implies_exact_positivity(
        head in prop::collection::vec(1i64..1000, 1..4),
        tail in prop::collection::vec(-1000i64..=-1, 1..4),
        x1 in 1i64..=100,
        samples in prop::collection::vec(0i64..=1000, 100),
    ) {
        let coeffs: Vec<i64> = head.iter().chain(tail.iter()).copied().collect();
        let p = Poly::from_ints(&coeffs);
        let x1 = rat(x1, 100);
        let check = sign::positive_below(&p, &x1).unwrap();
        if check.holds {
            for s in samples {
                prop_assert!(p.eval(&(&x1 * rat(s, 1000))).is_positive());
            }
        } else {
            prop_assert!(!p.eval(&x1).is_positive());
        }
    }

    #[test]
    fn rational_function_arithmetic(a in -20i64..20, b in 1i64..20, c in -20i64..20) {
        let x = RationalFn::x();
        let y = RationalFn::y();
        let k = RationalFn::constant(rat(a, b));
        let lhs = &(&x + &k) * &(&y + &RationalFn::constant(rat(c, 1)));
        let rhs = &(&(&x * &y) + &(&k * &y)) + &(&(&x + &k) * &RationalFn::constant(rat(c, 1)));
        prop_assert!(lhs.equivalent(&rhs));
        prop_assert!(!lhs.equivalent(&(&rhs + &RationalFn::constant(rat(1, b + 1)))));
    }
}

#[test]
fn catalogue_polynomials_positive_below_their_points() {
    let cat = catalogue();
    let points = [rat(3, 20), rat(1, 5), rat(1, 1), rat(1, 1), rat(9, 25)];
    for (p, x1) in cat.p.iter().zip(points) {
        assert!(sign::positive_below(p, &x1).unwrap().holds);
        for k in 0..=100 {
            assert!(p.eval(&(&x1 * rat(k, 100))).is_positive());
        }
    }
}
