use std::collections::HashMap;
use std::sync::OnceLock;

use num_traits::{Signed, Zero};
use rayon::prelude::*;

use super::core_fns::{big_f, big_g, d_f_dy, f, fhat, g, remark_sandwich};
use super::identities::{b1_numerator, Identity, IdentityCatalogue};
use super::{positivity_status, vanishing_status, Method, ProofError, ProofStep, Status};
use crate::catalogue::{catalogue, q_from_components};
use crate::digits::PrintedPrefix;
use crate::exact::{format_rational, int, rat, BiPoly, Poly, Rational};
use crate::sign::{self, SignError, SignKind};
use crate::special::{self, Hp, Precision};
use crate::yang::{self, SandwichParams};

#[derive(Clone, Debug)]
pub struct ReplayConfig {
    pub prec: Precision,
    /// Width of the root enclosures.
    pub width: Rational,
}

impl Default for ReplayConfig {
    fn default() -> Self {
        ReplayConfig { prec: Precision::DEFAULT, width: sign::default_width() }
    }
}

impl ReplayConfig {
    fn hp(&self, r: &Rational) -> Hp {
        Hp::from_rational(r, self.prec)
    }
}

fn identities() -> &'static HashMap<&'static str, Identity> {
    static ALL: OnceLock<HashMap<&'static str, Identity>> = OnceLock::new();
    ALL.get_or_init(|| IdentityCatalogue::all().into_iter().map(|i| (i.id, i)).collect())
}

fn identity_step(id: &str, depends: &[&str]) -> ProofStep {
    let identity = &identities()[id];
    let residual = identity.expanded_terms();
    ProofStep::new(id, identity.claim, Method::ExactIdentity)
        .evidence("cross_multiplied_difference_terms", residual)
        .check(residual == 0)
        .depends(depends)
}

fn fmt_hp(v: &Hp) -> String {
    v.to_sci_string(25)
}

/// Run every point of a sample and fold the positivity statuses.
fn sampled_positive(
    step: ProofStep,
    points: impl IntoIterator<Item = (String, Result<Hp, ProofError>)>,
) -> ProofStep {
    let mut step = step;
    let mut worst: Option<(String, Hp)> = None;
    let mut count = 0usize;
    for (label, value) in points {
        count += 1;
        match value {
            Ok(v) => {
                step = step.status(positivity_status(&v));
                if worst.as_ref().is_none_or(|(_, w)| v < *w) {
                    worst = Some((label, v));
                }
            }
            Err(e) => {
                step = step.evidence(&format!("error at {label}"), e).status(Status::Failed);
            }
        }
    }
    step = step.evidence("samples", count);
    if let Some((label, v)) = worst {
        step = step.evidence("min_value", fmt_hp(&v)).evidence("argmin", label);
    }
    step
}

fn prefix_step(step: ProofStep, printed: &str, value: &Hp) -> ProofStep {
    let prefix = PrintedPrefix::parse(printed).expect("literal prefix");
    step.evidence("value", fmt_hp(value))
        .evidence("printed", format!("{printed}..."))
        .evidence("truncation_matches", prefix.truncation_matches(value))
        .check(prefix.within_one_ulp(value))
}

fn positive_coefficients(p: &Poly) -> bool {
    p.coeffs().iter().all(|c| c.is_positive())
}

fn sign_check_step(
    step: ProofStep,
    result: Result<sign::SignCheck, SignError>,
    printed_value: Option<Rational>,
) -> ProofStep {
    step.or_fail(result, |s, check| {
        let cert = check.report.certificate.clone().expect("half-line checks record a certificate");
        let mut s = s
            .evidence("pattern", format!("{:?}", check.report.pattern.kind))
            .evidence("certificate", &cert)
            .check(check.holds);
        if let Some(expected) = printed_value {
            s = s.evidence("printed_value", format_rational(&expected)).check(cert.value == expected);
        }
        s
    })
}

/// Preliminaries: the comparison of earlier bounds, the constants, the
/// sandwich bounds and the catalogue polynomials with their roots.
pub fn replay_preliminaries(cfg: &ReplayConfig) -> Vec<ProofStep> {
    let prec = cfg.prec;
    let mut steps = vec![
        identity_step("intro.remark-identity-1", &[]),
        identity_step("intro.remark-gap", &[]),
        identity_step("intro.remark-identity-2", &[]),
    ];

    let alpha = special::alpha(prec);
    let five_halves = Hp::from_ratio(5, 2, prec);
    steps.push(prefix_step(
        ProofStep::new("intro.alpha", "alpha = 2 pi^2/3 - 4 = 2.57973... exceeds 5/2", Method::HighPrecision)
            .status(positivity_status(&(&alpha - &five_halves))),
        "2.57973",
        &alpha,
    ));

    let step = ProofStep::new("intro.alzer-max", "max over x >= 1 of 1/x^2 - Gamma(x)^2/Gamma(2x) is 0.08731...", Method::HighPrecision);
    steps.push(step.or_fail(special::maximize_delta(prec), |s, m| {
        prefix_step(s.evidence("argmax", fmt_hp(&m.argmax)), "0.08731", &m.value)
    }));

    steps.push(identity_step("remark.bound-gap", &[]));

    for check in yang::verify_closed_forms() {
        let id = format!("sandwich.closed-form.{}.{}", check.order, check.a);
        let claim = format!("printed {}(x,{}) equals the symbolic derivative of L(x,{})", check.order, check.a, check.a);
        steps.push(ProofStep::new(&id, &claim, Method::ExactIdentity).check(check.matches));
    }

    steps.push(prefix_step(
        ProofStep::new("sandwich.a1", "a1 = (40 + 3 sqrt 205)/105 = 0.79003...", Method::HighPrecision),
        "0.79003",
        &special::a1(prec),
    ));
    steps.push(prefix_step(
        ProofStep::new("sandwich.a2", "a2 = (45 - 4pi^2 + 3 sqrt(4pi^4 - 80pi^2 + 405))/(30(pi^2 - 9)) = 0.47053...", Method::HighPrecision),
        "0.47053",
        &special::a2(prec),
    ));
    let step = ProofStep::new("sandwich.a3", "a3 = 0.43218... solves L_xx(0,a) = psi''(1)", Method::HighPrecision);
    steps.push(step.or_fail(special::solve_a3(prec), |s, a3| {
        let residual = yang::lxx_general(&Hp::zero(prec), &a3) - special::psi2(&Hp::one(prec)).expect("psi'' at 1");
        prefix_step(s, "0.43218", &a3)
            .evidence("residual", fmt_hp(&residual))
            .check(residual.abs() < Hp::ten_pow(-12, prec))
    }));

    let step = ProofStep::new(
        "sandwich.sandwich",
        "L_x(x,4/5) < L_x(x,a1) < psi'(x+1) < L_x(x,a2) < L_x(x,2/5) and L_xx(x,2/5) < L_xx(x,a3) < psi''(x+1) < L_xx(x,a1) < L_xx(x,4/5) at 41 log-spaced x in [1e-4, 1e2]",
        Method::HighPrecision,
    )
    .depends(&["sandwich.a1", "sandwich.a2", "sandwich.a3"]);
    steps.push(step.or_fail(SandwichParams::compute(prec), |s, params| {
        let points = (0..=40).map(|k| {
            // x = 10^(-4 + 3k/20)
            let exponent = Hp::from_ratio(-4 * 20 + 3 * k as i128, 20, prec);
            let x = (exponent * Hp::from_i64(10, prec).ln()).exp();
            let label = x.to_sci_string(6);
            let value = yang::sandwich_check(&x, &params).map(|r| r.min_margin).map_err(ProofError::from);
            (label, value)
        });
        sampled_positive(s, points)
    }));

    let cat = catalogue();
    let p_checks: [(Rational, Rational, &str); 5] = [
        (rat(3, 20), rat(75107551, 32000), "p0 > 0 on [0, 3/20] since p0(3/20) = 75107551/32000"),
        (rat(1, 5), rat(64124455182553, 15625), "p1 > 0 on [0, 1/5] since p1(1/5) = 64124455182553/15625"),
        (int(1), int(4298768), "p2 > 0 on [0, 1] since p2(1) = 4298768"),
        (int(1), int(68461255039), "p3 > 0 on [0, 1] since p3(1) = 68461255039"),
        (rat(9, 25), rat(21101408, 1953125), "p4 > 0 on [0, 9/25] since p4(9/25) = 21101408/1953125"),
    ];
    for (k, (point, value, claim)) in p_checks.into_iter().enumerate() {
        let id = format!("positivity.p{k}");
        let step = ProofStep::new(&id, claim, Method::SignEngine);
        steps.push(sign_check_step(step, sign::positive_below(&cat.p[k], &point), Some(value)));
    }

    let half = rat(1, 2);
    steps.push(sign_check_step(
        ProofStep::new("roots.q0", "q0 is NP and q0(1/2) = -81/8 < 0, so q0 < 0 on (0, 1/2]", Method::SignEngine),
        sign::negative_below(&cat.q[0], &half),
        Some(rat(-81, 8)),
    ));
    let q_values = [rat(771, 8), rat(1029, 8), rat(549, 8), rat(33, 2), rat(3, 2)];
    let prefixes = ["0.03733", "0.2114", "0.3085", "0.3822", "0.4439"];
    for j in 1..=5 {
        let id = format!("roots.q{j}");
        let claim = format!(
            "q{j} is NP with q{j}(0) < 0 < q{j}(1/2) = {}; its unique root x{j} = {}...",
            format_rational(&q_values[j - 1]),
            prefixes[j - 1]
        );
        let mut step = ProofStep::new(&id, &claim, Method::SignEngine);
        step = sign_check_step(step, sign::positive_above(&cat.q[j], &half), Some(q_values[j - 1].clone()));
        step = step.or_fail(sign::isolate_crossing(&cat.q[j], &int(0), &half, &cfg.width), |s, enc| {
            let prefix = PrintedPrefix::parse(prefixes[j - 1]).expect("literal prefix");
            s.evidence("enclosure", format!("[{}, {}]", format_rational(&enc.lo), format_rational(&enc.hi)))
                .evidence("enclosure_decimal", &enc)
                .evidence("printed", format!("{}...", prefixes[j - 1]))
                .check(prefix.consistent_with_interval(&enc))
        });
        steps.push(step);
    }

    let step = ProofStep::new(
        "roots.root-ordering",
        "x1 < x2 < x3 < x4 < x5, so q_j(x) < 0 implies q_{j+1}(x) < 0 on (0, 1/2]",
        Method::SignEngine,
    )
    .depends(&["roots.q1", "roots.q2", "roots.q3", "roots.q4", "roots.q5"]);
    steps.push(root_ordering_step(step, cfg));
    steps
}

fn root_ordering_step(step: ProofStep, cfg: &ReplayConfig) -> ProofStep {
    let cat = catalogue();
    match sign::verify_root_ordering(&cat.q[1..], &int(0), &rat(1, 2), &cfg.width) {
        Ok(increasing) => step.evidence("width", format_rational(&cfg.width)).check(increasing),
        Err(SignError::RefineWidth(a, b)) => step
            .evidence("note", format!("ordering unverified at this width: enclosures of x{} and x{} overlap", a + 1, b + 1))
            .status(Status::Inconclusive),
        Err(e) => step.evidence("error", e).status(Status::Failed),
    }
}

/// The positivity of `f` on `(0, (1 + sqrt 3)/2)`.
pub fn replay_diagonal(cfg: &ReplayConfig) -> Vec<ProofStep> {
    let prec = cfg.prec;
    let cat = catalogue();
    let mut steps = vec![
        identity_step("diagonal.f-derivative", &[]),
        identity_step("diagonal.fhat-derivative", &[]),
        identity_step("diagonal.lower-bound", &["sandwich.closed-form.L_x.2/5", "sandwich.closed-form.L_x.4/5"]),
    ];

    let numerator = &cat.diagonal_numerator;
    let factors = [[17, 15, 15], [11, 36, 36], [11, 30, 60], [5, 36, 72]];
    let factors_ok = factors.iter().all(|f| positive_coefficients(&Poly::from_ints(f)));
    steps.push(
        ProofStep::new(
            "diagonal.numerator-positive",
            "the degree-12 numerator 5533 + 37994x + ... + 18662400x^12 and the denominator factors have positive coefficients, so the lower bound for fhat' is positive for x > 0",
            Method::ExactPolynomial,
        )
        .evidence("degree", numerator.degree().unwrap_or(0))
        .evidence("constant_term", format_rational(&numerator.coeff(0)))
        .evidence("leading_term", format_rational(&numerator.coeff(12)))
        .check(numerator.degree() == Some(12))
        .check(positive_coefficients(numerator))
        .check(numerator.coeff(0) == int(5533) && numerator.coeff(12) == int(18662400))
        .check(factors_ok)
        .depends(&["diagonal.lower-bound", "sandwich.sandwich"]),
    );

    let quadratic = Poly::from_ints(&[1, 2, -2]);
    let pieces = sign::certify_positive_on(&quadratic, &int(0), &rat(13, 10));
    steps.push(
        ProofStep::new(
            "diagonal.domain",
            "1 + 2x - 2x^2 > 0 on [0, 13/10], inside the domain bound (1 + sqrt 3)/2",
            Method::ExactPolynomial,
        )
        .evidence("certificate_pieces", pieces.map_or("none".to_string(), |n| n.to_string()))
        .check(pieces.is_some()),
    );

    let zero = Hp::zero(prec);
    let step = ProofStep::new("diagonal.base-point", "fhat(0) = f(0) = 0", Method::HighPrecision);
    steps.push(step.or_fail(fhat(&zero).and_then(|a| Ok((a, f(&zero)?))), |s, (a, b)| {
        s.evidence("fhat(0)", fmt_hp(&a))
            .evidence("f(0)", fmt_hp(&b))
            .status(vanishing_status(&a))
            .status(vanishing_status(&b))
    }));

    let step = ProofStep::new(
        "diagonal.f-positive",
        "f(x) > 0 at x = 1/10, 1/2, 1, 13/10; f(1/2) = log(pi/3)",
        Method::HighPrecision,
    )
    .depends(&["diagonal.numerator-positive", "diagonal.base-point", "diagonal.domain"]);
    let samples = [rat(1, 10), rat(1, 2), int(1), rat(13, 10)];
    let mut step = sampled_positive(step, samples.iter().map(|x| (format_rational(x), f(&cfg.hp(x)))));
    if let Ok(v) = f(&Hp::from_ratio(1, 2, prec)) {
        let expected = (Hp::pi(prec) / 3).ln();
        step = step.evidence("f(1/2)", fmt_hp(&v)).status(vanishing_status(&(v - expected)));
    }
    steps.push(step);
    steps
}

/// Coefficients of `Q(x, .)` as a polynomial in `y` at a fixed `x`.
fn q_in_y(x: &Rational) -> Poly {
    let q = &catalogue().big_q;
    Poly::new(q.coefficients_in_y().iter().map(|c| c.eval(x)).collect())
}

/// Case 1: `1/5 <= x <= 1/2`.
pub fn replay_case1(cfg: &ReplayConfig) -> Vec<ProofStep> {
    let cat = catalogue();
    let mut steps = vec![identity_step("case1.Q-identity", &[])];

    steps.push(
        ProofStep::new(
            "case1.Q-catalogue",
            "the stored Q(x,y) equals -q0(x) + sum_{k=1..5} q_k(x) y^k - (1-2x) y^6",
            Method::ExactPolynomial,
        )
        .check(cat.big_q == q_from_components(&cat.q)),
    );

    // Each q_j (j >= 1) is NP with q_j(0) < 0, hence negative before its root
    // and positive after; with the roots increasing, the signs of
    // q1(x), ..., q5(x) read + ... + - ... - for every x. Together with
    // -q0(x) > 0 and -(1-2x) <= 0 this is a single sign change in y.
    let nps = cat.q.iter().all(|q| sign::classify(q).map(|p| p.kind == SignKind::NP).unwrap_or(false));
    let negative_at_zero = cat.q.iter().all(|q| q.coeff(0).is_negative());
    let step = ProofStep::new(
        "case1.Q-PN-by-root-ordering",
        "Q(x,.) is PN in y for x in (0, 1/2]: -q0(x) > 0, the q_k flip sign in increasing order of their roots, and -(1-2x) <= 0",
        Method::SignEngine,
    )
    .depends(&["roots.q0", "roots.root-ordering"])
    .evidence("all_q_NP", nps)
    .evidence("all_q_negative_at_0", negative_at_zero)
    .check(nps && negative_at_zero);
    steps.push(root_ordering_step(step, cfg));

    let grid: Vec<Rational> = (201..=500).map(|k| rat(k, 1000)).collect();
    let mut pn = 0usize;
    let mut nonneg = 0usize;
    let mut other = Vec::new();
    for x in &grid {
        match sign::classify(&q_in_y(x)).map(|p| p.kind) {
            Ok(SignKind::PN) => pn += 1,
            Ok(SignKind::AllNonneg) => nonneg += 1,
            _ => other.push(format_rational(x)),
        }
    }
    steps.push(
        ProofStep::new(
            "case1.Q-PN-grid-audit",
            "sampling audit: Q(k/1000, .) is PN in y (or has no negative coefficient) for k = 201..500",
            Method::SignEngine,
        )
        .evidence("pn", pn)
        .evidence("all_nonneg", nonneg)
        .evidence("other", other.join(" "))
        .check(other.is_empty()),
    );

    steps.push(identity_step("case1.Q-boundary", &["case1.Q-catalogue"]));

    let one_minus_x = BiPoly::from_poly_x(&Poly::from_ints(&[1, -1]));
    let boundary = cat.big_q.compose(&BiPoly::x(), &one_minus_x).to_poly_x().expect("Q(x,1-x) is univariate");
    let pieces = sign::certify_positive_on(&boundary, &rat(1, 5), &rat(1, 2));
    let inner = &(&Poly::from_ints(&[7137]) + &(&Poly::from_ints(&[1, -1]) * &Poly::from_ints(&[24365, 0, 375])))
        + &Poly::from_ints(&[0, 0, 5300]);
    let inner_pieces = sign::certify_positive_on(&inner, &rat(1, 5), &rat(1, 2));
    steps.push(
        ProofStep::new(
            "case1.Q-boundary-positive",
            "Q(x,1-x) > 0 on [1/5, 1/2]: 1-x > 0, 5x-1 >= 0 and 7137 + (1-x)(24365+375x^2) + 5300x^2 > 0",
            Method::ExactPolynomial,
        )
        .depends(&["case1.Q-boundary"])
        .evidence("certificate_pieces", pieces.map_or("none".into(), |n| n.to_string()))
        .evidence("inner_factor_pieces", inner_pieces.map_or("none".into(), |n| n.to_string()))
        .check(pieces.is_some() && inner_pieces.is_some()),
    );

    let mut failures = Vec::new();
    for x in &grid {
        let holds = sign::positive_below(&q_in_y(x), &(int(1) - x)).map(|c| c.holds);
        // x = 1/2 has no negative coefficient: every coefficient is >= 0
        let trivially = q_in_y(x).coeffs().iter().all(|c| !c.is_negative()) && !q_in_y(x).is_zero();
        if !(holds.unwrap_or(false) || trivially) {
            failures.push(format_rational(x));
        }
    }
    steps.push(
        ProofStep::new(
            "case1.Q-positive",
            "Q(x,y) > 0 for 1/5 < x <= 1/2 and 0 < y <= 1-x: PN in y and positive at y = 1-x (checked exactly at x = k/1000)",
            Method::SignEngine,
        )
        .depends(&["case1.Q-PN-by-root-ordering", "case1.Q-boundary-positive"])
        .evidence("grid_points", grid.len())
        .evidence("failures", failures.join(" "))
        .check(failures.is_empty()),
    );

    let region: Vec<(Rational, Rational)> = (4..=10)
        .flat_map(|i| {
            let x = rat(i, 20);
            (0..=4).map(move |k| {
                let y = &x + (int(1) - &x * int(2)) * rat(k, 4);
                (x.clone(), y)
            })
        })
        .collect();
    let step = ProofStep::new(
        "case1.dFdy-positive",
        "dF/dy > 0 in the Case 1 region (psi-difference lower bound with n = 3, then Q > 0); spot values",
        Method::HighPrecision,
    )
    .depends(&["case1.Q-identity", "case1.Q-positive"]);
    steps.push(sampled_positive(
        step,
        region.iter().map(|(x, y)| (format!("({},{})", format_rational(x), format_rational(y)), d_f_dy(&cfg.hp(x), &cfg.hp(y)))),
    ));

    let step = ProofStep::new(
        "case1.conclusion",
        "F(x,y) >= F(x,x) = f(x) > 0 for 1/5 <= x <= 1/2, x <= y <= 1-x; spot values of F(x,y) - f(x) >= 0 and f(x) > 0",
        Method::HighPrecision,
    )
    .depends(&["case1.dFdy-positive", "diagonal.f-positive"]);
    let mut step = sampled_positive(
        step,
        region.iter().map(|(x, y)| (format!("({},{})", format_rational(x), format_rational(y)), big_f(&cfg.hp(x), &cfg.hp(y)))),
    );
    for (x, y) in &region {
        if let (Ok(fxy), Ok(fx)) = (big_f(&cfg.hp(x), &cfg.hp(y)), f(&cfg.hp(x))) {
            if (fxy - fx) < -cfg.prec.error_budget() {
                step = step.evidence(&format!("monotonicity violated at ({},{})", format_rational(x), format_rational(y)), "F(x,y) < f(x)").status(Status::Failed);
            }
        }
    }
    steps.push(step);
    steps
}

/// Case 2: `0 < x < 1/5`, through the sign of `G` on the trapezoid.
pub fn replay_case2(cfg: &ReplayConfig) -> Vec<ProofStep> {
    let prec = cfg.prec;
    let cat = catalogue();
    let mut steps = vec![
        identity_step("case2.G-rational", &[]),
        identity_step("case2.A1.dGdx", &["case2.G-rational"]),
        identity_step("case2.A1.mixed-xy", &["case2.A1.dGdx"]),
        identity_step("case2.A1.mixed-yx", &["case2.G-rational"]),
    ];

    let d = BiPoly::from_terms([(0, 0, int(1)), (1, 0, int(1)), (0, 1, int(1)), (1, 1, int(-2))]);
    let corners = [(0, 0), (1, 0), (0, 1), (1, 1)].map(|(a, b)| d.eval(&int(a), &int(b)));
    steps.push(
        ProofStep::new(
            "case2.A1.denominator-positive",
            "1 + x + y - 2xy > 0 on [0,1]^2 (bilinear, positive at the four corners), so the mixed partial 12(y-x)/(1+x+y-2xy)^3 is positive for y > x",
            Method::ExactPolynomial,
        )
        .depends(&["case2.A1.mixed-xy"])
        .evidence("corner_values", corners.iter().map(format_rational).collect::<Vec<_>>().join(" "))
        .check(corners.iter().all(|c| c.is_positive())),
    );

    steps.push(identity_step("case2.A1.g-line", &["case2.A1.dGdx"]));
    steps.push(identity_step("case2.A2.identity", &["sandwich.closed-form.L_x.4/5"]));

    let line_den = Poly::from_ints(&[17, 16, -25]);
    let den_a2 = sign::certify_positive_on(&line_den, &int(0), &rat(1, 5));
    let tail_ok = [307230, 823500, 675000].iter().all(|c| *c > 0);
    let step = ProofStep::new(
        "case2.A2.positive",
        "g(x) > L_x(x,4/5) - (913+350x-1250x^2)/(2(17+16x-25x^2)^2) > 0 on (0, 3/20]: p0 > 0 there, the added tail is positive and 17+16x-25x^2 > 0",
        Method::SignEngine,
    )
    .depends(&["case2.A2.identity", "positivity.p0", "sandwich.sandwich"]);
    steps.push(
        sign_check_step(step, sign::positive_below(&cat.p[0], &rat(3, 20)), None)
            .evidence("denominator_certificate_pieces", den_a2.map_or("none".into(), |n| n.to_string()))
            .check(den_a2.is_some() && tail_ok),
    );

    steps.push(identity_step("case2.A3.g-derivative", &["case2.A1.g-line"]));
    steps.push(identity_step("case2.A3.identity", &["sandwich.closed-form.L_xx.4/5"]));
    let step = ProofStep::new(
        "case2.A3.negative",
        "g'(x) < 0 on (1/10, 1/5): 10x - 1 > 0, p1 > 0 on [0, 1/5] and the denominator is positive",
        Method::SignEngine,
    )
    .depends(&["case2.A3.identity", "positivity.p1", "sandwich.sandwich"]);
    let ten_x_minus_one = Poly::from_ints(&[-1, 10]);
    steps.push(
        sign_check_step(step, sign::positive_below(&cat.p[1], &rat(1, 5)), None)
            .evidence("10x-1 at 1/10", format_rational(&ten_x_minus_one.eval(&rat(1, 10))))
            .check(ten_x_minus_one.eval(&rat(1, 10)).is_zero() && ten_x_minus_one.coeff(1).is_positive())
            .check(den_a2.is_some()),
    );

    let step = ProofStep::new("case2.A4.g-at-fifth", "g(1/5) = 0.001914... > 0", Method::HighPrecision);
    steps.push(step.or_fail(g(&Hp::from_ratio(1, 5, prec)), |s, v| {
        prefix_step(s.status(positivity_status(&v)), "0.001914", &v)
    }));

    let step = ProofStep::new(
        "case2.A.dGdx-positive",
        "dG/dx > g(x) > 0 for 0 < x < 1/5: g > 0 on (0, 3/20], g decreasing on (1/10, 1/5) with g(1/5) > 0, and the two ranges overlap",
        Method::HighPrecision,
    )
    .depends(&["case2.A2.positive", "case2.A3.negative", "case2.A4.g-at-fifth", "case2.A1.denominator-positive"])
    .check(rat(1, 10) < rat(3, 20));
    steps.push(sampled_positive(step, (1..20).map(|k| (format!("x={}", format_rational(&rat(k, 100))), g(&cfg.hp(&rat(k, 100)))))));

    steps.push(identity_step("case2.A5.G0-second-derivative", &["case2.G-rational"]));
    steps.push(identity_step("case2.A5.identity", &["sandwich.closed-form.L_xx.2/5"]));
    let step = ProofStep::new(
        "case2.A5.concave",
        "d^2/dy^2 G(0,y) < 0 on [0,1] since p2 > 0 on [0, 1]",
        Method::SignEngine,
    )
    .depends(&["case2.A5.identity", "positivity.p2", "sandwich.sandwich"]);
    steps.push(sign_check_step(step, sign::positive_below(&cat.p[2], &int(1)), None));

    let step = ProofStep::new("case2.A5.endpoints", "G(0,0) = 0 and G(0,1) = psi(1) - psi(2) + 1 = 0", Method::HighPrecision);
    let zero = Hp::zero(prec);
    let one = Hp::one(prec);
    steps.push(step.or_fail(big_g(&zero, &zero).and_then(|a| Ok((a, big_g(&zero, &one)?))), |s, (a, b)| {
        s.evidence("G(0,0)", fmt_hp(&a))
            .evidence("G(0,1)", fmt_hp(&b))
            .status(vanishing_status(&a))
            .status(vanishing_status(&b))
    }));

    let region_a: Vec<(Rational, Rational)> = (1..=19)
        .flat_map(|i| {
            let x = rat(i, 100);
            (0..4).map(move |k| {
                let lo = &x + rat(9, 25);
                let y = &lo + (int(1) - &lo) * rat(k, 4);
                (x.clone(), y)
            })
        })
        .collect();
    let step = ProofStep::new(
        "case2.A.conclusion",
        "G(x,y) > G(0,y) >= min{G(0,0), G(0,1)} = 0 for 0 < x < 1/5, x + 9/25 <= y < 1; spot values",
        Method::HighPrecision,
    )
    .depends(&["case2.A.dGdx-positive", "case2.A5.concave", "case2.A5.endpoints"]);
    steps.push(sampled_positive(step, labelled(&region_a, cfg, big_g)));

    steps.push(identity_step("case2.B1.dGdy-line", &["case2.G-rational"]));
    steps.push(identity_step("case2.B1.identity", &["sandwich.closed-form.L_x.2/5"]));
    let num_pieces = sign::certify_positive_on(&b1_numerator(), &rat(9, 25), &int(1));
    let den_pieces = sign::certify_positive_on(&Poly::from_ints(&[8, 34, -25]), &rat(9, 25), &int(1));
    steps.push(
        ProofStep::new(
            "case2.B1.positive",
            "dG/dy > 0 on the line x = y - 9/25 for y in (9/25, 1): the numerator 5275352 + (25y-9)[...] and 8 + 34y - 25y^2 are positive there",
            Method::ExactPolynomial,
        )
        .depends(&["case2.B1.identity", "case2.A1.mixed-yx", "sandwich.sandwich"])
        .evidence("numerator_certificate_pieces", num_pieces.map_or("none".into(), |n| n.to_string()))
        .evidence("denominator_certificate_pieces", den_pieces.map_or("none".into(), |n| n.to_string()))
        .check(num_pieces.is_some() && den_pieces.is_some()),
    );

    steps.push(identity_step("case2.B2.second-derivative", &["case2.G-rational"]));
    steps.push(identity_step("case2.B2.identity", &["sandwich.closed-form.L_xx.4/5"]));
    let step = ProofStep::new(
        "case2.B2.concave",
        "G(x,9/25) is strictly concave on (0, 1/5) since p3 > 0 on [0, 1]",
        Method::SignEngine,
    )
    .depends(&["case2.B2.identity", "positivity.p3", "sandwich.sandwich"]);
    steps.push(sign_check_step(step, sign::positive_below(&cat.p[3], &int(1)), None));

    let step = ProofStep::new(
        "case2.B3.endpoints",
        "G(0,9/25) = 0.0554... and G(1/5,9/25) = 0.04015..., both positive",
        Method::HighPrecision,
    );
    let nine = Hp::from_ratio(9, 25, prec);
    let fifth = Hp::from_ratio(1, 5, prec);
    steps.push(step.or_fail(big_g(&zero, &nine).and_then(|a| Ok((a, big_g(&fifth, &nine)?))), |s, (a, b)| {
        let pa = PrintedPrefix::parse("0.0554").expect("literal");
        let pb = PrintedPrefix::parse("0.04015").expect("literal");
        s.evidence("G(0,9/25)", fmt_hp(&a))
            .evidence("G(1/5,9/25)", fmt_hp(&b))
            .evidence("truncation_matches", pa.truncation_matches(&a) && pb.truncation_matches(&b))
            .check(pa.within_one_ulp(&a) && pb.within_one_ulp(&b))
            .status(positivity_status(&a))
            .status(positivity_status(&b))
    }));

    let region_b: Vec<(Rational, Rational)> = (1..=7)
        .flat_map(|k| {
            let y = rat(9, 25) + rat(k, 40);
            (1..=3).filter_map(move |m| {
                let lo = (&y - rat(9, 25)).max(int(0));
                let x = &lo + (rat(1, 5) - &lo) * rat(m, 4);
                (x < y).then_some((x, y.clone()))
            })
        })
        .collect();
    let step = ProofStep::new(
        "case2.B.conclusion",
        "G(x,y) > G(x,9/25) > min{G(0,9/25), G(1/5,9/25)} > 0 for 9/25 < y < x + 9/25; spot values",
        Method::HighPrecision,
    )
    .depends(&["case2.B1.positive", "case2.B2.concave", "case2.B3.endpoints"]);
    steps.push(sampled_positive(step, labelled(&region_b, cfg, big_g)));

    steps.push(identity_step("case2.C1.dGdy-at-zero", &["case2.G-rational"]));
    steps.push(identity_step("case2.C1.identity", &["sandwich.closed-form.L_x.2/5"]));
    let step = ProofStep::new(
        "case2.C1.positive",
        "dG/dy > dG/dy(0,y) > 0 for 0 < x < y <= 9/25 since p4 > 0 on [0, 9/25]; hence G(x,y) > G(x,x) = 0",
        Method::SignEngine,
    )
    .depends(&["case2.C1.identity", "case2.A1.mixed-yx", "positivity.p4", "sandwich.sandwich"]);
    steps.push(sign_check_step(step, sign::positive_below(&cat.p[4], &rat(9, 25)), None));

    let interior: Vec<(Rational, Rational)> = (1..=9)
        .flat_map(|i| {
            let x = rat(i, 50);
            (1..=9).map(move |k| {
                let y = &x + (int(1) - &x * int(2)) * rat(k, 10);
                (x.clone(), y)
            })
        })
        .collect();
    let step = ProofStep::new(
        "case2.no-interior-extremum",
        "G > 0 on the trapezoid D = {x < y < 1-x, 0 < x < 1/5}, so F has no critical point in D; spot values",
        Method::HighPrecision,
    )
    .depends(&["case2.A.conclusion", "case2.B.conclusion", "case2.C1.positive"]);
    steps.push(sampled_positive(step, labelled(&interior, cfg, big_g)));
    steps
}

fn labelled<'a>(
    points: &'a [(Rational, Rational)],
    cfg: &'a ReplayConfig,
    h: impl Fn(&Hp, &Hp) -> Result<Hp, ProofError> + 'a,
) -> impl Iterator<Item = (String, Result<Hp, ProofError>)> + 'a {
    points.iter().map(move |(x, y)| {
        (format!("({},{})", format_rational(x), format_rational(y)), h(&cfg.hp(x), &cfg.hp(y)))
    })
}

/// Boundary of the trapezoid and the final assembly.
pub fn replay_boundary(cfg: &ReplayConfig) -> Vec<ProofStep> {
    let mut steps = Vec::new();

    let anti: Vec<(Rational, Rational)> = (1..=10).map(|k| (rat(k, 20), int(1) - rat(k, 20))).collect();
    let step = ProofStep::new(
        "boundary.i",
        "F > 0 on x + y = 1: B >= (x+y)/(xy)(1 - xy/(x+y)) >= the new bound, not both with equality",
        Method::HighPrecision,
    )
    .depends(&["remark.bound-gap"]);
    let mut step = sampled_positive(step, labelled(&anti, cfg, big_f));
    for (x, y) in &anti {
        match remark_sandwich(&cfg.hp(x), &cfg.hp(y)) {
            Ok(r) if r.holds => {}
            Ok(_) => step = step.evidence(&format!("ordering fails at {}", format_rational(x)), "remark").status(Status::Failed),
            Err(e) => step = step.evidence("error", e).status(Status::Failed),
        }
    }
    steps.push(step);

    let left: Vec<Rational> = (1..=10).map(|k| rat(k, 10)).collect();
    let zero = Hp::zero(cfg.prec);
    let mut step = ProofStep::new("boundary.ii", "F(0,y) = 0", Method::HighPrecision);
    for y in &left {
        step = match big_f(&zero, &cfg.hp(y)) {
            Ok(v) => step.status(vanishing_status(&v)),
            Err(e) => step.evidence("error", e).status(Status::Failed),
        };
    }
    steps.push(step.evidence("samples", left.len()));

    let diag: Vec<Rational> = (1..=10).map(|k| rat(k, 50)).collect();
    let step = ProofStep::new("boundary.iii", "F(x,x) = f(x) > 0 for 0 < x <= 1/5", Method::HighPrecision)
        .depends(&["diagonal.f-positive", "diagonal.numerator-positive"]);
    steps.push(sampled_positive(step, diag.iter().map(|x| (format_rational(x), f(&cfg.hp(x))))));

    let right: Vec<Rational> = (0..=12).map(|k| rat(1, 5) + rat(k, 20)).collect();
    let fifth = rat(1, 5);
    let step = ProofStep::new("boundary.iv", "F(1/5,y) > 0 for 1/5 <= y <= 4/5", Method::HighPrecision)
        .depends(&["case1.conclusion"]);
    steps.push(sampled_positive(
        step,
        right.iter().map(|y| (format!("y={}", format_rational(y)), big_f(&cfg.hp(&fifth), &cfg.hp(y)))),
    ));

    let n = 20;
    let grid: Vec<(Rational, Rational)> =
        (1..=n).flat_map(|i| (1..=n).map(move |j| (rat(i, n), rat(j, n)))).collect();
    let step = ProofStep::new(
        "theorem.conclusion",
        "F attains its minimum 0 on the boundary only at x = 0, so B(x,y) > (x+y)/(xy)(1 - 2xy/(x+y+1)) on (0,1]^2; margins on the 20 x 20 grid",
        Method::HighPrecision,
    )
    .depends(&[
        "case1.conclusion",
        "case2.no-interior-extremum",
        "boundary.i",
        "boundary.ii",
        "boundary.iii",
        "boundary.iv",
    ]);
    steps.push(sampled_positive(step, labelled(&grid, cfg, super::core_fns::theorem_margin)));
    steps
}

/// All groups, in order. The groups are independent and run in parallel.
pub fn replay_all(cfg: &ReplayConfig) -> Vec<ProofStep> {
    let groups: [fn(&ReplayConfig) -> Vec<ProofStep>; 5] =
        [replay_preliminaries, replay_diagonal, replay_case1, replay_case2, replay_boundary];
    groups.par_iter().map(|g| g(cfg)).collect::<Vec<_>>().into_iter().flatten().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_unique_and_dependencies_resolve() {
        let steps = replay_all(&ReplayConfig::default());
        let ids: std::collections::HashSet<_> = steps.iter().map(|s| s.id.as_str()).collect();
        assert_eq!(ids.len(), steps.len());
        for s in &steps {
            for d in &s.depends_on {
                assert!(ids.contains(d.as_str()), "{} depends on unknown {}", s.id, d);
            }
        }
        let bad: Vec<_> = steps.iter().filter(|s| s.status != Status::Verified).collect();
        assert!(bad.is_empty(), "{bad:#?}");
    }

    #[test]
    fn wide_enclosures_make_ordering_inconclusive() {
        let cfg = ReplayConfig { width: rat(1, 4), ..ReplayConfig::default() };
        let step = root_ordering_step(ProofStep::new("t", "t", Method::SignEngine), &cfg);
        assert_eq!(step.status, Status::Inconclusive);
    }
}
