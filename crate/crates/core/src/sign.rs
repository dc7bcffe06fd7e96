//! Sign criterion for polynomials whose coefficient sequence changes sign
//! exactly once, and exact bisection for their single positive root.
//!
//! A polynomial `a_0 + ... + a_m x^m - a_{m+1} x^{m+1} - ... - a_n x^n`
//! with all `a_k >= 0`, at least one nonzero coefficient in each block,
//! is called PN. By Descartes' rule it has exactly one positive root
//! `x0`, is positive on `(0, x0)` and negative beyond it. Evaluating at a
//! single rational point therefore certifies the sign on a whole
//! half-line. NP is the mirror image.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::exact::{format_rational, int, ten_pow_neg, to_f64, Poly, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SignError {
    #[error("degenerate input: zero polynomial")]
    Degenerate,
    #[error("criterion inapplicable: pattern is {found:?}, expected {expected:?}")]
    Inapplicable { expected: SignKind, found: SignKind },
    #[error("no bracket: endpoint values do not have strictly opposite signs")]
    NoBracket,
    #[error("refine width: enclosures {0} and {1} overlap")]
    RefineWidth(usize, usize),
    #[error("enclosure width must be positive")]
    InvalidWidth,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SignKind {
    PN,
    NP,
    AllNonneg,
    AllNonpos,
    Other,
}

/// Coefficient sign pattern. `split_index` is the last index of the leading
/// block (the last strictly positive coefficient for PN, the last strictly
/// negative one for NP).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignPattern {
    pub kind: SignKind,
    pub split_index: Option<usize>,
}

/// Closed interval with rational endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        Interval { lo, hi }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / int(2)
    }

    /// True if the two closed intervals share a point.
    pub fn intersects(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:.12}, {:.12}]", to_f64(&self.lo), to_f64(&self.hi))
    }
}

/// Exact evaluation recorded as evidence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub point: Rational,
    pub value: Rational,
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p({}) = {}", format_rational(&self.point), format_rational(&self.value))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignReport {
    pub pattern: SignPattern,
    pub crossing: Option<Interval>,
    pub certificate: Option<Certificate>,
}

/// Result of one half-line sign check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignCheck {
    pub holds: bool,
    /// The test point is exactly the crossing root; nothing is concluded.
    pub boundary_root: bool,
    pub report: SignReport,
}

/// Default root enclosure width, `10^-6`.
pub fn default_width() -> Rational {
    ten_pow_neg(6)
}

pub fn classify(p: &Poly) -> Result<SignPattern, SignError> {
    if p.is_zero() {
        return Err(SignError::Degenerate);
    }
    let nonzero: Vec<(usize, bool)> = p
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k, c.is_positive()))
        .collect();
    let changes: Vec<usize> = nonzero
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0].1 != w[1].1)
        .map(|(i, _)| i)
        .collect();
    let pattern = match changes.as_slice() {
        [] if nonzero[0].1 => SignPattern { kind: SignKind::AllNonneg, split_index: None },
        [] => SignPattern { kind: SignKind::AllNonpos, split_index: None },
        [i] => {
            let (split, leading_positive) = nonzero[*i];
            let kind = if leading_positive { SignKind::PN } else { SignKind::NP };
            SignPattern { kind, split_index: Some(split) }
        }
        _ => SignPattern { kind: SignKind::Other, split_index: None },
    };
    Ok(pattern)
}

fn require(p: &Poly, expected: SignKind) -> Result<SignPattern, SignError> {
    let pattern = classify(p)?;
    if pattern.kind != expected {
        return Err(SignError::Inapplicable { expected, found: pattern.kind });
    }
    Ok(pattern)
}

fn half_line_check(
    p: &Poly,
    point: &Rational,
    expected: SignKind,
    want_positive: bool,
) -> Result<SignCheck, SignError> {
    let pattern = require(p, expected)?;
    let value = p.eval(point);
    let boundary_root = value.is_zero();
    let holds = if want_positive { value.is_positive() } else { value.is_negative() };
    Ok(SignCheck {
        holds,
        boundary_root,
        report: SignReport {
            pattern,
            crossing: None,
            certificate: Some(Certificate { point: point.clone(), value }),
        },
    })
}

/// PN polynomial: `p(x1) > 0` certifies `p > 0` on `(0, x1]`.
pub fn positive_below(p: &Poly, x1: &Rational) -> Result<SignCheck, SignError> {
    half_line_check(p, x1, SignKind::PN, true)
}

/// PN polynomial: `p(x2) < 0` certifies `p < 0` on `[x2, inf)`.
pub fn negative_above(p: &Poly, x2: &Rational) -> Result<SignCheck, SignError> {
    half_line_check(p, x2, SignKind::PN, false)
}

/// NP polynomial: `p(x1) < 0` certifies `p < 0` on `(0, x1]`.
pub fn negative_below(p: &Poly, x1: &Rational) -> Result<SignCheck, SignError> {
    half_line_check(p, x1, SignKind::NP, false)
}

/// NP polynomial: `p(x2) > 0` certifies `p > 0` on `[x2, inf)`.
pub fn positive_above(p: &Poly, x2: &Rational) -> Result<SignCheck, SignError> {
    half_line_check(p, x2, SignKind::NP, true)
}

fn sign_at(p: &Poly, x: &Rational) -> i8 {
    let v = p.eval(x);
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

/// Bisection on exact signs until the bracket is no wider than `width`.
///
/// The returned interval always has endpoint values of strictly opposite
/// sign. If a midpoint hits the root exactly, a symmetric bracket around
/// it is returned instead.
pub fn isolate_crossing(
    p: &Poly,
    lo: &Rational,
    hi: &Rational,
    width: &Rational,
) -> Result<Interval, SignError> {
    let pattern = classify(p)?;
    if !matches!(pattern.kind, SignKind::PN | SignKind::NP) {
        return Err(SignError::Inapplicable { expected: SignKind::NP, found: pattern.kind });
    }
    if !width.is_positive() {
        return Err(SignError::InvalidWidth);
    }
    let (mut a, mut b) = (lo.clone(), hi.clone());
    let sa = sign_at(p, &a);
    let sb = sign_at(p, &b);
    if sa * sb >= 0 {
        return Err(SignError::NoBracket);
    }
    while &(&b - &a) > width {
        let m = (&a + &b) / int(2);
        match sign_at(p, &m) {
            0 => return bracket_exact_root(p, &m, &((&b - &a) / int(4)).min(width / int(4))),
            s if s == sa => a = m,
            _ => b = m,
        }
    }
    Ok(Interval::new(a, b))
}

fn bracket_exact_root(p: &Poly, root: &Rational, start: &Rational) -> Result<Interval, SignError> {
    let mut d = start.clone();
    for _ in 0..256 {
        let (l, r) = (root - &d, root + &d);
        if sign_at(p, &l) * sign_at(p, &r) < 0 {
            return Ok(Interval::new(l, r));
        }
        d /= int(2);
    }
    Err(SignError::NoBracket)
}

/// Root enclosures for a family of single-crossing polynomials, in input
/// order, together with whether they are strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootOrdering {
    pub enclosures: Vec<Interval>,
    pub increasing: bool,
}

pub fn order_roots(
    polys: &[Poly],
    lo: &Rational,
    hi: &Rational,
    width: &Rational,
) -> Result<RootOrdering, SignError> {
    let enclosures = polys
        .iter()
        .map(|p| isolate_crossing(p, lo, hi, width))
        .collect::<Result<Vec<_>, _>>()?;
    let mut increasing = true;
    for (k, pair) in enclosures.windows(2).enumerate() {
        // Roots sit strictly inside their enclosures, so touching endpoints
        // still order the roots.
        if pair[0].hi <= pair[1].lo {
            continue;
        }
        if pair[1].hi <= pair[0].lo {
            increasing = false;
            continue;
        }
        return Err(SignError::RefineWidth(k, k + 1));
    }
    Ok(RootOrdering { enclosures, increasing })
}

/// True iff the isolated roots are pairwise separated and increasing.
pub fn verify_root_ordering(
    polys: &[Poly],
    lo: &Rational,
    hi: &Rational,
    width: &Rational,
) -> Result<bool, SignError> {
    order_roots(polys, lo, hi, width).map(|o| o.increasing)
}

/// Exact certificate that `p > 0` on the closed interval `[lo, hi]`.
///
/// Maps the interval onto `[0, inf]` with `x = (lo + hi t)/(1 + t)` and
/// clears denominators; if every coefficient of the result is nonnegative
/// and both end values are positive, the sign is certified. Otherwise the
/// interval is bisected. Returns the number of pieces used, or `None` if
/// a nonpositive value was found or the depth limit was reached.
pub fn certify_positive_on(p: &Poly, lo: &Rational, hi: &Rational) -> Option<usize> {
    if lo > hi || p.is_zero() {
        return None;
    }
    certify_piece(p, lo, hi, 0)
}

const MAX_CERTIFY_DEPTH: u32 = 24;

fn certify_piece(p: &Poly, lo: &Rational, hi: &Rational, depth: u32) -> Option<usize> {
    if !p.eval(lo).is_positive() || !p.eval(hi).is_positive() {
        return None;
    }
    if lo == hi || mobius_coefficients(p, lo, hi).iter().all(|c| !c.is_negative()) {
        return Some(1);
    }
    if depth >= MAX_CERTIFY_DEPTH {
        return None;
    }
    let mid = (lo + hi) / int(2);
    let left = certify_piece(p, lo, &mid, depth + 1)?;
    let right = certify_piece(p, &mid, hi, depth + 1)?;
    Some(left + right)
}

/// Coefficients in `t` of `(1 + t)^n p((lo + hi t)/(1 + t))`.
fn mobius_coefficients(p: &Poly, lo: &Rational, hi: &Rational) -> Vec<Rational> {
    let n = p.degree().unwrap_or(0);
    let num = Poly::new(vec![lo.clone(), hi.clone()]);
    let den = Poly::new(vec![Rational::one(), Rational::one()]);
    let mut out = Poly::zero();
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = &(&num.pow(k as u32) * &den.pow((n - k) as u32)) * &Poly::constant(c.clone());
        out = &out + &term;
    }
    out.coeffs().to_vec()
}
