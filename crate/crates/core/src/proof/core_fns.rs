use num_traits::Signed;
use serde::Serialize;

use super::ProofError;
use crate::exact::{int, rat, Rational};
use crate::special::{self, Hp, Precision};

fn nonnegative(x: &Hp, name: &str) -> Result<(), ProofError> {
    if x.is_negative() {
        Err(ProofError::Domain(format!("{name} must be nonnegative")))
    } else {
        Ok(())
    }
}

/// `1 + x + y - 2xy`, the common denominator in the partial derivatives.
fn d(x: &Hp, y: &Hp) -> Hp {
    x + y + 1 - (x * y) * 2
}

/// `F(x, y) = log[Gamma(x+1) Gamma(y+1) / Gamma(x+y+1)] - log(1 - 2xy/(x+y+1))`,
/// the log ratio of `B(x, y)` to the bound; defined for `x, y >= 0`.
pub fn big_f(x: &Hp, y: &Hp) -> Result<Hp, ProofError> {
    nonnegative(x, "x")?;
    nonnegative(y, "y")?;
    let s = x + y;
    let gammas = special::log_gamma(&(x + 1))? + special::log_gamma(&(y + 1))? - special::log_gamma(&(&s + 1))?;
    let inner = Hp::one(x.precision()) - (x * y) * 2 / (&s + 1);
    if !inner.is_positive() {
        return Err(ProofError::Domain("1 - 2xy/(x+y+1) must be positive".into()));
    }
    Ok(gammas - inner.ln())
}

/// `dF/dx = psi(x+1) - psi(x+y+1) + 2y(1+y) / ((1+x+y)(1+x+y-2xy))`.
pub fn d_f_dx(x: &Hp, y: &Hp) -> Result<Hp, ProofError> {
    nonnegative(x, "x")?;
    nonnegative(y, "y")?;
    let s1 = x + y + 1;
    Ok(special::psi(&(x + 1))? - special::psi(&s1)? + (y * (y + 1)) * 2 / (&s1 * d(x, y)))
}

/// `dF/dy`, the mirror image of [`d_f_dx`].
pub fn d_f_dy(x: &Hp, y: &Hp) -> Result<Hp, ProofError> {
    d_f_dx(y, x)
}

/// `G = dF/dx - dF/dy = psi(x+1) - psi(y+1) - 2(x-y)/(1+x+y-2xy)`.
pub fn big_g(x: &Hp, y: &Hp) -> Result<Hp, ProofError> {
    nonnegative(x, "x")?;
    nonnegative(y, "y")?;
    Ok(special::psi(&(x + 1))? - special::psi(&(y + 1))? - (x - y) * 2 / d(x, y))
}

/// `1 + 2x - 2x^2`, positive exactly on `((1-sqrt 3)/2, (1+sqrt 3)/2)`.
fn lemma_quadratic(x: &Hp) -> Hp {
    x * 2 + 1 - (x * x) * 2
}

fn lemma_domain(x: &Hp) -> Result<(), ProofError> {
    nonnegative(x, "x")?;
    if lemma_quadratic(x).is_positive() {
        Ok(())
    } else {
        Err(ProofError::Domain("need 1 + 2x - 2x^2 > 0, i.e. x < (1 + sqrt 3)/2".into()))
    }
}

/// `f(x) = log[Gamma(x+1)^2 / Gamma(2x+1)] - log(1 - 2x^2/(1+2x))`, which
/// equals `F(x, x)`.
pub fn f(x: &Hp) -> Result<Hp, ProofError> {
    lemma_domain(x)?;
    let gammas = special::log_gamma(&(x + 1))? * 2 - special::log_gamma(&(x * 2 + 1))?;
    Ok(gammas - (lemma_quadratic(x) / (x * 2 + 1)).ln())
}

/// Half the derivative of `f`:
/// `psi(x+1) - psi(2x+1) + 2x(1+x) / ((1+2x)(1+2x-2x^2))`.
pub fn fhat(x: &Hp) -> Result<Hp, ProofError> {
    lemma_domain(x)?;
    let rational = (x * (x + 1)) * 2 / ((x * 2 + 1) * lemma_quadratic(x));
    Ok(special::psi(&(x + 1))? - special::psi(&(x * 2 + 1))? + rational)
}

/// `g(x) = psi'(x+1) - (913 + 350x - 1250x^2) / (2 (17 + 16x - 25x^2)^2)`,
/// the value of `dG/dx` on the line `y = x + 9/25`.
pub fn g(x: &Hp) -> Result<Hp, ProofError> {
    nonnegative(x, "x")?;
    let x2 = x * x;
    let num = x * 350 + 913 - &x2 * 1250;
    let den = (x * 16 + 17 - &x2 * 25).powi(2) * 2;
    Ok(special::psi1(&(x + 1))? - num / den)
}

fn unit_square(x: &Hp, y: &Hp) -> Result<(), ProofError> {
    let one = Hp::one(x.precision());
    if !x.is_positive() || !y.is_positive() || *x > one || *y > one {
        return Err(ProofError::Domain("x and y must lie in (0, 1]".into()));
    }
    Ok(())
}

/// `(x+y)/(xy) (1 - 2xy/(x+y+1))`.
pub fn new_bound(x: &Hp, y: &Hp) -> Hp {
    let s = x + y;
    let p = x * y;
    &s / &p * (Hp::one(x.precision()) - &p * 2 / (&s + 1))
}

/// `B(x, y)` minus the new lower bound.
pub fn theorem_margin(x: &Hp, y: &Hp) -> Result<Hp, ProofError> {
    unit_square(x, y)?;
    Ok(special::beta(x, y)? - new_bound(x, y))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Greater,
    Equal,
    Less,
}

impl Relation {
    /// Equality is declared within the error budget.
    pub fn of(difference: &Hp) -> Relation {
        let budget = difference.precision().error_budget();
        if *difference > budget {
            Relation::Greater
        } else if *difference < -budget {
            Relation::Less
        } else {
            Relation::Equal
        }
    }
}

/// The three quantities compared in the remark following the theorem.
#[derive(Clone, Debug)]
pub struct RemarkReport {
    pub beta: Hp,
    /// `(x+y)/(xy) (1 - xy/(x+y))`, the lower bound of the older double
    /// inequality.
    pub ivady_lower: Hp,
    pub new_bound: Hp,
    /// `B` against the older lower bound.
    pub beta_vs_ivady: Relation,
    /// Older lower bound against the new bound.
    pub ivady_vs_new: Relation,
    /// `x + y >= 1`.
    pub sum_at_least_one: bool,
    /// The ordering claimed for this regime holds.
    pub holds: bool,
}

/// For `x + y >= 1`: `B >= ivady_lower >= new_bound`, not both equalities.
/// For `x + y <= 1`: `new_bound >= ivady_lower` and `B` above both.
pub fn remark_sandwich(x: &Hp, y: &Hp) -> Result<RemarkReport, ProofError> {
    unit_square(x, y)?;
    let beta = special::beta(x, y)?;
    let s = x + y;
    let p = x * y;
    let ivady_lower = (&s - &p) / &p;
    let new = new_bound(x, y);
    let beta_vs_ivady = Relation::of(&(&beta - &ivady_lower));
    let ivady_vs_new = Relation::of(&(&ivady_lower - &new));
    let sum_at_least_one = Relation::of(&(&s - 1)) != Relation::Less;
    let beta_ok = beta_vs_ivady != Relation::Less;
    let holds = if sum_at_least_one {
        let both_equal = beta_vs_ivady == Relation::Equal && ivady_vs_new == Relation::Equal;
        beta_ok && ivady_vs_new != Relation::Less && !both_equal
    } else {
        beta_ok && ivady_vs_new != Relation::Greater && beta > new
    };
    Ok(RemarkReport { beta, ivady_lower, new_bound: new, beta_vs_ivady, ivady_vs_new, sum_at_least_one, holds })
}

/// Precision-bound evaluation at rational points.
#[derive(Clone, Copy, Debug)]
pub struct CoreFunctions {
    pub prec: Precision,
}

impl CoreFunctions {
    pub fn new(prec: Precision) -> Self {
        CoreFunctions { prec }
    }

    pub fn hp(&self, r: &Rational) -> Hp {
        Hp::from_rational(r, self.prec)
    }

    pub fn big_f(&self, x: &Rational, y: &Rational) -> Result<Hp, ProofError> {
        big_f(&self.hp(x), &self.hp(y))
    }

    pub fn big_g(&self, x: &Rational, y: &Rational) -> Result<Hp, ProofError> {
        big_g(&self.hp(x), &self.hp(y))
    }

    pub fn f(&self, x: &Rational) -> Result<Hp, ProofError> {
        f(&self.hp(x))
    }

    pub fn fhat(&self, x: &Rational) -> Result<Hp, ProofError> {
        fhat(&self.hp(x))
    }

    pub fn g(&self, x: &Rational) -> Result<Hp, ProofError> {
        g(&self.hp(x))
    }

    pub fn theorem_margin(&self, x: &Rational, y: &Rational) -> Result<Hp, ProofError> {
        theorem_margin(&self.hp(x), &self.hp(y))
    }
}

/// Boundary pieces of the trapezoid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Segment {
    /// `x + y = 1`.
    AntiDiagonal,
    /// `x = 0`.
    LeftEdge,
    /// `y = x`.
    Diagonal,
    /// `x = 1/5`.
    RightEdge,
}

/// `D = {(x, y) : x < y < 1 - x, 0 < x < 1/5}`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Trapezoid;

impl Trapezoid {
    pub fn right() -> Rational {
        rat(1, 5)
    }

    pub fn contains(&self, x: &Rational, y: &Rational) -> bool {
        x.is_positive() && *x < Self::right() && x < y && *y < int(1) - x
    }

    /// Every point of the closure is either inside or on at least one of the
    /// four segments.
    pub fn in_closure(&self, x: &Rational, y: &Rational) -> bool {
        !x.is_negative() && *x <= Self::right() && x <= y && *y <= int(1) - x
    }

    pub fn segments_of(&self, x: &Rational, y: &Rational) -> Vec<Segment> {
        if !self.in_closure(x, y) {
            return Vec::new();
        }
        let mut out = Vec::new();
        if x + y == int(1) {
            out.push(Segment::AntiDiagonal);
        }
        if *x == int(0) {
            out.push(Segment::LeftEdge);
        }
        if x == y {
            out.push(Segment::Diagonal);
        }
        if *x == Self::right() {
            out.push(Segment::RightEdge);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: Precision = Precision::DEFAULT;

    fn hp(s: &str) -> Hp {
        Hp::parse(s, P).unwrap()
    }

    #[test]
    fn margins_at_simple_points() {
        let one = Hp::one(P);
        let m = theorem_margin(&one, &one).unwrap();
        assert!((m - Hp::from_ratio(1, 3, P)).abs() < Hp::ten_pow(-40, P));
        let half = Hp::from_ratio(1, 2, P);
        let m = theorem_margin(&half, &half).unwrap();
        assert!((m - (Hp::pi(P) - 3)).abs() < Hp::ten_pow(-40, P));
        assert!(theorem_margin(&Hp::zero(P), &one).is_err());
        assert!(theorem_margin(&hp("1.5"), &one).is_err());
    }

    #[test]
    fn diagonal_and_antisymmetry() {
        let x = hp("0.3");
        assert!((big_f(&x, &x).unwrap() - f(&x).unwrap()).abs() < Hp::ten_pow(-40, P));
        assert!(big_g(&x, &x).unwrap().abs() < Hp::ten_pow(-40, P));
        let f_half = f(&hp("0.5")).unwrap();
        assert!((f_half - (Hp::pi(P) / 3).ln()).abs() < Hp::ten_pow(-40, P));
        assert!(f(&hp("1.4")).is_err());
    }

    #[test]
    fn remark_regimes() {
        let one = Hp::one(P);
        let r = remark_sandwich(&one, &one).unwrap();
        assert!(r.holds && r.sum_at_least_one);
        assert_eq!(r.beta_vs_ivady, Relation::Equal);
        assert_eq!(r.ivady_vs_new, Relation::Greater);
        let q = hp("0.25");
        let r = remark_sandwich(&q, &q).unwrap();
        assert!(r.holds && !r.sum_at_least_one);
        assert_eq!(r.ivady_vs_new, Relation::Less);
    }

    #[test]
    fn trapezoid_membership() {
        let t = Trapezoid;
        assert!(t.contains(&rat(1, 10), &rat(1, 2)));
        assert!(!t.contains(&rat(1, 10), &rat(1, 10)));
        assert!(!t.contains(&rat(1, 5), &rat(1, 2)));
        assert_eq!(t.segments_of(&int(0), &int(1)), vec![Segment::AntiDiagonal, Segment::LeftEdge]);
        assert_eq!(t.segments_of(&rat(1, 5), &rat(1, 5)), vec![Segment::Diagonal, Segment::RightEdge]);
        assert!(t.segments_of(&rat(1, 10), &rat(1, 2)).is_empty());
    }
}
