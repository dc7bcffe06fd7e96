//! Exact rational arithmetic, univariate and bivariate polynomials, and
//! rational functions with identity checking by cross-multiplication.
//!
//! Nothing in this module touches floating point.

mod bipoly;
mod json;
mod poly;
mod ratfn;
mod rational;

pub use bipoly::BiPoly;
pub use json::{BiPolyJson, PolyJson};
pub use poly::Poly;
pub use ratfn::{rationalfn_equal, RationalFn};
pub use rational::{format_rational, int, normalize, parse_rational, rat, ten_pow_neg, to_f64, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("cannot parse rational {0:?}")]
    Parse(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("rational function has a pole at {0}")]
    PoleAt(String),
    #[error("unknown polynomial variable {0:?}")]
    UnknownVariable(String),
    #[error("malformed polynomial json: {0}")]
    Json(String),
}
