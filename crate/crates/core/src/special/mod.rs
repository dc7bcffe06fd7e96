//! Gamma-family special functions at a caller-chosen decimal precision,
//! and the named constants built from them.

mod constants;
mod functions;
mod hp;
mod series;

pub use constants::{alpha, a1, a2, solve_a3, Constants};
pub use functions::{beta, delta, gamma, log_gamma, maximize_delta, psi, psi1, psi2, DeltaMaximum};
pub use hp::{Hp, HpPoly, Precision};
pub use series::{bernoulli_even, series_terms, shift_threshold};

#[derive(Debug, thiserror::Error)]
pub enum SpecialError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("no sign change on the bracket [{lo}, {hi}]")]
    NoSignChange { lo: String, hi: String },
    #[error("scan did not find an interior maximum")]
    NoInteriorMaximum,
}
