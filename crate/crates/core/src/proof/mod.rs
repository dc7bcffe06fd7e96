//! Step-by-step machine replay of the lower bound
//! `B(x, y) > (x+y)/(xy) (1 - 2xy/(x+y+1))` on `(0, 1]^2`.
//!
//! Every displayed claim of the argument becomes a [`ProofStep`]. Algebraic
//! claims are decided exactly; transcendental ones are evaluated at the
//! working precision and accepted only with a margin of ten times the error
//! budget.

mod core_fns;
mod identities;
mod replay;
mod sweep;

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::exact::Rational;
use crate::sign::SignError;
use crate::special::{Hp, Precision, SpecialError};
use crate::yang::YangError;

pub use core_fns::{
    big_f, big_g, d_f_dx, d_f_dy, f, fhat, g, new_bound, remark_sandwich, theorem_margin, CoreFunctions,
    Relation, RemarkReport, Segment, Trapezoid,
};
pub use identities::{Identity, IdentityCatalogue};
pub use replay::{
    replay_all, replay_boundary, replay_case1, replay_case2, replay_diagonal, replay_preliminaries, ReplayConfig,
};
pub use sweep::{sweep_cell, sweep_theorem, MarginMin, SweepRow, SweepSummary, CSV_HEADER};

#[derive(Debug, thiserror::Error)]
pub enum ProofError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error(transparent)]
    Special(#[from] SpecialError),
    #[error(transparent)]
    Yang(#[from] YangError),
    #[error(transparent)]
    Sign(#[from] SignError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    ExactPolynomial,
    ExactIdentity,
    HighPrecision,
    SignEngine,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Failed,
    Inconclusive,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Verified
        } else {
            Status::Failed
        }
    }

    /// Combine two outcomes: any failure wins, then any inconclusive.
    pub fn and(self, other: Status) -> Status {
        match (self, other) {
            (Status::Failed, _) | (_, Status::Failed) => Status::Failed,
            (Status::Inconclusive, _) | (_, Status::Inconclusive) => Status::Inconclusive,
            _ => Status::Verified,
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Verified => "verified",
            Status::Failed => "failed",
            Status::Inconclusive => "inconclusive",
        })
    }
}

/// Classify a quantity claimed to be strictly positive.
pub fn positivity_status(margin: &Hp) -> Status {
    let budget = margin.precision().error_budget();
    if *margin > &budget * 10 {
        Status::Verified
    } else if *margin < -budget {
        Status::Failed
    } else {
        Status::Inconclusive
    }
}

/// Classify a quantity claimed to vanish: verified when below `10^-25`.
pub fn vanishing_status(value: &Hp) -> Status {
    Status::from_bool(value.abs() < Hp::ten_pow(-25, value.precision()))
}

#[derive(Clone, Debug, Serialize)]
pub struct ProofStep {
    pub id: String,
    pub claim: String,
    pub method: Method,
    pub status: Status,
    pub evidence: BTreeMap<String, String>,
    pub depends_on: Vec<String>,
}

impl ProofStep {
    pub fn new(id: &str, claim: &str, method: Method) -> Self {
        ProofStep {
            id: id.to_string(),
            claim: claim.to_string(),
            method,
            status: Status::Verified,
            evidence: BTreeMap::new(),
            depends_on: Vec::new(),
        }
    }

    pub fn evidence(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.evidence.insert(key.to_string(), value.to_string());
        self
    }

    pub fn depends(mut self, ids: &[&str]) -> Self {
        self.depends_on.extend(ids.iter().map(|s| s.to_string()));
        self
    }

    pub fn status(mut self, status: Status) -> Self {
        self.status = self.status.and(status);
        self
    }

    pub fn check(self, ok: bool) -> Self {
        self.status(Status::from_bool(ok))
    }

    /// Turn an evaluation error into a failed step carrying the message.
    pub fn or_fail<T>(self, r: Result<T, impl fmt::Display>, f: impl FnOnce(Self, T) -> Self) -> Self {
        match r {
            Ok(v) => f(self, v),
            Err(e) => {
                let mut s = self.evidence("error", e);
                s.status = Status::Failed;
                s
            }
        }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct ProofSummary {
    pub verified: usize,
    pub failed: usize,
    pub inconclusive: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProofReport {
    pub precision_digits: u32,
    #[serde(serialize_with = "ser_rational")]
    pub enclosure_width: Rational,
    pub summary: ProofSummary,
    pub steps: Vec<ProofStep>,
}

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&crate::exact::format_rational(r))
}

impl ProofReport {
    pub fn new(prec: Precision, width: Rational, steps: Vec<ProofStep>) -> Self {
        let mut summary = ProofSummary::default();
        for s in &steps {
            match s.status {
                Status::Verified => summary.verified += 1,
                Status::Failed => summary.failed += 1,
                Status::Inconclusive => summary.inconclusive += 1,
            }
        }
        ProofReport { precision_digits: prec.decimal_digits(), enclosure_width: width, summary, steps }
    }

    pub fn all_verified(&self) -> bool {
        self.summary.failed == 0 && self.summary.inconclusive == 0
    }

    pub fn not_verified(&self) -> Vec<&ProofStep> {
        self.steps.iter().filter(|s| s.status != Status::Verified).collect()
    }

    pub fn step(&self, id: &str) -> Option<&ProofStep> {
        self.steps.iter().find(|s| s.id == id)
    }
}
