//! JSON wire forms:
//! `{"var": "x", "coeffs": ["num/den", ...]}` for [`Poly`] and
//! `{"terms": [[i, j, "num/den"], ...]}` for [`BiPoly`].
//!
//! Integer coefficients are written without a denominator (`"5533"`);
//! both spellings are accepted on input.

use serde::{Deserialize, Serialize};

use super::{format_rational, parse_rational, BiPoly, ExactError, Poly};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub var: String,
    pub coeffs: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiPolyJson {
    pub terms: Vec<(u32, u32, String)>,
}

impl PolyJson {
    pub fn from_poly(p: &Poly, var: &str) -> Self {
        PolyJson {
            var: var.to_string(),
            coeffs: p.coeffs().iter().map(format_rational).collect(),
        }
    }

    pub fn to_poly(&self) -> Result<Poly, ExactError> {
        if self.var.is_empty() || !self.var.chars().all(char::is_alphabetic) {
            return Err(ExactError::UnknownVariable(self.var.clone()));
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| parse_rational(c))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Poly::new(coeffs))
    }
}

impl BiPolyJson {
    pub fn from_bipoly(p: &BiPoly) -> Self {
        BiPolyJson {
            terms: p.terms().map(|(i, j, c)| (i, j, format_rational(c))).collect(),
        }
    }

    pub fn to_bipoly(&self) -> Result<BiPoly, ExactError> {
        let terms = self
            .terms
            .iter()
            .map(|(i, j, c)| parse_rational(c).map(|c| (*i, *j, c)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(BiPoly::from_terms(terms))
    }
}

impl Poly {
    pub fn to_json(&self, var: &str) -> String {
        serde_json::to_string(&PolyJson::from_poly(self, var)).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Poly, ExactError> {
        let wire: PolyJson =
            serde_json::from_str(text).map_err(|e| ExactError::Json(e.to_string()))?;
        wire.to_poly()
    }
}

impl BiPoly {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&BiPolyJson::from_bipoly(self)).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<BiPoly, ExactError> {
        let wire: BiPolyJson =
            serde_json::from_str(text).map_err(|e| ExactError::Json(e.to_string()))?;
        wire.to_bipoly()
    }
}
