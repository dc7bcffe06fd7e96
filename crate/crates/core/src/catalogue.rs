//! The bundled polynomial catalogue: `p0..p4`, `q0..q5`, the bivariate `Q`
//! and the numerator of the lower bound in the `f` positivity argument.
//!
//! The data file is compiled in and parsed once.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::Deserialize;

use crate::exact::{BiPoly, BiPolyJson, Poly, PolyJson};

/// Raw contents of `data/catalogue.json`.
pub const CATALOGUE_JSON: &str = include_str!("../data/catalogue.json");

#[derive(Debug)]
pub struct Catalogue {
    /// PN-type polynomials `p0..p4`.
    pub p: [Poly; 5],
    /// NP-type polynomials `q0..q5` (`q0` is negative on `(0, 1/2)`).
    pub q: [Poly; 6],
    /// `Q(x, y) = -q0(x) + sum_{k=1..5} q_k(x) y^k - (1 - 2x) y^6`.
    pub big_q: BiPoly,
    /// Degree-12 numerator with positive coefficients.
    pub diagonal_numerator: Poly,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Entry {
    Uni(PolyJson),
    Bi(BiPolyJson),
}

fn parse(text: &str) -> Result<Catalogue, String> {
    let raw: BTreeMap<String, Entry> = serde_json::from_str(text).map_err(|e| e.to_string())?;
    let uni = |name: &str| -> Result<Poly, String> {
        match raw.get(name) {
            Some(Entry::Uni(p)) => p.to_poly().map_err(|e| format!("{name}: {e}")),
            _ => Err(format!("missing univariate entry {name}")),
        }
    };
    let p = [uni("p0")?, uni("p1")?, uni("p2")?, uni("p3")?, uni("p4")?];
    let q = [uni("q0")?, uni("q1")?, uni("q2")?, uni("q3")?, uni("q4")?, uni("q5")?];
    let big_q = match raw.get("Q") {
        Some(Entry::Bi(b)) => b.to_bipoly().map_err(|e| format!("Q: {e}"))?,
        _ => return Err("missing bivariate entry Q".into()),
    };
    Ok(Catalogue { p, q, big_q, diagonal_numerator: uni("diagonal_numerator")? })
}

pub fn catalogue() -> &'static Catalogue {
    static CAT: OnceLock<Catalogue> = OnceLock::new();
    CAT.get_or_init(|| parse(CATALOGUE_JSON).expect("bundled catalogue is well formed"))
}

/// `Q` rebuilt from the `q_k`, for cross-checking the stored terms.
pub fn q_from_components(q: &[Poly; 6]) -> BiPoly {
    let mut out = -BiPoly::from_poly_x(&q[0]);
    for (k, qk) in q.iter().enumerate().skip(1) {
        out = out + BiPoly::from_poly_x(qk) * BiPoly::y().pow(k as u32);
    }
    out - BiPoly::from_poly_x(&Poly::from_ints(&[1, -2])) * BiPoly::y().pow(6)
}
