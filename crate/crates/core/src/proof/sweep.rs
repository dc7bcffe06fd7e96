//! Grid audit of the lower bound against the beta function and the earlier
//! bounds.
//!
//! On the grid `x = i/n, y = j/n` every bound is a rational function of
//! `i, j, n` with integer coefficients, and `B(i/n, j/n)` is assembled from a
//! table of `Gamma(k/n)`, `k = 1..2n`, so each cell costs a handful of
//! multi-precision operations.

use rayon::prelude::*;
use serde::Serialize;

use super::ProofError;
use crate::exact::{format_rational, rat, Rational};
use crate::special::{self, Hp, Precision};

pub const CSV_HEADER: &str = "x,y,beta,new_bound,ivady_lower,alzer_lower,margin_new,margin_ivady";

/// Rows per parallel block; blocks are handed to the sink in order.
const BLOCK: i64 = 16;

#[derive(Clone, Debug)]
pub struct SweepRow {
    pub i: i64,
    pub j: i64,
    pub n: i64,
    pub beta: Hp,
    pub new_bound: Hp,
    pub ivady_lower: Hp,
    pub ivady_upper: Hp,
    pub alzer_lower: Hp,
    pub alzer_upper: Hp,
}

impl SweepRow {
    pub fn x(&self) -> Rational {
        rat(self.i, self.n)
    }

    pub fn y(&self) -> Rational {
        rat(self.j, self.n)
    }

    pub fn margin_new(&self) -> Hp {
        &self.beta - &self.new_bound
    }

    pub fn margin_ivady(&self) -> Hp {
        &self.beta - &self.ivady_lower
    }

    pub fn margin_ivady_upper(&self) -> Hp {
        &self.ivady_upper - &self.beta
    }

    pub fn margin_alzer(&self) -> Hp {
        &self.beta - &self.alzer_lower
    }

    pub fn margin_alzer_upper(&self) -> Hp {
        &self.alzer_upper - &self.beta
    }

    /// One CSV line in the order of [`CSV_HEADER`], values as `f64`.
    pub fn csv_line(&self) -> String {
        let n = self.n as f64;
        format!(
            "{},{},{},{},{},{},{},{}",
            self.i as f64 / n,
            self.j as f64 / n,
            self.beta.to_f64(),
            self.new_bound.to_f64(),
            self.ivady_lower.to_f64(),
            self.alzer_lower.to_f64(),
            self.margin_new().to_f64(),
            self.margin_ivady().to_f64(),
        )
    }
}

/// Smallest value of one margin column and where it occurs.
#[derive(Clone, Debug, Serialize)]
pub struct MarginMin {
    #[serde(serialize_with = "as_decimal")]
    pub value: Hp,
    #[serde(serialize_with = "as_fraction")]
    pub x: Rational,
    #[serde(serialize_with = "as_fraction")]
    pub y: Rational,
}

impl MarginMin {
    fn offer(slot: &mut Option<MarginMin>, value: Hp, row: &SweepRow) {
        if slot.as_ref().is_none_or(|m| value < m.value) {
            *slot = Some(MarginMin { value, x: row.x(), y: row.y() });
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepSummary {
    pub grid_n: i64,
    pub cells: usize,
    /// `B - (x+y)/(xy) (1 - 2xy/(x+y+1))`.
    pub min_margin_new: MarginMin,
    /// `B - (x+y-xy)/(xy)`.
    pub min_margin_ivady_lower: MarginMin,
    /// `(x+y)/(xy(1+xy)) - B`.
    pub min_margin_ivady_upper: MarginMin,
    /// `B - [1 - alpha (1-x)(1-y)/((1+x)(1+y))]/(xy)`.
    pub min_margin_alzer_lower: MarginMin,
    /// `[1 - (1-x)(1-y)/((1+x)(1+y))]/(xy) - B`.
    pub min_margin_alzer_upper: MarginMin,
    #[serde(serialize_with = "as_decimal")]
    pub alpha: Hp,
    /// Number of cells where the new bound beats the Ivady lower bound.
    pub new_beats_ivady: usize,
}

fn as_decimal<S: serde::Serializer>(v: &Hp, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_sci_string(25))
}

fn as_fraction<S: serde::Serializer>(v: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(v))
}

struct Grid {
    n: i64,
    prec: Precision,
    /// `gamma[k] = Gamma(k/n)` for `k = 1..=2n`; index 0 unused.
    gamma: Vec<Hp>,
    alpha: Hp,
}

impl Grid {
    fn new(n: i64, prec: Precision) -> Result<Self, ProofError> {
        let gamma = std::iter::once(Ok(Hp::zero(prec)))
            .chain((1..=2 * n).into_par_iter().map(|k| special::gamma(&Hp::from_ratio(k as i128, n as i128, prec))).collect::<Vec<_>>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Grid { n, prec, gamma, alpha: special::alpha(prec) })
    }

    fn ratio(&self, num: i128, den: i128) -> Hp {
        Hp::from_ratio(num, den, self.prec)
    }

    fn row(&self, i: i64, j: i64) -> SweepRow {
        let (n, a, b) = (self.n as i128, i as i128, j as i128);
        let k = (i + j) as usize;
        let beta = &self.gamma[i as usize] * &self.gamma[j as usize] / &self.gamma[k];
        let inv_xy = self.ratio(n * n, a * b);
        // (1-x)(1-y)/((1+x)(1+y))
        let damp = self.ratio((n - a) * (n - b), (n + a) * (n + b));
        SweepRow {
            i,
            j,
            n: self.n,
            beta,
            new_bound: self.ratio((a + b) * (n * (a + b + n) - 2 * a * b), a * b * (a + b + n)),
            ivady_lower: self.ratio(n * (a + b) - a * b, a * b),
            ivady_upper: self.ratio((a + b) * n * n * n, a * b * (n * n + a * b)),
            alzer_lower: &inv_xy * (Hp::one(self.prec) - &self.alpha * &damp),
            alzer_upper: &inv_xy * (Hp::one(self.prec) - damp),
        }
    }
}

/// Evaluate every cell `(i/n, j/n)`, `1 <= i, j <= n`, in row-major order,
/// hand each row to `sink` and return the column minima.
pub fn sweep_theorem(
    grid_n: i64,
    prec: Precision,
    mut sink: impl FnMut(&SweepRow),
) -> Result<SweepSummary, ProofError> {
    if grid_n < 2 {
        return Err(ProofError::Domain("grid_n must be >= 2".into()));
    }
    let grid = Grid::new(grid_n, prec)?;
    let mut mins: [Option<MarginMin>; 5] = Default::default();
    let mut cells = 0;
    let mut new_beats_ivady = 0;
    let mut start = 1;
    while start <= grid_n {
        let end = (start + BLOCK - 1).min(grid_n);
        let block: Vec<Vec<SweepRow>> = (start..=end)
            .into_par_iter()
            .map(|i| (1..=grid_n).map(|j| grid.row(i, j)).collect())
            .collect();
        for row in block.iter().flatten() {
            sink(row);
            cells += 1;
            if row.new_bound > row.ivady_lower {
                new_beats_ivady += 1;
            }
            MarginMin::offer(&mut mins[0], row.margin_new(), row);
            MarginMin::offer(&mut mins[1], row.margin_ivady(), row);
            MarginMin::offer(&mut mins[2], row.margin_ivady_upper(), row);
            MarginMin::offer(&mut mins[3], row.margin_alzer(), row);
            MarginMin::offer(&mut mins[4], row.margin_alzer_upper(), row);
        }
        start = end + 1;
    }
    let [new, ivady_lower, ivady_upper, alzer_lower, alzer_upper] = mins.map(|m| m.expect("grid is nonempty"));
    Ok(SweepSummary {
        grid_n,
        cells,
        min_margin_new: new,
        min_margin_ivady_lower: ivady_lower,
        min_margin_ivady_upper: ivady_upper,
        min_margin_alzer_lower: alzer_lower,
        min_margin_alzer_upper: alzer_upper,
        alpha: grid.alpha,
        new_beats_ivady,
    })
}

/// A single grid cell, for spot checks.
pub fn sweep_cell(i: i64, j: i64, grid_n: i64, prec: Precision) -> Result<SweepRow, ProofError> {
    if !(1..=grid_n).contains(&i) || !(1..=grid_n).contains(&j) {
        return Err(ProofError::Domain(format!("cell ({i},{j}) outside 1..={grid_n}")));
    }
    let x = Hp::from_ratio(i as i128, grid_n as i128, prec);
    let y = Hp::from_ratio(j as i128, grid_n as i128, prec);
    let mut gamma = vec![Hp::zero(prec); (i + j + 1) as usize];
    gamma[i as usize] = special::gamma(&x)?;
    gamma[j as usize] = special::gamma(&y)?;
    gamma[(i + j) as usize] = special::gamma(&(&x + &y))?;
    let grid = Grid { n: grid_n, prec, gamma, alpha: special::alpha(prec) };
    Ok(grid.row(i, j))
}
