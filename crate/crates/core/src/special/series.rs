//! Coefficient tables shared by the Stirling and polygamma asymptotic
//! series.

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::hp::{Hp, Precision};
use crate::exact::{int, Rational};

/// Arguments are shifted upward by the recurrences until they reach
/// `ceil(0.45 * (digits + 5))` (25 at 50 digits).
pub fn shift_threshold(prec: Precision) -> i64 {
    (0.45 * (prec.decimal_digits() as f64 + 5.0)).ceil() as i64
}

/// Number of Bernoulli terms kept, `ceil(0.7 * (digits + 5))` (39 at 50
/// digits). With the shift above, the first omitted Stirling term is below
/// `10^-(digits + 5)` relative to the result; at 50 digits it is about
/// `1e-60`.
pub fn series_terms(prec: Precision) -> usize {
    (0.7 * (prec.decimal_digits() as f64 + 5.0)).ceil() as usize
}

/// `B_2, B_4, ..., B_{2n}` exactly, from the recurrence
/// `sum_{j=0}^{m} C(m+1, j) B_j = 0`.
pub fn bernoulli_even(n: usize) -> Vec<Rational> {
    static TABLE: OnceLock<Vec<Rational>> = OnceLock::new();
    const CACHED: usize = 120;
    if n <= CACHED {
        let all = TABLE.get_or_init(|| bernoulli_even_uncached(CACHED));
        return all[..n].to_vec();
    }
    bernoulli_even_uncached(n)
}

fn bernoulli_even_uncached(n: usize) -> Vec<Rational> {
    let top = 2 * n;
    let mut b: Vec<Rational> = Vec::with_capacity(top + 1);
    b.push(Rational::one());
    for m in 1..=top {
        let mut acc = Rational::zero();
        let mut binom = BigInt::one();
        for (j, bj) in b.iter().enumerate() {
            acc += bj * Rational::from_integer(binom.clone());
            binom = binom * BigInt::from(m + 1 - j) / BigInt::from(j + 1);
        }
        b.push(-acc / int(m as i64 + 1));
    }
    (1..=n).map(|k| b[2 * k].clone()).collect()
}

/// Multi-precision coefficient tables for one working precision.
pub(crate) struct Tables {
    /// `B_{2k} / (2k (2k-1))`, Stirling series for log-gamma.
    pub log_gamma: Vec<Hp>,
    /// `B_{2k} / (2k)`, digamma.
    pub digamma: Vec<Hp>,
    /// `B_{2k}`, trigamma.
    pub trigamma: Vec<Hp>,
    /// `(2k+1) B_{2k}`, tetragamma.
    pub tetragamma: Vec<Hp>,
    /// `ln(2 pi) / 2`.
    pub half_ln_two_pi: Hp,
}

thread_local! {
    static TABLES: RefCell<HashMap<Precision, Rc<Tables>>> = RefCell::new(HashMap::new());
}

pub(crate) fn tables(prec: Precision) -> Rc<Tables> {
    TABLES.with(|cache| {
        cache
            .borrow_mut()
            .entry(prec)
            .or_insert_with(|| Rc::new(build_tables(prec)))
            .clone()
    })
}

fn build_tables(prec: Precision) -> Tables {
    let bern = bernoulli_even(series_terms(prec));
    let conv = |r: Rational| Hp::from_rational(&r, prec);
    let mut t = Tables {
        log_gamma: Vec::new(),
        digamma: Vec::new(),
        trigamma: Vec::new(),
        tetragamma: Vec::new(),
        half_ln_two_pi: (Hp::pi(prec) * 2).ln() / 2,
    };
    for (idx, b) in bern.into_iter().enumerate() {
        let k = idx as i64 + 1;
        t.log_gamma.push(conv(&b / int(2 * k * (2 * k - 1))));
        t.digamma.push(conv(&b / int(2 * k)));
        t.trigamma.push(conv(b.clone()));
        t.tetragamma.push(conv(&b * int(2 * k + 1)));
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn first_bernoulli_numbers() {
        let b = bernoulli_even(6);
        assert_eq!(
            b,
            vec![rat(1, 6), rat(-1, 30), rat(1, 42), rat(-1, 30), rat(5, 66), rat(-691, 2730)]
        );
        assert_eq!(bernoulli_even(7)[6], rat(7, 6));
    }

    #[test]
    fn documented_constants_at_default_precision() {
        assert_eq!(shift_threshold(Precision::DEFAULT), 25);
        assert_eq!(series_terms(Precision::DEFAULT), 39);
    }
}
