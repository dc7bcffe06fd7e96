//! log-gamma, gamma, beta and the first three polygamma functions on the
//! positive axis.
//!
//! Every function shifts its argument `x` up to `z = x + n >= N` with the
//! functional recurrences and then sums the asymptotic series at `z`; see
//! [`super::series`] for the choice of `N` and the truncation order.

use super::hp::Hp;
use super::series::{shift_threshold, tables};
use super::SpecialError;

fn require_positive(x: &Hp, what: &str) -> Result<(), SpecialError> {
    if x.is_positive() {
        Ok(())
    } else {
        Err(SpecialError::Domain(format!("{what} needs a positive argument, got {x:.6}")))
    }
}

/// Shift `x` up to the series threshold. Returns `z` and the list of
/// skipped arguments `x, x+1, ..., z-1`.
fn shifted(x: &Hp) -> (Hp, Vec<Hp>) {
    let threshold = Hp::from_i64(shift_threshold(x.precision()), x.precision());
    let mut z = x.clone();
    let mut skipped = Vec::new();
    while z < threshold {
        skipped.push(z.clone());
        z = &z + 1;
    }
    (z, skipped)
}

/// `log Gamma(x)` for `x > 0`.
///
/// `log Gamma(x) = log Gamma(z) - log(x (x+1) ... (z-1))` with the Stirling
/// series `(z - 1/2) ln z - z + ln(2 pi)/2 + sum B_2k / (2k (2k-1) z^(2k-1))`.
pub fn log_gamma(x: &Hp) -> Result<Hp, SpecialError> {
    require_positive(x, "log_gamma")?;
    let t = tables(x.precision());
    let (z, skipped) = shifted(x);
    let inv = z.recip();
    let inv_sq = &inv * &inv;
    let mut power = inv.clone();
    let mut tail = Hp::zero(x.precision());
    for c in &t.log_gamma {
        tail = tail + c * &power;
        power = &power * &inv_sq;
    }
    let half = Hp::from_ratio(1, 2, x.precision());
    let mut value = (&z - &half) * z.ln() - &z + &t.half_ln_two_pi + tail;
    if !skipped.is_empty() {
        let product = skipped.iter().fold(Hp::one(x.precision()), |acc, s| acc * s);
        value = value - product.ln();
    }
    Ok(value)
}

pub fn gamma(x: &Hp) -> Result<Hp, SpecialError> {
    Ok(log_gamma(x)?.exp())
}

/// `B(x, y) = exp(log Gamma(x) + log Gamma(y) - log Gamma(x + y))`.
pub fn beta(x: &Hp, y: &Hp) -> Result<Hp, SpecialError> {
    require_positive(x, "beta")?;
    require_positive(y, "beta")?;
    Ok((log_gamma(x)? + log_gamma(y)? - log_gamma(&(x + y))?).exp())
}

/// Digamma `psi(x) = Gamma'(x)/Gamma(x)`.
pub fn psi(x: &Hp) -> Result<Hp, SpecialError> {
    require_positive(x, "psi")?;
    let t = tables(x.precision());
    let (z, skipped) = shifted(x);
    let inv = z.recip();
    let inv_sq = &inv * &inv;
    let mut power = inv_sq.clone();
    let mut tail = Hp::zero(x.precision());
    for c in &t.digamma {
        tail = tail + c * &power;
        power = &power * &inv_sq;
    }
    let mut value = z.ln() - &inv / 2 - tail;
    for s in &skipped {
        value = value - s.recip();
    }
    Ok(value)
}

/// Trigamma `psi'(x)`.
pub fn psi1(x: &Hp) -> Result<Hp, SpecialError> {
    require_positive(x, "psi1")?;
    let t = tables(x.precision());
    let (z, skipped) = shifted(x);
    let inv = z.recip();
    let inv_sq = &inv * &inv;
    let mut power = &inv_sq * &inv;
    let mut tail = Hp::zero(x.precision());
    for c in &t.trigamma {
        tail = tail + c * &power;
        power = &power * &inv_sq;
    }
    let mut value = &inv + &inv_sq / 2 + tail;
    for s in &skipped {
        let r = s.recip();
        value = value + &r * &r;
    }
    Ok(value)
}

/// Tetragamma `psi''(x)`.
pub fn psi2(x: &Hp) -> Result<Hp, SpecialError> {
    require_positive(x, "psi2")?;
    let t = tables(x.precision());
    let (z, skipped) = shifted(x);
    let inv = z.recip();
    let inv_sq = &inv * &inv;
    let mut power = &inv_sq * &inv_sq;
    let mut tail = Hp::zero(x.precision());
    for c in &t.tetragamma {
        tail = tail + c * &power;
        power = &power * &inv_sq;
    }
    let mut value = -(&inv_sq + &inv_sq * &inv) - tail;
    for s in &skipped {
        let r = s.recip();
        value = value - (&r * &r * &r) * 2;
    }
    Ok(value)
}

/// `Delta(x) = 1/x^2 - Gamma(x)^2 / Gamma(2x)`.
pub fn delta(x: &Hp) -> Result<Hp, SpecialError> {
    require_positive(x, "delta")?;
    let ratio = (log_gamma(x)? * 2 - log_gamma(&(x * 2))?).exp();
    Ok((x * x).recip() - ratio)
}

/// Location and value of the maximum of `Delta` on `x >= 1`.
#[derive(Clone, Debug)]
pub struct DeltaMaximum {
    pub argmax: Hp,
    pub value: Hp,
}

/// Coarse scan of `x = 1.0, 1.1, ..., 3.0`, then golden-section search on
/// the bracketing pair of scan cells to an argument tolerance of `1e-12`.
pub fn maximize_delta(prec: super::Precision) -> Result<DeltaMaximum, SpecialError> {
    let grid: Vec<Hp> = (10..=30).map(|k| Hp::from_ratio(k, 10, prec)).collect();
    let values = grid.iter().map(delta).collect::<Result<Vec<_>, _>>()?;
    let best = (0..values.len())
        .max_by(|&a, &b| values[a].partial_cmp(&values[b]).expect("finite values"))
        .expect("nonempty scan");
    if best == 0 || best == values.len() - 1 {
        return Err(SpecialError::NoInteriorMaximum);
    }
    let mut a = grid[best - 1].clone();
    let mut b = grid[best + 1].clone();
    let tol = Hp::ten_pow(-12, prec);
    // 1/phi
    let inv_phi = (Hp::from_i64(5, prec).sqrt() - 1) / 2;
    let mut c = &b - (&b - &a) * &inv_phi;
    let mut d = &a + (&b - &a) * &inv_phi;
    let mut fc = delta(&c)?;
    let mut fd = delta(&d)?;
    while (&b - &a) > tol {
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = &b - (&b - &a) * &inv_phi;
            fc = delta(&c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = &a + (&b - &a) * &inv_phi;
            fd = delta(&d)?;
        }
    }
    let argmax = (&a + &b) / 2;
    let value = delta(&argmax)?;
    Ok(DeltaMaximum { argmax, value })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::Precision;

    const P: Precision = Precision::DEFAULT;

    fn hp(s: &str) -> Hp {
        Hp::parse(s, P).unwrap()
    }

    fn close(a: &Hp, b: &Hp, tol_exp: i32) -> bool {
        (a - b).abs() <= Hp::ten_pow(tol_exp, P) * (b.abs().max(Hp::one(P)))
    }

    #[test]
    fn log_gamma_classical_values() {
        assert!(log_gamma(&Hp::one(P)).unwrap().abs() < Hp::ten_pow(-45, P));
        assert!(log_gamma(&Hp::from_i64(2, P)).unwrap().abs() < Hp::ten_pow(-45, P));
        let half = log_gamma(&Hp::from_ratio(1, 2, P)).unwrap();
        assert!(close(&half, &(Hp::pi(P).ln() / 2), -45));
        // log 9! = log 362880
        let ten = log_gamma(&Hp::from_i64(10, P)).unwrap();
        assert!(close(&ten, &Hp::from_i64(362880, P).ln(), -45));
    }

    #[test]
    fn polygamma_classical_values() {
        let pi = Hp::pi(P);
        assert!(close(&psi1(&Hp::one(P)).unwrap(), &(&pi * &pi / 6), -45));
        // psi(1) = -gamma, psi''(1) = -2 zeta(3); digits from the literature
        let euler = hp("0.57721566490153286060651209008240243104215933593992");
        assert!(close(&psi(&Hp::one(P)).unwrap(), &-euler, -45));
        let zeta3 = hp("1.2020569031595942853997381615114499907649862923405");
        assert!(close(&psi2(&Hp::one(P)).unwrap(), &(zeta3 * -2), -45));
    }

    #[test]
    fn beta_classical_values() {
        assert!(close(&beta(&Hp::one(P), &Hp::one(P)).unwrap(), &Hp::one(P), -45));
        let half = Hp::from_ratio(1, 2, P);
        assert!(close(&beta(&half, &half).unwrap(), &Hp::pi(P), -45));
    }

    #[test]
    fn domain_errors() {
        assert!(log_gamma(&Hp::zero(P)).is_err());
        assert!(psi(&Hp::from_i64(-1, P)).is_err());
        assert!(psi1(&Hp::zero(P)).is_err());
        assert!(psi2(&Hp::zero(P)).is_err());
        assert!(beta(&Hp::one(P), &Hp::zero(P)).is_err());
    }

    #[test]
    fn delta_values() {
        assert!(delta(&Hp::one(P)).unwrap().abs() < Hp::ten_pow(-45, P));
        let twelfth = Hp::from_ratio(1, 12, P);
        assert!(close(&delta(&Hp::from_i64(2, P)).unwrap(), &twelfth, -45));
    }
}
