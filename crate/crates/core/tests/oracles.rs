mod common;

use betabound::special::{self, Hp, Precision};
use common::{beta_by_quadrature, close, gamma_by_quadrature, ORACLE};

const P: Precision = Precision::DEFAULT;

#[test]
fn gamma_matches_quadrature() {
    for (n, d) in [(23, 10), (1, 2), (7, 5)] {
        let a = Hp::from_ratio(n, d, ORACLE);
        let reference = gamma_by_quadrature(&a);
        let value = special::gamma(&Hp::from_ratio(n, d, P)).unwrap();
        assert!(close(&value.with_precision(ORACLE), &reference, 25), "Gamma({n}/{d}): {value} vs {reference}");
    }
}

#[test]
fn beta_matches_quadrature() {
    for (a, b) in [((3, 10), (4, 10)), ((1, 5), (9, 25))] {
        let ha = Hp::from_ratio(a.0, a.1, ORACLE);
        let hb = Hp::from_ratio(b.0, b.1, ORACLE);
        let reference = beta_by_quadrature(&ha, &hb);
        let value = special::beta(&Hp::from_ratio(a.0, a.1, P), &Hp::from_ratio(b.0, b.1, P)).unwrap();
        let scale = reference.abs().max(Hp::one(ORACLE));
        let rel = (value.with_precision(ORACLE) - &reference).abs() / scale;
        assert!(rel < Hp::ten_pow(-25, ORACLE), "B at {a:?},{b:?}: {value} vs {reference}");
    }
}

#[test]
fn quadrature_reproduces_known_closed_forms() {
    let half = Hp::from_ratio(1, 2, ORACLE);
    let pi = Hp::pi(ORACLE);
    assert!(close(&gamma_by_quadrature(&half), &pi.sqrt(), 32));
    assert!(close(&beta_by_quadrature(&half, &half), &pi, 32));
}
