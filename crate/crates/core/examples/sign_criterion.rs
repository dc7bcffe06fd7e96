// Coefficient sign patterns: one sign change certifies positivity below a
// point from a single exact evaluation, and bisection isolates the crossing.
//
// ```bash
// cargo run --example sign_criterion
// ```

use std::error::Error;

use betabound::catalogue::catalogue;
use betabound::exact::{format_rational, int, rat, Poly};
use betabound::sign;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let cat = catalogue();

    let check = sign::positive_below(&cat.p[0], &rat(3, 20))?;
    println!(
        "p0 is {:?}; p0(3/20) = {} so p0 > 0 on [0, 3/20]: {}",
        check.report.pattern.kind,
        format_rational(&check.report.certificate.as_ref().map(|c| c.value.clone()).unwrap_or_default()),
        check.holds
    );

    for (j, q) in cat.q.iter().enumerate().skip(1) {
        let enc = sign::isolate_crossing(q, &int(0), &rat(1, 2), &rat(1, 1_000_000))?;
        println!("x{j} in {enc}");
    }
    let ordered = sign::verify_root_ordering(&cat.q[1..], &int(0), &rat(1, 2), &rat(1, 1_000_000))?;
    println!("x1 < ... < x5: {ordered}");

    // 1 + 2x - 2x^2 stays positive up to (1 + sqrt 3)/2 = 1.366...
    let quadratic = Poly::from_ints(&[1, 2, -2]);
    let pieces = sign::certify_positive_on(&quadratic, &int(0), &rat(13, 10));
    println!("1 + 2x - 2x^2 > 0 on [0, 13/10], certificate pieces: {pieces:?}");
    assert!(check.holds && ordered && pieces.is_some());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
