// Exact rational functions: differentiate, compare by cross-multiplication,
// and replay the identity catalogue behind the proof.
//
// ```bash
// cargo run --example exact_identities
// ```

use std::error::Error;

use betabound::exact::{format_rational, rat, RationalFn};
use betabound::proof::IdentityCatalogue;
use betabound::yang;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // (x+y)/(xy) - 1/x - 1/y vanishes identically.
    let (x, y) = (RationalFn::x(), RationalFn::y());
    let lhs = (&x + &y).checked_div(&(&x * &y))?;
    let rhs = &x.recip()? + &y.recip()?;
    println!("(x+y)/(xy) == 1/x + 1/y: {}", lhs.equivalent(&rhs));

    let q = (&x * &x).checked_div(&(&x + &RationalFn::constant(rat(1, 1))))?;
    println!("d/dx x^2/(x+1) at x = 1/2: {}", format_rational(&q.derivative_x().eval_x(&rat(1, 2))?));

    for check in yang::verify_closed_forms() {
        println!("printed {}(x,{}) matches the symbolic derivative: {}", check.order, check.a, check.matches);
    }

    let identities = IdentityCatalogue::all();
    let holding = identities.iter().filter(|i| i.holds()).count();
    println!("{holding} of {} catalogue identities hold exactly", identities.len());
    for identity in identities.iter().take(3) {
        println!("  {:<28} {}", identity.id, identity.claim);
    }
    assert_eq!(holding, identities.len());
    assert!(!identities[0].perturbed().holds());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
