// Rational sandwich bounds for the trigamma and tetragamma functions.
//
// ```bash
// cargo run --example sandwich_bounds
// ```

use std::error::Error;

use betabound::special::{Hp, Precision};
use betabound::yang::{self, SandwichParams, YangA};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let prec = Precision::DEFAULT;
    let params = SandwichParams::compute(prec)?;
    for x in ["0.0001", "0.01", "0.5", "3", "100"] {
        let hx = Hp::parse(x, prec).ok_or("bad literal")?;
        let report = yang::sandwich_check(&hx, &params)?;
        println!("x = {x:>6}: smallest gap {:.6}  {:?}", report.min_margin, report.verdict);
    }

    let x = Hp::from_ratio(1, 5, prec);
    println!(
        "L_x(1/5, 4/5) = {:.25}\nL_x(1/5, 2/5) = {:.25}",
        yang::lx_hp(&x, YangA::FourFifths),
        yang::lx_hp(&x, YangA::TwoFifths)
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
