// Gamma, beta and polygamma functions at 50 significant digits.
//
// ```bash
// cargo run --example special_functions
// ```

use std::error::Error;

use betabound::special::{self, Constants, Hp, Precision};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let prec = Precision::DEFAULT;
    let half = Hp::from_ratio(1, 2, prec);
    let one = Hp::one(prec);

    println!("Gamma(1/2)^2 = {:.40}", special::gamma(&half)?.powi(2));
    println!("pi           = {:.40}", Hp::pi(prec));
    println!("psi(1)       = {:.40}", special::psi(&one)?);
    println!("psi'(1)      = {:.40}", special::psi1(&one)?);
    println!("psi''(1)     = {:.40}", special::psi2(&one)?);
    println!("B(3/10, 2/5) = {:.40}", special::beta(&Hp::from_ratio(3, 10, prec), &Hp::from_ratio(2, 5, prec))?);

    let c = Constants::compute(prec)?;
    println!("alpha = {:.30}", c.alpha);
    println!("a1    = {:.30}", c.a1);
    println!("a2    = {:.30}", c.a2);
    println!("a3    = {:.15}", c.a3);
    println!("max Delta = {:.30} at x = {:.12}", c.alzer_max, c.alzer_argmax);
    println!("error budget at {} digits: {:.1}", prec.decimal_digits(), prec.error_budget());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
