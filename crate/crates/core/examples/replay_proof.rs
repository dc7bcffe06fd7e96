// Replay the whole argument step by step and print the report.
//
// ```bash
// cargo run --example replay_proof
// ```

use std::error::Error;

use betabound::proof::{self, ProofReport, ReplayConfig};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let cfg = ReplayConfig::default();
    let report = ProofReport::new(cfg.prec, cfg.width.clone(), proof::replay_all(&cfg));
    for step in report.steps.iter().filter(|s| s.id.starts_with("case2.A")) {
        println!("{:<13} {:<32} {}", step.status.to_string(), step.id, step.claim);
    }
    let s = &report.summary;
    println!("verified {}, failed {}, inconclusive {}", s.verified, s.failed, s.inconclusive);
    if let Some(step) = report.step("case2.A4.g-at-fifth") {
        println!("g(1/5) = {} (printed {})", step.evidence["value"], step.evidence["printed"]);
    }
    if !report.all_verified() {
        return Err("replay left steps unverified".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
