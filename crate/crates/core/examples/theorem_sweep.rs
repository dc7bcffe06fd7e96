// Compare the beta function with four lower and upper bounds on a grid.
//
// ```bash
// cargo run --example theorem_sweep
// ```

use std::error::Error;

use betabound::exact::format_rational;
use betabound::proof::{self, CSV_HEADER};
use betabound::special::Precision;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let mut first_rows = Vec::new();
    let summary = proof::sweep_theorem(50, Precision::DEFAULT, |row| {
        if first_rows.len() < 3 {
            first_rows.push(row.csv_line());
        }
    })?;
    println!("{CSV_HEADER}");
    for line in &first_rows {
        println!("{line}");
    }
    let m = &summary.min_margin_new;
    println!(
        "{} cells, smallest margin {:.10} at ({}, {})",
        summary.cells,
        m.value,
        format_rational(&m.x),
        format_rational(&m.y)
    );
    println!("new bound beats the older lower bound in {} cells", summary.new_beats_ivady);
    assert!(m.value.is_positive());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
