//! Watch the unloading procedure compute an antinef closure step by step.
//!
//! On the curve fixture the affine branches push the exceptional values up:
//! closing ⌊F - K⌋ = (3,3,6,3,6,1,1) takes seven unloading steps.

use multiplier_ideals::format::parse_resolution;
use multiplier_ideals::{unloading, Divisor, Result};

fn main() -> Result<()> {
    let path = format!("{}/fixtures/two-cusps-curve.json", env!("CARGO_MANIFEST_DIR"));
    let (data, _) = parse_resolution(&std::fs::read_to_string(path).expect("fixture ships with the crate"))?;

    let start = Divisor::from_ints(&[3, 3, 6, 3, 6, 1, 1]);
    println!("closing {start} on {}", data.name());
    let (closed, steps) = unloading::antinef_closure_traced(&data, &start)?;
    for (i, step) in steps.iter().enumerate() {
        let theta: Vec<&str> = step.theta.iter().map(|&j| data.label(j)).collect();
        if step.theta.is_empty() {
            println!("step {i}: {}  (antinef, done)", step.divisor);
        } else {
            println!("step {i}: {}  negative excess at {}", step.divisor, theta.join(", "));
        }
    }
    println!("closure = {closed}");

    // equal closures mean equal complete ideals
    let d1 = Divisor::from_ints(&[1, 0, 1, 0, 1, 0, 0]);
    let d2 = Divisor::from_ints(&[1, 1, 2, 1, 2, 0, 0]);
    println!("\n{d1} vs {d2}: {:?}", unloading::compare_ideals(&data, &d1, &d2)?);
    Ok(())
}
