//! Walk the chain of multiplier ideals of an ideal whose generic element is
//! a pair of transverse cusps, printing each jumping number with its
//! antinef divisor and minimal jumping divisor.

use multiplier_ideals::format::{parse_resolution, support_sum};
use multiplier_ideals::{jumping, Rational, Result};

fn main() -> Result<()> {
    let path = format!("{}/fixtures/two-cusps.json", env!("CARGO_MANIFEST_DIR"));
    let (data, _) = parse_resolution(&std::fs::read_to_string(path).expect("fixture ships with the crate"))?;

    println!("ideal: {}  (F = {})", data.name(), data.f());
    println!("K_pi = {}", data.relative_canonical()?);
    println!("lct  = {}\n", jumping::log_canonical_threshold(&data)?);

    let records = jumping::jumping_chain(&data, &Rational::zero(), &Rational::from_int(2))?;
    println!("{:<10} {:<24} minimal jumping divisor", "lambda", "multiplier divisor");
    for r in &records {
        println!(
            "{:<10} {:<24} {}",
            r.lambda.to_string(),
            r.d_lambda.to_string(),
            support_sum(&data, &r.g_lambda)
        );
    }

    // between two consecutive jumping numbers the multiplier ideal is constant
    let mid = Rational::new(4, 5);
    println!(
        "\nat lambda = {} (between 7/10 and 9/10): {}",
        mid,
        jumping::multiplier_divisor(&data, &mid)?
    );
    Ok(())
}
