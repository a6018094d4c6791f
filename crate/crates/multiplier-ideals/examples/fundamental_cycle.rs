//! A star-shaped rational singularity: fundamental cycle, arithmetic genus,
//! and a first multiplier ideal that is strictly smaller than the local
//! ring because the singularity is not log-terminal.

use multiplier_ideals::format::parse_resolution;
use multiplier_ideals::{jumping, Rational, Result};

fn main() -> Result<()> {
    let path = format!("{}/fixtures/star-singularity.json", env!("CARGO_MANIFEST_DIR"));
    let (data, _) = parse_resolution(&std::fs::read_to_string(path).expect("fixture ships with the crate"))?;

    let z = data.fundamental_cycle()?;
    println!("fundamental cycle Z = {z}");
    println!("arithmetic genus    = {}  (0 = rational singularity)", data.arithmetic_genus(&z)?);

    let k = data.relative_canonical()?;
    println!("K_pi                = {k}");
    println!("min k_i < -1, so the singularity is not log-canonical");

    // the multiplier ideal at exponent 0 is already a proper ideal here
    let base = jumping::multiplier_divisor(&data, &Rational::zero())?;
    println!("divisor at lambda 0 = {base}");
    println!("lct                 = {}", jumping::log_canonical_threshold(&data)?);

    let records = jumping::jumping_chain(&data, &Rational::zero(), &Rational::from_int(2))?;
    let lambdas: Vec<String> = records.iter().map(|r| r.lambda.to_string()).collect();
    println!("jumping numbers in (0, 2]: {}", lambdas.join(", "));
    Ok(())
}
