//! Critical divisors per jumping number, and the equivalence of the two
//! jumping-number algorithms: the sequential chain and the
//! candidate-filtering search through critical divisors.

use multiplier_ideals::format::{parse_resolution, support_sum};
use multiplier_ideals::{contribution, jumping, Rational, Result};

fn main() -> Result<()> {
    let path = format!("{}/fixtures/dicritical-chain.json", env!("CARGO_MANIFEST_DIR"));
    let (data, _) = parse_resolution(&std::fs::read_to_string(path).expect("fixture ships with the crate"))?;

    let from = Rational::zero();
    let to = Rational::one();
    let records = jumping::jumping_chain(&data, &from, &to)?;
    println!("jumping numbers of {} in (0, 1] with their critical divisors:\n", data.name());
    for r in &records {
        let criticals = contribution::enumerate_critical_divisors(&data, &r.lambda)?;
        let shown: Vec<String> = criticals.iter().map(|g| support_sum(&data, g)).collect();
        println!(
            "{:<8} G = {:<14} critical: {}",
            r.lambda.to_string(),
            support_sum(&data, &r.g_lambda),
            shown.join("; ")
        );
    }

    let filtered = contribution::jumping_numbers_by_critical_divisors(&data, &from, &to)?;
    let sequential: Vec<Rational> = records.iter().map(|r| r.lambda.clone()).collect();
    println!(
        "\nboth algorithms found the same {} numbers: {}",
        filtered.len(),
        sequential == filtered
    );
    Ok(())
}
