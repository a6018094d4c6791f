//! Every antinef divisor D points at a jumping number λ_D through
//! min (k_i + 1 + d_i) / e_i, and among all contributing divisors defining
//! the same nested ideal there is a unique minimal one.

use multiplier_ideals::format::{parse_resolution, support_sum};
use multiplier_ideals::{contribution, Divisor, Rational, Result};

fn main() -> Result<()> {
    let path = format!("{}/fixtures/dicritical-chain.json", env!("CARGO_MANIFEST_DIR"));
    let (data, _) = parse_resolution(&std::fs::read_to_string(path).expect("fixture ships with the crate"))?;

    // the multiplier divisor just below 3/4
    let d = Divisor::from_ints(&[4, 6, 7, 14, 5, 10]);
    let jump = contribution::associated_jump(&data, &d)?;
    println!("D = {d}");
    println!("lambda_D = {}  achieved on {}", jump.lambda, support_sum(&data, &jump.divisor));

    let lambda = Rational::new(3, 4);
    for support in [vec![3usize], vec![3, 5], vec![0, 1, 3, 5]] {
        let g = Divisor::from_support(data.total_count(), &support);
        let report = contribution::analyze(&data, &lambda, &g)?;
        println!(
            "\nG = {:<14} contributes: {:<5}  critical: {:<5}  jumping divisor: {}",
            support_sum(&data, &g),
            report.contributes,
            report.is_critical,
            report.is_jumping_divisor
        );
        if let Some(nested) = &report.nested_divisor {
            println!("  nested ideal divisor    = {nested}");
        }
        if let Some(min) = &report.minimal_contributing {
            println!("  minimal contributor     = {}", support_sum(&data, min));
        }
    }
    Ok(())
}
