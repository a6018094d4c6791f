//! Minimal and maximal jumping divisors, and how a jumping divisor carries
//! one multiplier ideal back to the previous one.
//!
//! At lambda = 1/2 on the dicritical chain every component is a candidate,
//! so the maximal jumping divisor is the whole reduced exceptional divisor,
//! while the minimal one is E1+E2+E4+E6; twisting by anything between the
//! two recovers the predecessor ideal exactly.

use multiplier_ideals::format::{parse_resolution, support_sum};
use multiplier_ideals::{contribution, jumping, unloading, Rational, Result};

fn main() -> Result<()> {
    let path = format!("{}/fixtures/dicritical-chain.json", env!("CARGO_MANIFEST_DIR"));
    let (data, _) = parse_resolution(&std::fs::read_to_string(path).expect("fixture ships with the crate"))?;

    let lambda = Rational::new(1, 2);
    let g_min = contribution::minimal_jumping_divisor(&data, &lambda)?;
    let h_max = contribution::maximal_jumping_divisor(&data, &lambda)?;
    println!("at lambda = {lambda} on {}:", data.name());
    println!("  G (minimal jumping divisor) = {}", support_sum(&data, &g_min));
    println!("  H (maximal jumping divisor) = {}", support_sum(&data, &h_max));

    let pred = jumping::predecessor_divisor(&data, &lambda)?;
    let at = jumping::multiplier_divisor(&data, &lambda)?;
    println!("  previous multiplier divisor = {pred}");
    println!("  multiplier divisor at {lambda} = {at}");

    // twisting by any reduced divisor in [G, H] recovers the predecessor
    // ideal; a divisor missing part of G jumps strictly past it
    let between = contribution::minimal_contributing_divisor(&data, &lambda, &h_max)?;
    for g in [&g_min, &h_max, &between] {
        let nested = contribution::contribution_ideal(&data, &lambda, g)?;
        println!(
            "  twist by {:<18} gives {nested}  (jumping divisor: {})",
            support_sum(&data, g),
            contribution::is_jumping_divisor(&data, &lambda, g)?
        );
    }

    // the jump in the other direction: adding G to the predecessor closure
    // lands exactly on the multiplier divisor at lambda
    let forward = unloading::antinef_closure(&data, &(&pred + &g_min))?;
    println!("  closure(predecessor + G)   = {forward}");
    assert_eq!(forward, at);
    Ok(())
}
