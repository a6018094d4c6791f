//! Jumping numbers do not depend on the chosen log-resolution. Blowing up
//! a free point never enlarges the minimal jumping divisors; blowing up an
//! intersection point inserts the new component into exactly those minimal
//! jumping divisors that contained both of its parents.

use multiplier_ideals::format::{parse_resolution, support_sum};
use multiplier_ideals::{jumping, Rational, Result};

fn main() -> Result<()> {
    let path = format!("{}/fixtures/two-cusps.json", env!("CARGO_MANIFEST_DIR"));
    let (data, _) = parse_resolution(&std::fs::read_to_string(path).expect("fixture ships with the crate"))?;

    let from = Rational::zero();
    let to = Rational::from_int(2);
    let base = jumping::jumping_chain(&data, &from, &to)?;

    let free = data.blowup_free_point(0)?;
    let split = data.blowup_intersection(0, 2)?;
    println!("base resolution: {} components", data.total_count());
    println!("after a free blow-up on E1: {} components", free.total_count());
    println!("after blowing up E1 ∩ E3:   {} components\n", split.total_count());

    let free_chain = jumping::jumping_chain(&free, &from, &to)?;
    let split_chain = jumping::jumping_chain(&split, &from, &to)?;

    let lambdas = |records: &[jumping::JumpRecord]| -> Vec<Rational> {
        records.iter().map(|r| r.lambda.clone()).collect::<Vec<_>>()
    };
    assert_eq!(lambdas(&base), lambdas(&free_chain));
    assert_eq!(lambdas(&base), lambdas(&split_chain));
    println!("jumping numbers agree on all three resolutions: {:?}\n", lambdas(&base));

    println!("{:<8} {:<16} {:<18} after E1 ∩ E3 blow-up", "lambda", "G (original)", "G (free blow-up)");
    for ((b, f), s) in base.iter().zip(&free_chain).zip(&split_chain) {
        println!(
            "{:<8} {:<16} {:<18} {}",
            b.lambda.to_string(),
            support_sum(&data, &b.g_lambda),
            support_sum(&free, &f.g_lambda),
            support_sum(&split, &s.g_lambda),
        );
        // the new component of the intersection blow-up (index 5, label E8)
        // joins G exactly when E1 and E3 both belonged to it
        let had_both = !b.g_lambda[0].is_zero() && !b.g_lambda[2].is_zero();
        assert_eq!(!s.g_lambda[5].is_zero(), had_both);
        // a freely blown-up component never joins a minimal jumping divisor
        assert!(f.g_lambda[5].is_zero());
    }
    println!("\nfree blow-ups never enter G; intersection blow-ups enter iff both parents did");
    Ok(())
}
