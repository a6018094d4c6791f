//! Emit the dual graph of a resolution as GraphViz DOT: dicritical
//! components become double circles, rupture components bold, affine
//! branches gray boxes.

use multiplier_ideals::format::parse_resolution;
use multiplier_ideals::Result;

fn main() -> Result<()> {
    let path = format!("{}/fixtures/two-cusps-curve.json", env!("CARGO_MANIFEST_DIR"));
    let (data, _) = parse_resolution(&std::fs::read_to_string(path).expect("fixture ships with the crate"))?;
    print!("{}", data.to_dot());
    Ok(())
}
