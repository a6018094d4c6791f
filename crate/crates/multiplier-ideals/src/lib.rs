//! Multiplier ideals and jumping numbers on surfaces with rational
//! singularities, computed exactly from the combinatorics of a
//! log-resolution.
//!
//! The input is an intersection matrix (the exceptional rows of the pairing
//! on a log-resolution, which must be a negative-definite tree of rational
//! curves) together with the value divisor `F` of an ideal. From that data
//! the crate computes, with exact rational arithmetic throughout:
//!
//! - the relative canonical divisor, excesses, component classification
//!   (rupture / dicritical / end), fundamental cycle and arithmetic genus
//!   ([`resolution`]);
//! - antinef closures by unloading, and the containment order of the
//!   complete ideals divisors encode ([`unloading`]);
//! - the ordered sequence of jumping numbers with their multiplier-ideal
//!   divisors, sequentially — each multiplier ideal determines the next
//!   jumping number ([`jumping`]);
//! - minimal and maximal jumping divisors, contributing and critical
//!   divisors, the minimal contributing divisor with a given nested ideal,
//!   and a second, candidate-filtering algorithm for the jumping numbers
//!   used as a cross-check ([`contribution`]);
//! - blow-up simulation, under which the jumping numbers are invariant and
//!   the minimal jumping divisors transform by an explicit rule
//!   ([`resolution`]).
//!
//! The `examples/` directory demonstrates each capability on the bundled
//! fixtures; a thin `multiplier-ideals` binary exposes the same operations
//! as subcommands.
//!
//! ```
//! use multiplier_ideals::{Divisor, ResolutionData, Rational, jumping};
//!
//! // one blow-up of a smooth point, F the exceptional curve taken once
//! let data = ResolutionData::new("point", 1, vec![vec![-1]], Divisor::from_ints(&[1]), None)?;
//! assert!(data.validate().is_valid());
//! let records = jumping::jumping_chain(&data, &Rational::zero(), &Rational::from_int(3))?;
//! let lambdas: Vec<String> = records.iter().map(|r| r.lambda.to_string()).collect();
//! assert_eq!(lambdas, ["2", "3"]);
//! # Ok::<(), multiplier_ideals::Error>(())
//! ```

pub mod contribution;
pub mod divisor;
mod error;
pub mod format;
pub mod jumping;
mod linalg;
pub mod rational;
pub mod resolution;
pub mod unloading;

#[cfg(test)]
pub(crate) mod fixtures;

pub use divisor::{Divisor, PointwiseOrder};
pub use error::{Error, Result};
pub use rational::Rational;
pub use resolution::{ComponentClass, ResolutionData, ValidationReport};
