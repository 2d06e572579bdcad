//! Numerical verification toolkit for Yang-Baxter structures on the
//! Z2-graded space C^(N|N).
//!
//! The crate builds sparse graded operators (tensor legs, Koszul signs,
//! super-permutations, the odd reflection J), evaluates the quantum and
//! classical solution families attached to the queer superalgebra q(N), and
//! checks the defining identities at randomly sampled admissible points:
//! the associative three-term relation and its diagonal-corrected variant,
//! the quantum and classical exchange relations, unitarity, skew-symmetry,
//! twist and gauge equivalences, the semiclassical expansion, and the scalar
//! addition law that powers the rational case.
//!
//! Checks report dimensionless residuals (largest entry of the signed sum of
//! terms over the largest term magnitude), so tolerances are comparable
//! across families and sizes. With the default `parallel` feature the sample
//! fan-out runs on a rayon pool; results are collected in index order, so
//! parallel and sequential runs produce identical reports.

pub mod cnum;
pub mod error;
pub mod families;
pub mod laurent;
pub mod op;
pub mod operators;
pub mod report;
pub mod runner;
pub mod sample;
pub mod space;
pub mod verify;

pub use error::{Error, Result};
pub use families::{Family, PoleKind, ALL_FAMILIES};
pub use op::GradedOp;
pub use space::Superspace;
pub use verify::{
    run_entry, run_suite, suite_plan, Expectation, Identity, RunConfig, ALL_IDENTITIES,
};
