//! Complexity bounds for closed languages and the machinery that checks them.
//!
//! A [`BoundCell`] names an operation and an operand class; [`bound_formula`]
//! gives its bound. [`verify_tightness`] builds witnesses and checks for equality,
//! [`verify_universal`] enumerates every small class member and checks the
//! inequality, and [`find_witness`] searches where no generator exists.

pub mod cell;
pub mod enumerate;
pub mod report;
pub mod verify;

pub use cell::{bound_formula, BoundCell, BoundError, Class, Operation, Side};
pub use enumerate::{class_languages, enumerate_dfas, languages_with_complexity, EnumLimits};
pub use report::{Mode, Point, Verdict, VerificationReport};
pub use verify::{find_witness, tightness_witness, verify_tightness, verify_universal, Budget, Grid, Phase, SearchOutcome};
