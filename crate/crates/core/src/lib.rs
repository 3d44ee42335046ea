//! Quotient complexity workbench for regular languages closed under prefix,
//! suffix, factor or subword order.
//!
//! Languages are held as canonical quotient automata ([`Language`]), so their
//! complexity is a state count and equality is structural. On top of that sit the
//! regular operations ([`ops`]), the four downward closures ([`closure`]), witness
//! families attaining the known complexity bounds ([`witness`]), a harness that
//! checks those bounds by construction and by exhaustive enumeration
//! ([`bounds`]), and closure/complement orbits ([`kuratowski`]).
//!
//! ```
//! use quotient::{closure::{closure, ClosureKind}, Alphabet, Language};
//!
//! let l = Language::parse("ab", &Alphabet::first(2)).unwrap();
//! let down = closure(ClosureKind::Subword, &l);
//! assert!(down.contains("b").unwrap());
//! assert_eq!(down.complexity(), 4);
//! ```

pub mod alphabet;
pub mod bounds;
pub mod closure;
pub mod dfa;
pub mod error;
pub mod exec;
pub mod format;
pub mod kuratowski;
pub mod language;
pub mod nfa;
pub mod ops;
pub mod regex;
pub mod stateset;
pub mod witness;

pub use alphabet::Alphabet;
pub use dfa::Dfa;
pub use error::{Error, FormatError, RegexError, Result};
pub use exec::Execution;
pub use language::Language;
pub use nfa::Nfa;
pub use regex::Regex;
