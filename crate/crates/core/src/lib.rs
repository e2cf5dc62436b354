//! Collective argumentation: attack relations between *sets* of arguments.
//!
//! A [`Theory`] is a finite universe of arguments with an attack relation on
//! argument sets that is monotone in both positions. On top of it this crate
//! provides
//!
//! - stable sets, p-stable pairs and plain/positive/negative admissibility
//!   ([`semantics`]),
//! - negative and positive closures ([`closure`]),
//! - the structural properties affirmative, local, semi-local, positive,
//!   negative and normal ([`properties`]),
//! - the classical extension semantics over normal theories ([`dung`]),
//! - a frontend for propositional disjunctive logic programs that compiles
//!   a program into the theory of its abducibles ([`program`]),
//! - brute-force stable-model semantics used to cross-check the compiled
//!   theories ([`oracle`]).
//!
//! ```
//! use collarg::{closure::positive_closure, semantics::stable_sets, Theory};
//!
//! let t: Theory = "args: a b\na -> a\na -> b\n".parse().unwrap();
//! assert!(stable_sets(&t).unwrap().is_empty());
//!
//! let p = positive_closure(&t);
//! assert_eq!(stable_sets(&p).unwrap(), vec![p.set(&["b"]).unwrap()]);
//! ```
//!
//! The guide under `book/` walks through the concepts; its code listings
//! are compiled and run as doctests of this crate.

pub mod bits;
pub mod caf;
pub mod closure;
pub mod dung;
mod error;
pub mod gen;
pub mod oracle;
pub mod program;
pub mod properties;
pub mod semantics;
pub mod theory;

pub use bits::{ArgumentSet, AtomSet, BitSet};
pub use error::{Error, Result};
pub use program::{Program, Rule};
pub use semantics::{AdmissibilityKind, Limits, PStablePair};
pub use theory::{Argument, AttackPair, AttackRelation, Theory};

/// Chapters of the guide, run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/theories.md")]
    mod theories {}
    #[doc = include_str!("../../../book/src/stable.md")]
    mod stable {}
    #[doc = include_str!("../../../book/src/admissibility.md")]
    mod admissibility {}
    #[doc = include_str!("../../../book/src/closures.md")]
    mod closures {}
    #[doc = include_str!("../../../book/src/properties.md")]
    mod properties {}
    #[doc = include_str!("../../../book/src/dung.md")]
    mod dung {}
    #[doc = include_str!("../../../book/src/programs.md")]
    mod programs {}
    #[doc = include_str!("../../../book/src/oracle.md")]
    mod oracle {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
