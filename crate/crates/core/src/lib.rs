//! Finite 2-categories and bicategories with executable decision procedures
//! for equivalences, adjunctions, terminal objects, absolute right lifting
//! diagrams, and limits, in two ambient settings: strict 2-functors with
//! 2-natural transformations, and normal pseudofunctors with icons.
//!
//! Everything is exact and enumerative: categories are composition tables,
//! coherence data is stored per tuple, and every universal property is
//! checked either by a complete finite criterion or against an explicit
//! probe battery.

pub mod bicat;
pub mod error;
pub mod fincat;
pub mod name;
pub mod report;
pub mod verdict;

pub use error::{Error, SizeGuard};
pub use report::{CheckReport, Witness};
pub use verdict::Verdict;
