//! Linear-extension gap sequences of marked posets.
//!
//! For a finite poset `P` with two distinguished elements `x ≱ y`, `N_k` counts
//! the linear extensions `f` with `f(y) - f(x) = k`. The Kahn–Saks inequality
//! says `N_k² ≥ N_{k-1} N_{k+1}`. This crate computes these sequences exactly,
//! decides the combinatorial conditions that characterize when the inequality
//! is tight (flat and doubling progressions), and checks the whole picture by
//! exhaustive enumeration and by exact rational geometry of the order polytope.
//!
//! Module map:
//!
//! - [`poset`]: posets, marked posets, clause subsets, Hasse diagram, dual,
//!   augmentation and the `x ~ y` quotient.
//! - [`linext`]: linear extensions, gap sequences, the constructive extension
//!   lemmas and the doubling bijection.
//! - [`conditions`]: the `M`, `M*`, `E`, `E*`, `C` conditions and the two
//!   extension-side structural predicates.
//! - [`classify`]: per-index classification, shape reports, theorem
//!   cross-validation and example families.
//! - [`geometry`]: the slices `K` and `L` of the order polytope, support
//!   values, face dimensions, candidate directions and witness vectors.
//! - [`harness`]: exhaustive poset generation and sweep verification.
//! - [`format`] and [`report`]: the text poset format and the analysis report.

pub mod bitset;
pub mod classify;
pub mod conditions;
mod error;
pub mod format;
pub mod geometry;
pub mod harness;
pub mod linext;
pub mod poset;
pub mod report;

pub use bitset::ElementSet;
pub use classify::{KClass, KTag, ShapeReport, TheoremReport};
pub use conditions::ConditionProfile;
pub use error::{Error, Result};
pub use linext::{GapSequence, LinearExtension};
pub use poset::{Clause, MarkedPoset, Poset};
