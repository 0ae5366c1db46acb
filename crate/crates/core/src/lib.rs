//! Star-graphs of group presentations, the `K_{3,3}` special relators and
//! low-index subgroup invariants separating the twelve resulting groups.

pub mod classify;
pub mod cli;
pub mod enumerate;
pub mod family;
pub mod lowindex;
pub mod presentation;
pub mod registry;
pub mod stargraph;
pub mod words;

pub use presentation::{Presentation, PresentationError};
pub use stargraph::{check_special, hyperbolic_flag, SpecialCertificate, StarGraph};
pub use words::{Letter, SignedPermutation, Word, WordError};
