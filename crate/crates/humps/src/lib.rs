//! Exact combinatorics of lattice paths over the step alphabet `{U, F, D}`.
//!
//! The crate covers three path shapes, each in a height-constrained and an
//! unconstrained ("super") variant: flat-free balanced paths, fixed-length
//! three-letter paths, and Schröder-shaped paths whose flat count is tied to
//! the order. On top of the core path type it provides:
//!
//! * occurrence statistics ([`stats`]): humps (`U F* D`), valleys
//!   (`D F* U`), a four-way first/last classification, and run words;
//! * capped exhaustive enumeration in lexicographic order
//!   ([`enumeration`]), used throughout as an independent counting oracle;
//! * a hump-marking correspondence ([`bijection`]) between marked
//!   nonnegative paths and unconstrained paths whose first non-flat step is
//!   up, with both directions and the point relocation rule exposed;
//! * exact closed-form counts ([`formulas`]) for everything the other
//!   modules enumerate, so each side can be checked against the other;
//! * peak-to-colored-flat expansion ([`colored`]) behind the two-sided
//!   coloring identity;
//! * deterministic ASCII and SVG renderings ([`render`]).
//!
//! All counts are exact big integers; nothing here is floating point.

pub mod bijection;
pub mod colored;
pub mod enumeration;
pub mod formulas;
pub mod path;
pub mod render;
pub mod stats;

pub use path::{Family, FamilyKind, HeightProfile, PathError, Step, StepCounts, StepSeq};
