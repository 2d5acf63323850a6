//! Computational toolkit for the monoid of ordered set partitions matched
//! with the symmetric group, its monomial realization inside a matrix-sequence
//! compactification, the layered partial-braid monoid sitting above it, and
//! the induced layered automorphisms of a free group.
//!
//! The crate is organized bottom-up:
//!
//! * [`perm`] and [`partition`] hold the combinatorial ground floor.
//! * [`rmonoid`] builds the matched-pair monoid on top of them, together with
//!   verifiers for the matched-pair axioms and the defining relations.
//! * [`matrix`] implements exact-rational matrix sequences, limits of
//!   polynomial matrix families, and the monomial realization.
//! * [`braid`] implements layered partial braids with a Garside-style
//!   canonical form deciding the word problem per layer.
//! * [`layered`] implements layered free-group automorphisms and the Artin
//!   action of layered braids on them.
//!
//! See the `examples/` directory for one runnable demo per capability.

pub mod braid;
pub mod config;
pub mod error;
pub mod freeword;
pub mod layered;
pub mod matrix;
pub mod partition;
pub mod perm;
pub mod report;
pub mod rmonoid;

pub use config::Config;
pub use error::{Error, Result};
pub use report::{Report, Violation};
