//! Construction and verification kernels for Ramsey-type objects with girth
//! constraints.
//!
//! The crate is `no_std` (with `alloc`) unless the `std` feature is enabled.
//! The `std` feature only adds wall-clock limits to [`SearchBudget`] and
//! `std::error::Error` impls; every verdict is otherwise identical.
//!
//! Layout:
//! - [`graph`], [`hypergraph`], [`girth`], [`colouring`]: exact representations,
//!   systems of copies, both girth notions and colouring/arrowing searches.
//! - [`sampling`], [`deletion`], [`trial`]: seeded random constructions and the
//!   short-cycle deletion pipeline.
//! - [`bounds`]: log-space arithmetic and the constant chains, container
//!   condition, expectations and tail bounds.
//! - [`exact`]: exhaustive Ramsey, van der Waerden and extremal searches.
#![cfg_attr(not(feature = "std"), no_std)]
#![deny(unsafe_code)]

extern crate alloc;
#[cfg(test)]
#[macro_use]
extern crate std;

pub mod bounds;
pub mod budget;
pub mod colouring;
pub mod deletion;
pub mod error;
pub mod exact;
pub mod girth;
pub mod graph;
pub mod hypergraph;
pub mod sampling;
pub mod trial;

mod combin;

pub use crate::budget::{Meter, SearchBudget};
pub use crate::colouring::{
    arrows, colouring_search, verify_colouring, ArrowOutcome, Colouring, ColouringOutcome,
};
pub use crate::deletion::{delete_short_cycles, Deletion};
pub use crate::error::{Error, Result};
pub use crate::girth::{enumerate_short_cycles, sparsity_girth, CycleReport, GirthVerdict};
pub use crate::graph::{Girth, Graph};
pub use crate::hypergraph::{
    ap_count_formula, degree_stats, j_degree, system_of_copies, CopyBase, CopyKind, DegreeStats, Labels,
    UniformHypergraph,
};

/// Crate version, echoed into every emitted record.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
