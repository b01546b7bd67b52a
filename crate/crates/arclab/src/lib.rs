//! Exact permutation-group computation for locally s-arc-transitive coset
//! graphs of product-action type.
//!
//! The crate provides a deterministic Schreier–Sims engine ([`group`]),
//! constructors for the concrete groups used by the graph constructions
//! ([`groups`]), bipartite coset graphs ([`coset`], [`graph`]),
//! s-arc-transitivity verification ([`arcs`]), diagonal-type classification
//! of product-action stabilizers ([`pa`]), and a registry of fully
//! self-checking amalgam presets ([`presets`]).
//!
//! See the `examples/` directory for one runnable example per capability.

pub mod arcs;
pub mod block;
pub mod code;
pub mod construct;
pub mod coset;
pub mod error;
pub mod field;
pub mod graph;
pub mod group;
pub mod groups;
pub mod io;
pub mod pa;
pub mod perm;
pub mod presets;
pub mod report;
pub mod wreath;

pub use error::{Error, Result};
pub use group::{PermGroup, StabilizerChain};
pub use perm::Perm;
