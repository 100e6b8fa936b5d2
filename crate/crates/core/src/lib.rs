pub mod bitset;
pub mod cache;
pub mod complexes;
pub mod error;
pub mod graphs;
pub mod group;
pub mod isomorph;
pub mod lattice;

pub use error::{Error, Result};

/// Default node budget for isomorphism searches.
pub const DEFAULT_SEARCH_BUDGET: u64 = 100_000_000;

pub mod dsl;
pub mod verify;
