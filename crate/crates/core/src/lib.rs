//! Exact-arithmetic tools for integer-alphabet configurations on `ℤ^d`:
//! Laurent polynomial annihilators and periodizers, tilings of finite tori
//! by a single tile, and expansivity certificates obtained by combining
//! hyperplane fibers of periodizers into a single monomial.
//!
//! Everything is computed over the integers (rationals inside the linear
//! solvers only), so every verdict the crate produces can be re-checked
//! exactly from the emitted data.

pub mod annihilator;
pub mod config;
pub mod error;
pub mod expansivity;
pub mod lattice;
pub mod poly;
pub mod report;
pub mod tiles;

pub(crate) mod solve;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
