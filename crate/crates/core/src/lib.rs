//! Exact computations for the `GL₂×GL₂×GLₙ` action on `2×2×n` hypermatrices.

pub mod characters;
pub mod check;
pub mod cli;
pub mod error;
pub mod homology;
pub mod laurent;
pub mod lr;
pub mod notation;
pub mod orbits;
pub mod quiver;
pub mod schur;
pub mod weights;

pub use error::{HypermatError, Result};
