//! Exact computation of trivial source rings of small finite groups.
//!
//! For a permutation group `G` and a prime `p` the crate builds the species table of
//! the trivial source ring in its canonical basis of induced-inflated projectives,
//! inverts it by a closed Möbius-function formula, assembles the primitive
//! idempotents, and computes the matrix of the linearization map from the monomial
//! Burnside ring. Every formula is checked against explicit Brauer quotients of
//! modules built over a finite field.

pub mod error;
pub mod exactfield;
pub mod export;
pub mod modrep;
pub mod monomial;
pub mod permgroup;
pub mod pposet;
pub mod tsring;

pub use error::{Error, Result};
