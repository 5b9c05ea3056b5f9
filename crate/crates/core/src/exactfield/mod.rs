//! Exact arithmetic in cyclotomic fields `Q(ζ_m)` and dense linear algebra over them.

mod cyclo;
mod matrix;

pub use cyclo::{cyclotomic_polynomial, rat, totient, Cyclo, Rat};
pub use matrix::CycloMatrix;
