//! Spectral gaps of operators sampled along symbolic sequences.
//!
//! Jacobi operators `(Hψ)(n) = p(T^n ω)ψ(n+1) + p(T^{n−1} ω)ψ(n−1) + q(T^n ω)ψ(n)`
//! whose coefficients are locally constant functions on a full shift with
//! rational weights. The crate computes periodic-orbit approximations of the
//! spectrum, finite-volume integrated densities of states, the group of
//! admissible gap labels, and label-polynomial certificates.

pub mod cantor;
pub mod config;
pub mod error;
pub mod gaps;
pub mod interval;
mod label_expr;
pub mod obstruction;
pub mod rational;
pub mod run;
pub mod sampling;
pub mod shift;
pub mod spectrum;
pub mod tridiag;

pub use error::{GapError, Result};
