//! Mutually unbiased bases from clock-and-shift generators.
//!
//! Every construction lives in exact phase form over roots of unity
//! ([`PhaseMatrix`]); numerical questions (products, unitarity, unbiasedness)
//! go through the dense evaluation ([`DenseMatrix`]).
//!
//! - [`schwinger`]: the clock, shift and Fourier generators and their
//!   algebraic identities.
//! - [`constructions`]: the basis families for each dimension class.
//! - [`clique`]: exhaustive search for coprime-difference residue sets.
//! - [`gauss`]: quadratic Gauss sums and reciprocity.
//! - [`verify`]: numerical verification, including a brute-force path.
//! - [`fixtures`]: hard-coded reference matrices in small dimensions.

pub mod clique;
pub mod constructions;
pub mod dense;
pub mod error;
pub mod fixtures;
pub mod gauss;
pub mod phase;
pub mod schwinger;
pub mod verify;

pub use dense::{mat_mul, DenseMatrix, Tolerance};
pub use error::{Error, Result};
pub use phase::{phase_mul_diag, PhaseEntry, PhaseMatrix};
