//! Exact counting of non-negative integer solutions of `ax + by + cz = n`
//! and `ax + by = n`, built on a logarithmic floor-sum recursion, together
//! with brute-force oracles and checks of the classical identities of
//! Gauss, Sylvester and Eisenstein that the same machinery exposes.

pub mod arith;
pub mod cli;
pub mod denumerant3;
pub mod error;
pub mod floor_sum;
pub mod linear2;
pub mod reduction;
pub mod report;
pub mod residues;

pub use arith::ExactInt;
pub use error::{Error, Result};
