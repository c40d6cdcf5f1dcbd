//! Exact combinatorics of type-A crystals.
//!
//! The crate implements the combinatorial model of the symmetric
//! (`B_{kΛ1}`, "row") and anti-symmetric (`B_{Λk}`, "column") crystals of
//! affine sl_n, the combinatorial R-matrix with its energy function, the
//! Lascoux–Schützenberger charge, and three mutually verifying routes to
//! (skew) Kostka polynomials, plus one-dimensional configuration sums that
//! approximate affine branching functions.
//!
//! Everything is exact integer / rational arithmetic; all operations are
//! pure and deterministic.

pub mod crystal;
pub mod error;
pub mod export;
pub mod kostka;
pub mod partition;
pub mod paths;
pub mod poly;
pub mod rmatrix;
pub mod symfunc;
pub mod tableaux;

pub use error::{Error, Result};
pub use partition::{Partition, SkewShape};
pub use poly::LaurentPoly;
