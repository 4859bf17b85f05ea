//! Construction and analysis of generalized matrix product (GMP) codes.
//!
//! A GMP code is built from an m×m matrix `T`, linear codes `C_1, …, C_M` of
//! length m, and M×N matrices `A_0, …, A_r`, all over a common finite field:
//!
//! ```text
//! Q = Σ_{k=0}^{r} T^k [C_1 ⋯ C_M] A_k
//! ```
//!
//! The class contains the classical matrix product codes (`T = I` or `r = 0`)
//! and all quasi-twisted codes (`T = T_λ` with constacyclic constituents).
//! This crate provides:
//!
//! - exact arithmetic over prime and extension fields ([`field`]),
//! - dense linear algebra over those fields ([`matrix`]),
//! - polynomial quotient rings `F_q[x]/(x^m − λ)` and the φ isomorphism ([`ring`]),
//! - linear codes with exhaustive minimum distance ([`code`]),
//! - the GMP generator-matrix construction and dimension analysis ([`gmp`]),
//! - conversions between quasi-twisted and GMP representations ([`qt`]),
//! - two minimum-distance lower bounds and NSC testing ([`bounds`]),
//! - a best-known-parameters registry ([`registry`]),
//! - JSON spec-file loading and saving ([`io`]).

pub mod bounds;
pub mod code;
pub mod field;
pub mod gmp;
pub mod io;
pub mod matrix;
pub mod qt;
pub mod registry;
pub mod ring;

mod error;

pub use error::{Error, Result};
