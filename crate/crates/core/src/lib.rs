//! Exact-arithmetic toolkit for Jack symmetric functions and the
//! combinatorics of their Littlewood-Richardson structure constants.
//!
//! The crate is organized around six building blocks:
//!
//! - [`partition`]: Young diagrams, boxes, arms/legs, hooks, corners,
//!   complements, star products and the rectangle decomposition.
//! - [`alpha`]: exact arithmetic in `Q[alpha]` and `Q(alpha)`, and the
//!   bracket `[x,y] = alpha*x - y` attached to a lattice point.
//! - [`jack`]: symmetric functions in the monomial / power-sum / Jack-J
//!   bases, the alpha-deformed Hall inner product, and integral-form
//!   Jack polynomials built by Gram-Schmidt orthogonalization.
//! - [`lr`]: Jack Littlewood-Richardson tables, Stanley structure
//!   coefficients, Schur specializations and Kostka numbers.
//! - [`lattice`]: the calculus of rational functions determined by a
//!   lattice multiset of zeros and poles, including the sum-product
//!   identity checker, expansion/flip/mirror rules, and the
//!   three-quadrant decomposition.
//! - [`hooks`]: upper/lower hook assignments and the product formulas
//!   they compute (Pieri, rectangular, rectangular-union).
//!
//! All coefficients are exact rationals; every identity in the crate is
//! checked by exact equality, never numerically.

pub mod alpha;
pub mod error;
pub mod hooks;
pub mod jack;
pub mod json;
pub mod lattice;
pub mod lr;
pub mod partition;

pub use error::{Error, Result};
