//! Exact combinatorics of T-labelled posets.
//!
//! A T-labelled poset is a finite poset whose Hasse edges carry weakly
//! increasing step functions. Its tableaux are positive-integer fillings
//! that satisfy `value(s) <= f(value(t))` on every cover `s < t`, and their
//! weight generating functions generalise (skew) Schur functions,
//! cylindric Schur functions and generating functions of
//! (P, omega)-partitions.
//!
//! The crate provides:
//!
//! - [`poset`]: finite posets, convex subposets, order ideals and the
//!   subposet operations `wedge`, `vee`, `wedge_prime`, `vee_prime`;
//! - [`tlabel`]: step functions, labelled posets and shape constructors;
//! - [`tableaux`]: validity checks, exhaustive enumeration and weights;
//! - [`transfer`]: the cell-transfer injection, its inverse and the
//!   exhaustive minimal-transfer-set oracle;
//! - [`genfunc`]: exact generating functions and basis expansions;
//! - [`minmax`]: the max/min skew-shape construction;
//! - [`json`], [`catalogue`], [`suites`]: interchange formats and the
//!   exhaustive verification suites driven by the command-line tool.

pub mod catalogue;
pub mod error;
pub mod genfunc;
pub mod json;
pub mod minmax;
pub mod partition;
pub mod poset;
pub mod set;
pub mod suites;
pub mod tableaux;
pub mod tlabel;
pub mod transfer;

pub use error::{Error, Result};
pub use set::ElemSet;
