//! Verification workbench for a quasi-exactly-solvable extension of the
//! rational Calogero model.
//!
//! The radial problem is a broken-supersymmetry pair: a shifted radial
//! oscillator `V+` and its conditionally solvable partner `V-`, whose
//! eigenfunctions are ratios built from X1 exceptional Laguerre polynomials.
//! Everything analytic is constructed with exact rational algebra
//! ([`poly`], [`susy`], [`manybody`], [`pct`]) and cross-checked with an
//! independent finite-difference eigensolver and quadrature ([`spectral`]).

// `!(x <= tol)` is used on purpose so that NaN counts as a failure.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod manybody;
pub mod pct;
pub mod poly;
pub mod spectral;
pub mod susy;

pub use error::{Error, Result};
