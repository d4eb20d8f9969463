//! Exact computation of multiplier spectra of self-correspondences of the
//! projective line.
//!
//! The crate provides, all in exact arithmetic:
//!
//! - an algebra kernel (rationals, finite fields, polynomials, resultants,
//!   finite-field factorization, cyclotomic fields),
//! - correspondences on P^1 x P^1 with iteration, periodic-point divisors
//!   and multiplier spectrum forms,
//! - Schur polynomial evaluation and Hilbert-series volumes feeding
//!   closed-form degree bounds for multiplier maps,
//! - a finite-field certification pipeline showing that cubic rational maps
//!   sharing fixed-point multipliers and one period-2 multiplier are told
//!   apart by their remaining period-2 multipliers,
//! - a degree-wise random-sampling interpolation method for recovering a
//!   polynomial from black-box evaluations.

pub mod algebra;
pub mod bounds;
pub mod dynsys;
pub mod error;
pub mod ffverify;
pub mod hilbert;
pub mod interp;
pub mod jsonio;
pub mod schur;

pub use error::{Error, Result};
