//! Exact arithmetic foundation: rationals, prime and extension fields,
//! dense univariate and sparse multivariate polynomials, resultants,
//! finite-field factorization, exact linear algebra and cyclotomic fields.

pub mod cyclotomic;
pub mod extfield;
pub mod factor;
pub mod linalg;
pub mod multipoly;
pub mod numth;
pub mod primefield;
pub mod rational;
pub mod resultant;
pub mod ring;
pub mod unipoly;

pub use cyclotomic::{cyclotomic_polynomial, Cyclo, CycloField};
pub use extfield::{ExtField, Fq};
pub use factor::{factor, is_irreducible, random_irreducible, roots_in_field, Factored};
pub use linalg::{solve_linear_system, LinearSolve};
pub use multipoly::{Exponents, MultiPoly};
pub use primefield::{Fp, PrimeField};
pub use rational::{parse_rational, Rational};
pub use resultant::{det_bareiss, lagrange_interpolate, resultant, resultant_field, resultant_formal};
pub use ring::{Field, FiniteField, IntegralDomain, Ring};
pub use unipoly::UniPoly;
