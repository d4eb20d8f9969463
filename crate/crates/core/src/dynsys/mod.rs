//! Correspondences on P^1 x P^1: iteration, periodic-point divisors,
//! multiplier spectrum forms, orbit-level roots, and cubic covariants.

pub mod correspondence;
pub mod covariants;
pub mod forms;
pub mod spectrum;

pub use correspondence::{
    degree_formulas, graph_of_rational_map, nu_at, nu_poly, Correspondence, DegreeData,
    PeriodKind, PeriodicForm,
};
pub use covariants::{
    cubic_covariants, discriminant_resultants, discriminant_resultants_by_interpolation,
    CubicCovariants, DiscriminantResultants,
};
pub use forms::{BiHomForm, BinaryForm, Var};
pub use spectrum::{
    multiplier_multiset_ff, multiplier_multiset_rational, multiplier_spectrum,
    spectrum_nth_root, Multiplier, SpectrumForm,
};
