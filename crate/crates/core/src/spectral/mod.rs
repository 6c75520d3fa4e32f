//! Fourier-side checks: characters of abelian groups and user-supplied
//! matrix representations.
//!
//! Decisions about faithfulness and kernel dimensions use exact arithmetic
//! (integer exponents, Gaussian rationals). Only the DFT comparisons run in
//! floating point, against [`DEFAULT_TOLERANCE`].

pub mod characters;
pub mod reps;

pub use characters::{
    char_sum_check_abelian, char_sum_check_characters, characters, dft, faithful_characters, fourier_radon_check,
    plancherel, CharacterTable, Faithful, FourierRadonReport,
};
pub use reps::{
    char_sum_check, check_projection, coefficient_kernel, fixed_space_analysis, geodesic_sum, q8_irrep, q8_irreps,
    q8_linear_characters, FixedSpaceAnalysis, GeodesicSumMatrix, MatrixRep, ProjectionCheck,
};

pub const DEFAULT_TOLERANCE: f64 = 1e-9;
