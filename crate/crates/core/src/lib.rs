//! Injectivity of the discrete Radon transform on finite groups.
//!
//! The transform sends a function on a finite group to its sums over all
//! cosets of nontrivial cyclic subgroups. This crate builds groups as Cayley
//! tables ([`group`]), enumerates the cosets ([`geodesic`]), assembles the
//! transform as an integer matrix and decides injectivity by exact rational
//! elimination ([`radon`]), cross-checks the kernel against characters and
//! matrix representations ([`spectral`]), and handles successor-function
//! flows on bare sets ([`flows`]). [`verify`] bundles the theorem suites.
//!
//! Linear algebra is generic over the scalar type; the aliases below fix the
//! types used by the exact and floating-point paths.

pub mod arith;
pub mod error;
pub mod expr;
pub mod flows;
pub mod geodesic;
pub mod group;
pub mod io;
pub mod linalg;
pub mod radon;
pub mod spectral;
pub mod verify;

pub use error::{Error, Result};
pub use group::{ElementId, GroupTable, SubgroupSet};
pub use linalg::{Matrix, Scalar};

/// Exact rationals.
pub type Rational = num_rational::BigRational;
/// Gaussian rationals, the exact carrier for matrix representations.
pub type GaussRational = num_complex::Complex<Rational>;
/// A function on a group with exact rational values.
pub type RationalVector = Vec<Rational>;
/// Kernel basis over the rationals.
pub type KernelBasis = linalg::KernelBasis<Rational>;
/// Exact complex matrix.
pub type GaussMatrix = Matrix<GaussRational>;
/// Double-precision complex number, used by the floating DFT checks.
pub type Complex64 = num_complex::Complex<f64>;
