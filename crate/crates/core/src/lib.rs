//! Dunkl supersymmetric orthogonal polynomials and exactly solvable Dunkl
//! Hamiltonians.
//!
//! Building blocks, bottom up:
//!
//! * [`classical`]: Hermite, Laguerre and Jacobi polynomials.
//! * [`symmetric`]: monic symmetric orthogonal systems and their norms.
//! * [`family`]: the doubly-indexed family `Q_n = S_{2n} ± a_n S_{2n-1}`.
//! * [`operator`]: the reflection operator `∂R + v` and its gauge form.
//! * [`potentials`]: shape-invariant superpotentials and their Dunkl eigenfunctions.
//! * [`quadrature`]: Gauss rules and Gram-matrix orthogonality checks.

pub mod classical;
pub mod error;
pub mod family;
pub mod operator;
pub mod poly;
pub mod potentials;
pub mod quadrature;
pub mod scalar;
pub mod symmetric;

pub use classical::ClassicalKind;
pub use error::{Error, Result};
pub use family::{signed_indices, DunklSusyFamily, ZeroStep};
pub use poly::DensePolynomial;
pub use scalar::{Dual, Field};
pub use symmetric::{MonicSymmetricSystem, SymmetricClassical, WeightDescriptor, WeightFamily};
