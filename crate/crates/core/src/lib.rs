//! Spectral toolkit for real tridiagonal matrices.
//!
//! The crate covers the three-term determinant recurrence and characteristic
//! polynomials of generic tridiagonal matrices, Chebyshev evaluation, closed
//! spectra of a few structured families, character tables of P-polynomial
//! table algebras, and a PLU factorization with a fixed cyclic row pivot.
//! Every closed form has an independent brute-force counterpart in [`oracle`].

pub mod chebyshev;
mod error;
pub mod oracle;
pub mod plu;
mod polynomial;
pub mod spectra;
pub mod table_algebra;
mod tridiag;

pub use error::{Error, Result};
pub use plu::{CyclicPermutation, PluFactors};
pub use polynomial::Polynomial;
pub use table_algebra::{CharacterTable, ClassOne, ClassTwo, TableAlgebraSpec};
pub use tridiag::{CharpolySample, TridiagonalMatrix, DEFAULT_COEFF_ORDER_BOUND};
