//! Exact computation of hyperdeterminants and related invariants of
//! multidimensional matrices.
//!
//! Every entry lives in ℚ. The crate is organised bottom-up:
//!
//! - [`polyalg`]: rationals, sparse multivariate polynomials, exact matrices,
//!   Sylvester resultants, binary discriminants, pfaffians and power series.
//! - [`tensor`]: formats, multidimensional matrices, slices, flattenings,
//!   the multilinear group action, convolution and kernel certificates.
//! - [`degree`]: existence, boundary classification and degree of the
//!   hyperdeterminant of a format.
//! - [`boundary`]: the boundary-format hyperdeterminant as the determinant of
//!   the map between symmetric powers, Cayley's 3×2×2 formula, identities.
//! - [`schlaefli`]: slice determinants, the 2×b×b hyperdeterminant through a
//!   binary discriminant, Cayley's 2×2×2 formula and the 3×2×2 conic.
//! - [`pencil`]: 2×k×k pencils, simultaneous diagonalisation and the
//!   Kronecker/Kac block parameters.
//! - [`invariants`]: multilinear ranks, the Strassen degree-9 invariant and
//!   the Aronhold pfaffians.
//! - [`methods`]: dispatch over every applicable route with cross-checking.

pub mod boundary;
pub mod degree;
mod error;
pub mod invariants;
pub mod methods;
pub mod pencil;
pub mod polyalg;
pub mod schlaefli;
pub mod tensor;

pub use error::{Error, Result};
pub use polyalg::{ExactMatrix, Polynomial, Rational};
pub use tensor::{Format, MultiMatrix, PointTuple};
