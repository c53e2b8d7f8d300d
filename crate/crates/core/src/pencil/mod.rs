//! Pencils `x_0 A_0 + x_1 A_1` of `k×k` matrices and block-count arithmetic.

mod blocks;
mod numeric;

pub use blocks::{kac_blocks, kac_sequence, kronecker_blocks, BlockDecomposition, BlockKind};
pub use numeric::{polynomial_roots, simultaneous_diagonalize, weierstrass_eigenvalues, Diagonalization, DEFAULT_TOLERANCE};

use num_complex::Complex64;
use num_traits::Zero;

use crate::polyalg::{binary_discriminant, ExactMatrix, Polynomial, Rational};
use crate::schlaefli::slice_determinant_poly;
use crate::tensor::MultiMatrix;
use crate::{Error, Result};

/// Exact facts about a `2×k×k` pencil.
#[derive(Debug, Clone, PartialEq)]
pub struct PencilReport {
    /// `det(x_0 A_0 + x_1 A_1)`.
    pub char_form: Polynomial,
    /// The form has `k` distinct roots in `P¹`.
    pub regular: bool,
    /// The form vanishes identically.
    pub singular: bool,
    /// `det A_1 = 0`, so `det(A_0 + t A_1)` has degree below `k` in `t`.
    pub degree_drop: bool,
    pub discriminant: Rational,
    /// Roots of `det(λ A_0 - A_1)`, when requested and `det A_0 ≠ 0`.
    pub eigenvalues: Option<Vec<Complex64>>,
}

/// The two slices of a `2×k×k` tensor.
pub fn pencil_slices(a: &MultiMatrix) -> Result<(ExactMatrix, ExactMatrix)> {
    let d = a.dims();
    if d.len() != 3 || d[0] != 2 || d[1] != d[2] || d[1] < 2 {
        return Err(Error::Format(format!("expected 2×k×k with k ≥ 2, got {}", a.format())));
    }
    Ok((a.slice(0, 0)?.to_matrix()?, a.slice(0, 1)?.to_matrix()?))
}

/// The `2×k×k` tensor with slices `A_0`, `A_1`.
pub fn pencil_tensor(a0: &ExactMatrix, a1: &ExactMatrix) -> Result<MultiMatrix> {
    if !a0.is_square() || a0.rows() != a1.rows() || a0.cols() != a1.cols() {
        return Err(Error::Dimension("slices must be square of equal size".into()));
    }
    let k = a0.rows();
    let mut entries = a0.entries().to_vec();
    entries.extend_from_slice(a1.entries());
    MultiMatrix::new(crate::tensor::Format::new(vec![2, k, k])?, entries)
}

pub fn analyze_pencil(a: &MultiMatrix, with_eigenvalues: bool) -> Result<PencilReport> {
    let (a0, _) = pencil_slices(a)?;
    let k = a0.rows() as u32;
    let char_form = slice_determinant_poly(a)?;
    let singular = char_form.is_zero();
    let discriminant = if singular {
        Rational::zero()
    } else {
        binary_discriminant(&char_form)?
    };
    let regular = !discriminant.is_zero();
    let degree_drop = char_form.coeff(&[0, k]).is_zero();
    let eigenvalues = if with_eigenvalues && regular && !char_form.coeff(&[k, 0]).is_zero() {
        Some(weierstrass_eigenvalues(a)?)
    } else {
        None
    };
    Ok(PencilReport {
        char_form,
        regular,
        singular,
        degree_drop,
        discriminant,
        eigenvalues,
    })
}
