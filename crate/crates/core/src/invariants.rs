//! Equations of secant varieties: flattening ranks, Strassen's degree-9
//! invariant of 3×3×3 tensors and the Aronhold pfaffians of plane cubics.

use crate::polyalg::{exact_determinant, exact_rank, pfaffian, ExactMatrix, Polynomial, Rational};
use crate::tensor::MultiMatrix;
use crate::{Error, Result};

/// `rank C_i(A)` for every axis.
pub fn multilinear_rank(a: &MultiMatrix) -> Result<Vec<usize>> {
    (0..a.format().order())
        .map(|i| Ok(exact_rank(&a.flattening(i)?)))
        .collect()
}

/// `[[0, A2, -A1], [-A2, 0, A0], [A1, -A0, 0]]` from the slices along `axis`.
pub fn strassen_matrix(a: &MultiMatrix, axis: usize) -> Result<ExactMatrix> {
    if a.dims() != [3, 3, 3] {
        return Err(Error::Format(format!("expected 3x3x3, got {}", a.format())));
    }
    let s: Vec<ExactMatrix> = (0..3)
        .map(|i| a.slice(axis, i)?.to_matrix())
        .collect::<Result<_>>()?;
    // block (r, c) is sign * A_idx
    let layout: [[Option<(i8, usize)>; 3]; 3] = [
        [None, Some((1, 2)), Some((-1, 1))],
        [Some((-1, 2)), None, Some((1, 0))],
        [Some((1, 1)), Some((-1, 0)), None],
    ];
    Ok(ExactMatrix::from_fn(9, 9, |r, c| match layout[r / 3][c / 3] {
        None => Rational::from_integer(0.into()),
        Some((sign, idx)) => {
            let v = s[idx].get(r % 3, c % 3).clone();
            if sign < 0 {
                -v
            } else {
                v
            }
        }
    }))
}

/// `det` of the Strassen matrix along `axis`; vanishes on tensors of rank ≤ 4.
pub fn strassen_invariant(a: &MultiMatrix, axis: usize) -> Result<Rational> {
    exact_determinant(&strassen_matrix(a, axis)?)
}

/// The nine principal 8×8 pfaffians of the Strassen matrix of a plane cubic.
///
/// All vanish exactly when `f` is a sum of three cubes (or a limit of such).
pub fn aronhold_pfaffians(f: &Polynomial) -> Result<Vec<Rational>> {
    if f.nvars() != 3 || f.homogeneous_degree() != Some(3) {
        return Err(Error::Format("expected a homogeneous cubic in x0, x1, x2".into()));
    }
    let a = MultiMatrix::symmetric_embed(f)?;
    let m = strassen_matrix(&a, 0)?;
    if !m.is_skew_symmetric() {
        return Err(Error::Inconsistency("Strassen matrix of a symmetric tensor is not skew".into()));
    }
    (0..9).map(|r| pfaffian(&m.minor(&[r], &[r]))).collect()
}
