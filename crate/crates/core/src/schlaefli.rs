//! Schläfli's method: hyperdeterminants as discriminants of slice determinants.

use std::ops::{Add, Mul, Sub};

use num_traits::Zero;

use crate::polyalg::{binary_discriminant, symbolic_determinant, ExactMatrix, Polynomial, Rational};
use crate::tensor::MultiMatrix;
use crate::{Error, Result};

/// `det(conic_matrix_3x2x2(A)) = CONIC_3X2X2_SCALE · hyperdet_boundary(A)`, as `(num, den)`.
pub const CONIC_3X2X2_SCALE: (i64, i64) = (-1, 4);

pub fn conic_scale() -> Rational {
    Rational::new(CONIC_3X2X2_SCALE.0.into(), CONIC_3X2X2_SCALE.1.into())
}

/// `det(x_0 A_0 + … + x_{a-1} A_{a-1})` for an `a×b×b` tensor with slices `A_i`
/// along axis 0.
pub fn slice_determinant_poly(a: &MultiMatrix) -> Result<Polynomial> {
    let dims = a.dims();
    if dims.len() != 3 || dims[1] != dims[2] {
        return Err(Error::Format(format!("expected a×b×b, got {}", a.format())));
    }
    let (n, b) = (dims[0], dims[1]);
    let m: Vec<Vec<Polynomial>> = (0..b)
        .map(|r| {
            (0..b)
                .map(|c| {
                    (0..n).fold(Polynomial::zero(n), |acc, i| {
                        &acc + &Polynomial::var(n, i).scale(a.get(&[i, r, c]))
                    })
                })
                .collect()
        })
        .collect();
    Ok(symbolic_determinant(&m, &Polynomial::zero(n), &Polynomial::one(n)))
}

/// Result of [`hyperdet_2bb`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PencilDet {
    pub value: Rational,
    /// The slice form vanished identically; `value` is then 0.
    pub singular_pencil: bool,
}

/// Hyperdeterminant of a `2×b×b` tensor as the discriminant of its slice form.
pub fn hyperdet_2bb(a: &MultiMatrix) -> Result<PencilDet> {
    if a.dims().len() != 3 || a.dims()[0] != 2 || a.dims()[1] != a.dims()[2] {
        return Err(Error::Format(format!("expected 2×b×b, got {}", a.format())));
    }
    if a.dims()[1] < 2 {
        return Err(Error::Format("2×1×1 has no discriminant".into()));
    }
    let form = slice_determinant_poly(a)?;
    if form.is_zero() {
        return Ok(PencilDet {
            value: Rational::zero(),
            singular_pencil: true,
        });
    }
    Ok(PencilDet {
        value: binary_discriminant(&form)?,
        singular_pencil: false,
    })
}

/// Cayley's closed formula over any commutative ring, entries in storage
/// order `a000, a001, …, a111`.
pub fn cayley_2x2x2_generic<T>(e: &[T; 8]) -> T
where
    T: Clone,
    for<'a> &'a T: Add<&'a T, Output = T> + Sub<&'a T, Output = T> + Mul<&'a T, Output = T>,
{
    let [a000, a001, a010, a011, a100, a101, a110, a111] = e;
    let mixed = &(&(&(a000 * a111) - &(a001 * a110)) - &(a010 * a101)) + &(a011 * a100);
    let d0 = &(a000 * a011) - &(a001 * a010);
    let d1 = &(a100 * a111) - &(a101 * a110);
    let prod = &d0 * &d1;
    let four = &(&(&prod + &prod) + &prod) + &prod;
    &(&mixed * &mixed) - &four
}

pub fn cayley_2x2x2(a: &MultiMatrix) -> Result<Rational> {
    if a.dims() != [2, 2, 2] {
        return Err(Error::Format(format!("expected 2x2x2, got {}", a.format())));
    }
    let e: [Rational; 8] = a.entries().to_vec().try_into().expect("eight entries");
    Ok(cayley_2x2x2_generic(&e))
}

/// Symmetric `C` with `det(x_0 A_0 + x_1 A_1 + x_2 A_2) = x C xᵗ` for a 3×2×2 tensor.
pub fn conic_matrix_3x2x2(a: &MultiMatrix) -> Result<ExactMatrix> {
    if a.dims() != [3, 2, 2] {
        return Err(Error::Format(format!("expected 3x2x2, got {}", a.format())));
    }
    let form = slice_determinant_poly(a)?;
    let half = Rational::new(1.into(), 2.into());
    Ok(ExactMatrix::from_fn(3, 3, |i, j| {
        let mut e = vec![0u32; 3];
        e[i] += 1;
        e[j] += 1;
        let c = form.coeff(&e);
        if i == j {
            c
        } else {
            c * &half
        }
    }))
}
