use nalgebra::{DMatrix, Schur};
use num_complex::Complex64;
use num_traits::Zero;

use super::{analyze_pencil, pencil_slices, pencil_tensor};
use crate::polyalg::{exact_determinant, rational_to_f64, ExactMatrix, Rational};
use crate::schlaefli::slice_determinant_poly;
use crate::tensor::MultiMatrix;
use crate::{Error, Result};

/// Max-norm tolerance used when none is given.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Roots of `c[0] zⁿ + … + c[n]` from the companion matrix, polished by Newton steps.
pub fn polynomial_roots(coeffs: &[f64]) -> Result<Vec<Complex64>> {
    let lead = coeffs.iter().position(|c| *c != 0.0).ok_or_else(|| Error::Domain("zero polynomial".into()))?;
    let c = &coeffs[lead..];
    let n = c.len() - 1;
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut companion = DMatrix::<f64>::zeros(n, n);
    for j in 0..n {
        companion[(0, j)] = -c[j + 1] / c[0];
    }
    for i in 1..n {
        companion[(i, i - 1)] = 1.0;
    }
    let mut roots: Vec<Complex64> = match Schur::try_new(companion, f64::EPSILON, 200 * n) {
        Some(schur) => schur.complex_eigenvalues().iter().copied().collect(),
        None => aberth(c),
    };
    for r in &mut roots {
        *r = polish(c, *r);
    }
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    Ok(roots)
}

/// Simultaneous Aberth iteration, for spectra the QR sweep cannot split.
fn aberth(c: &[f64]) -> Vec<Complex64> {
    let n = c.len() - 1;
    let radius = 1.0 + c[1..].iter().map(|x| (x / c[0]).abs()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|j| Complex64::from_polar(radius, 0.4 + std::f64::consts::TAU * j as f64 / n as f64))
        .collect();
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let (mut p, mut dp) = (Complex64::zero(), Complex64::zero());
            for &coef in c {
                dp = dp * z[i] + p;
                p = p * z[i] + coef;
            }
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let repel: Complex64 = (0..n).filter(|&j| j != i).map(|j| (z[i] - z[j]).inv()).sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repel);
            z[i] -= step;
            moved = moved.max(step.norm() / z[i].norm().max(1.0));
        }
        if moved <= f64::EPSILON {
            break;
        }
    }
    z
}

fn polish(c: &[f64], mut z: Complex64) -> Complex64 {
    for _ in 0..8 {
        let (mut p, mut dp) = (Complex64::zero(), Complex64::zero());
        for &coef in c {
            dp = dp * z + p;
            p = p * z + coef;
        }
        if dp.norm() == 0.0 {
            break;
        }
        let step = p / dp;
        z -= step;
        if step.norm() <= f64::EPSILON * z.norm().max(1.0) {
            break;
        }
    }
    z
}

/// Coefficients of `det(μ A_0 + A_1)` in `μ`, leading first.
fn mu_polynomial(a: &MultiMatrix) -> Result<Vec<Rational>> {
    let k = a.dims()[1] as u32;
    let form = slice_determinant_poly(a)?;
    Ok((0..=k).map(|i| form.coeff(&[k - i, i])).collect())
}

fn require_invertible(a0: &ExactMatrix) -> Result<()> {
    if exact_determinant(a0)?.is_zero() {
        return Err(Error::Pivot(
            "A0 is singular; replace A0 by A0 + c·A1 for a rational c with det ≠ 0".into(),
        ));
    }
    Ok(())
}

/// Generalized eigenvalues `λ` with `det(λ A_0 - A_1) = 0`.
pub fn weierstrass_eigenvalues(a: &MultiMatrix) -> Result<Vec<Complex64>> {
    let (a0, _) = pencil_slices(a)?;
    require_invertible(&a0)?;
    let form = slice_determinant_poly(a)?;
    if crate::polyalg::binary_discriminant(&form)?.is_zero() {
        return Err(Error::Precondition("pencil is not regular: repeated eigenvalue".into()));
    }
    let coeffs: Vec<f64> = mu_polynomial(a)?.iter().map(rational_to_f64).collect();
    let mut lambdas: Vec<Complex64> = polynomial_roots(&coeffs)?.into_iter().map(|mu| -mu).collect();
    lambdas.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    Ok(lambdas)
}

/// `Cᵗ A_i C = D_i` with the columns of `C` unit kernel vectors of `μ_i A_0 + A_1`.
#[derive(Debug, Clone)]
pub struct Diagonalization {
    pub c: DMatrix<Complex64>,
    pub d0: Vec<Complex64>,
    pub d1: Vec<Complex64>,
    /// Roots `μ_i` of `det(μ A_0 + A_1)`, one per column of `C`.
    pub mu: Vec<Complex64>,
    /// Largest off-diagonal modulus of `Cᵗ A_0 C` and `Cᵗ A_1 C`.
    pub residual: f64,
}

fn to_complex(m: &ExactMatrix) -> DMatrix<Complex64> {
    DMatrix::from_fn(m.rows(), m.cols(), |i, j| Complex64::new(rational_to_f64(m.get(i, j)), 0.0))
}

fn null_vector(m: &DMatrix<Complex64>) -> Result<Vec<Complex64>> {
    let svd = m.clone().svd(false, true);
    let v_t = svd.v_t.ok_or_else(|| Error::Inconsistency("SVD without V".into()))?;
    let (idx, _) = svd
        .singular_values
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .ok_or_else(|| Error::Dimension("empty matrix".into()))?;
    let v: Vec<Complex64> = v_t.row(idx).iter().map(|z| z.conj()).collect();
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    Ok(v.into_iter().map(|z| z / norm).collect())
}

pub fn simultaneous_diagonalize(a0: &ExactMatrix, a1: &ExactMatrix, tol: f64) -> Result<Diagonalization> {
    if !(tol > 0.0) {
        return Err(Error::Domain("tolerance must be positive".into()));
    }
    if !a0.is_symmetric() || !a1.is_symmetric() {
        return Err(Error::Structure("both slices must be symmetric".into()));
    }
    let a = pencil_tensor(a0, a1)?;
    if a0.rows() < 2 {
        return Err(Error::Format("need k ≥ 2".into()));
    }
    let report = analyze_pencil(&a, false)?;
    if !report.regular {
        return Err(Error::Precondition("pencil is not regular (Det = 0)".into()));
    }
    require_invertible(a0)?;

    let coeffs: Vec<f64> = mu_polynomial(&a)?.iter().map(rational_to_f64).collect();
    let mu = polynomial_roots(&coeffs)?;
    let m0 = to_complex(a0);
    let m1 = to_complex(a1);
    let k = a0.rows();
    let mut c = DMatrix::<Complex64>::zeros(k, k);
    for (col, &m) in mu.iter().enumerate() {
        let v = null_vector(&(m0.map(|z| z * m) + &m1))?;
        for (row, z) in v.into_iter().enumerate() {
            c[(row, col)] = z;
        }
    }
    let ct = c.transpose();
    let e0 = &ct * &m0 * &c;
    let e1 = &ct * &m1 * &c;
    let mut residual = 0.0f64;
    for i in 0..k {
        for j in 0..k {
            if i != j {
                residual = residual.max(e0[(i, j)].norm()).max(e1[(i, j)].norm());
            }
        }
    }
    if residual > tol {
        return Err(Error::Inconsistency(format!(
            "off-diagonal residual {residual:e} exceeds tolerance {tol:e}"
        )));
    }
    Ok(Diagonalization {
        d0: (0..k).map(|i| e0[(i, i)]).collect(),
        d1: (0..k).map(|i| e1[(i, i)]).collect(),
        c,
        mu,
        residual,
    })
}
