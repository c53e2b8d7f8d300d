use num_bigint::BigInt;
use num_traits::Pow;

use super::{exact_determinant, ExactMatrix, Polynomial, Rational};
use crate::{Error, Result};

/// Sylvester matrix of two coefficient vectors listed from the leading
/// coefficient down; the formal degrees are `f.len() - 1` and `g.len() - 1`.
pub fn sylvester_matrix(f: &[Rational], g: &[Rational]) -> ExactMatrix {
    let df = f.len().saturating_sub(1);
    let dg = g.len().saturating_sub(1);
    let n = df + dg;
    let mut m = ExactMatrix::zeros(n, n);
    for shift in 0..dg {
        for (k, c) in f.iter().enumerate() {
            m.set(shift, shift + k, c.clone());
        }
    }
    for shift in 0..df {
        for (k, c) in g.iter().enumerate() {
            m.set(dg + shift, shift + k, c.clone());
        }
    }
    m
}

/// Resultant of two polynomials given by coefficient vectors (leading first)
/// with formal degrees `len - 1`.
pub fn resultant_from_coefficients(f: &[Rational], g: &[Rational]) -> Result<Rational> {
    if f.is_empty() || g.is_empty() {
        return Err(Error::UndefinedResultant("empty coefficient vector".into()));
    }
    if f.len() == 1 && g.len() == 1 {
        return Err(Error::UndefinedResultant("both polynomials are constant".into()));
    }
    exact_determinant(&sylvester_matrix(f, g))
}

fn univariate_coefficients(p: &Polynomial) -> Result<Vec<Rational>> {
    if p.nvars() != 1 {
        return Err(Error::Format(format!(
            "expected a univariate polynomial, got {} variables",
            p.nvars()
        )));
    }
    let d = p
        .total_degree()
        .ok_or_else(|| Error::UndefinedResultant("zero polynomial".into()))?;
    Ok((0..=d).rev().map(|e| p.coeff(&[e])).collect())
}

/// Determinant of the `(d_f + d_g) × (d_f + d_g)` Sylvester matrix of two
/// univariate polynomials, using their actual degrees.
pub fn sylvester_resultant(f: &Polynomial, g: &Polynomial) -> Result<Rational> {
    let fc = univariate_coefficients(f)?;
    let gc = univariate_coefficients(g)?;
    resultant_from_coefficients(&fc, &gc)
}

/// Degree and coefficients `c_0, …, c_d` of a binary form
/// `Σ c_i x0^(d-i) x1^i`.
pub fn binary_form_coefficients(f: &Polynomial) -> Result<(u32, Vec<Rational>)> {
    if f.nvars() != 2 {
        return Err(Error::Format(format!(
            "binary form must have 2 variables, got {}",
            f.nvars()
        )));
    }
    let d = f
        .homogeneous_degree()
        .ok_or_else(|| Error::Format("binary form must be nonzero and homogeneous".into()))?;
    Ok((d, (0..=d).map(|i| f.coeff(&[d - i, i])).collect()))
}

/// Discriminant of a binary form of degree `d ≥ 2`,
/// `(-1)^(d(d-1)/2) Res(∂f/∂x0, ∂f/∂x1) / d^(d-2)`.
///
/// With this normalisation the quadratic case is `b² - 4ac` and, for
/// `f = a Π (x0 - r_i x1)`, the value is `a^(2d-2) Π_{i<j} (r_i - r_j)²`.
pub fn binary_discriminant(f: &Polynomial) -> Result<Rational> {
    let (d, c) = binary_form_coefficients(f)?;
    if d < 2 {
        return Err(Error::Format(format!("discriminant needs degree >= 2, got {d}")));
    }
    discriminant_from_coefficients(&c)
}

pub(crate) fn discriminant_from_coefficients(c: &[Rational]) -> Result<Rational> {
    let d = c.len() - 1;
    let dx0: Vec<Rational> = (0..d)
        .map(|i| &c[i] * Rational::from_integer(BigInt::from(d - i)))
        .collect();
    let dx1: Vec<Rational> = (0..d)
        .map(|i| &c[i + 1] * Rational::from_integer(BigInt::from(i + 1)))
        .collect();
    let res = resultant_from_coefficients(&dx0, &dx1)?;
    let norm = Rational::from_integer(BigInt::from(d).pow((d - 2) as u32));
    let signed = if (d * (d - 1) / 2) % 2 == 1 { -res } else { res };
    Ok(signed / norm)
}
