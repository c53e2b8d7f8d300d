use num_traits::Zero;

use super::{rat, Polynomial};
use crate::{Error, Result};

/// Truncation of `1 / (1 - p)²` to total degree `max_degree`, i.e.
/// `Σ_j (j + 1) p^j` with every term of degree above the bound dropped.
pub fn series_inverse_square(p: &Polynomial, max_degree: u32) -> Result<Polynomial> {
    if !p.constant_term().is_zero() {
        return Err(Error::Series("1/(1-p)^2 needs p with zero constant term".into()));
    }
    let n = p.nvars();
    let mut acc = Polynomial::one(n);
    let mut power = Polynomial::one(n);
    // p has no constant term, so p^j starts in degree j
    for j in 1..=max_degree {
        power = power.mul_truncated(p, max_degree);
        if power.is_zero() {
            break;
        }
        acc = &acc + &power.scale(&rat(j as i64 + 1));
    }
    Ok(acc)
}

/// `1 / (1 - p)²` restricted to monomials with `exponent[i] <= bounds[i]`.
///
/// Every coefficient inside the box agrees with [`series_inverse_square`].
pub fn series_inverse_square_bounded(p: &Polynomial, bounds: &[u32]) -> Result<Polynomial> {
    if !p.constant_term().is_zero() {
        return Err(Error::Series("1/(1-p)^2 needs p with zero constant term".into()));
    }
    if bounds.len() != p.nvars() {
        return Err(Error::Dimension(format!(
            "{} bounds for {} variables",
            bounds.len(),
            p.nvars()
        )));
    }
    let n = p.nvars();
    let total: u32 = bounds.iter().sum();
    let mut acc = Polynomial::one(n);
    let mut power = Polynomial::one(n);
    for j in 1..=total {
        power = power.mul_bounded(p, bounds);
        if power.is_zero() {
            break;
        }
        acc = &acc + &power.scale(&rat(j as i64 + 1));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounded_agrees_with_total_degree_truncation() {
        let z = |i| Polynomial::var(3, i);
        let p = &(&(&z(0) * &z(1)) + &(&z(1) * &z(2)).scale(&rat(3))) + &z(2).pow(2);
        let full = series_inverse_square(&p, 7).unwrap();
        let boxed = series_inverse_square_bounded(&p, &[2, 3, 2]).unwrap();
        for (m, c) in boxed.terms() {
            assert_eq!(&full.coeff(m.exponents()), c);
        }
        assert_eq!(boxed.coeff(&[2, 3, 2]), full.coeff(&[2, 3, 2]));
        assert!(series_inverse_square_bounded(&p, &[1, 1]).is_err());
    }

    #[test]
    fn zero_input_gives_one() {
        assert_eq!(series_inverse_square(&Polynomial::zero(2), 5).unwrap(), Polynomial::one(2));
    }

    #[test]
    fn single_variable_coefficients() {
        let s = series_inverse_square(&Polynomial::var(1, 0), 3).unwrap();
        let expected = Polynomial::from_terms(1, (0..=3).map(|j| (vec![j], rat(j as i64 + 1))));
        assert_eq!(s, expected);
    }

    #[test]
    fn three_variable_degree_generating_function() {
        let z = |i| Polynomial::var(3, i);
        let e2 = &(&(&z(0) * &z(1)) + &(&z(0) * &z(2))) + &(&z(1) * &z(2));
        let e3 = (&(&z(0) * &z(1)) * &z(2)).scale(&rat(2));
        let s = series_inverse_square(&(&e2 + &e3), 6).unwrap();
        assert_eq!(s.coeff(&[2, 2, 2]), rat(36));
        assert_eq!(s.coeff(&[1, 1, 1]), rat(4));
        assert_eq!(s.total_degree(), Some(6));
    }

    #[test]
    fn rejects_constant_term() {
        let p = &Polynomial::one(1) + &Polynomial::var(1, 0);
        assert!(matches!(series_inverse_square(&p, 2), Err(Error::Series(_))));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn univariate_coefficient_is_j_plus_one(d in 0u32..12, c in 1i64..4) {
                // p = c z: coefficient of z^j is (j+1) c^j
                let p = Polynomial::var(1, 0).scale(&rat(c));
                let s = series_inverse_square(&p, d).unwrap();
                for j in 0..=d {
                    let expected = rat(j as i64 + 1) * (0..j).fold(rat(1), |a, _| a * rat(c));
                    prop_assert_eq!(s.coeff(&[j]), expected);
                }
            }
        }
    }
}
