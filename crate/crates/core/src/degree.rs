//! Existence and degree of the hyperdeterminant of a given format.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::polyalg::{factorial, rat, series_inverse_square_bounded, Polynomial};
use crate::tensor::Format;
use crate::{Error, Result};

/// Classification of a format.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormatClass {
    pub format: Format,
    /// The dual of the Segre variety is a hypersurface.
    pub exists: bool,
    /// `max k = sum of the other k`.
    pub boundary: bool,
    /// Degree of the hyperdeterminant, 0 when it does not exist.
    pub degree: u64,
}

fn max_and_rest(format: &Format) -> (usize, usize) {
    let ks = format.ks();
    let max = ks.iter().copied().max().unwrap_or(0);
    (max, ks.iter().sum::<usize>() - max)
}

pub fn classify(format: &Format) -> Result<FormatClass> {
    let (max, rest) = max_and_rest(format);
    let exists = max <= rest;
    Ok(FormatClass {
        format: format.clone(),
        exists,
        boundary: max == rest,
        degree: hyperdet_degree(format)?,
    })
}

fn degree_cache() -> &'static Mutex<HashMap<Vec<usize>, u64>> {
    static CACHE: OnceLock<Mutex<HashMap<Vec<usize>, u64>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Elementary symmetric polynomial of degree `i` in `n` variables.
fn elementary(n: usize, i: usize) -> Polynomial {
    let mut out = Polynomial::zero(n);
    for mask in 0u64..(1 << n) {
        if mask.count_ones() as usize == i {
            let exps = (0..n).map(|v| ((mask >> v) & 1) as u32).collect();
            out = &out + &Polynomial::monomial(n, exps, rat(1));
        }
    }
    out
}

/// `N(k_0, …, k_p)`: the coefficient of `z^k` in `1 / (1 - Σ_{i≥2} (i-1) e_i(z))²`.
///
/// Zero when the hyperdeterminant does not exist.
pub fn hyperdet_degree(format: &Format) -> Result<u64> {
    let (max, rest) = max_and_rest(format);
    if max > rest {
        return Ok(0);
    }
    // axes with k = 0 contribute z_i^0, so setting z_i = 0 loses nothing
    let mut ks: Vec<usize> = format.ks().into_iter().filter(|&k| k > 0).collect();
    ks.sort_unstable_by(|a, b| b.cmp(a));
    if ks.is_empty() {
        return Ok(1);
    }
    if let Some(&n) = degree_cache().lock().expect("cache lock").get(&ks) {
        return Ok(n);
    }
    let n = ks.len();
    if n > 20 {
        return Err(Error::SizeLimit(format!("{n} axes")));
    }
    let mut p = Polynomial::zero(n);
    for i in 2..=n {
        p = &p + &elementary(n, i).scale(&rat(i as i64 - 1));
    }
    let exps: Vec<u32> = ks.iter().map(|&k| k as u32).collect();
    let series = series_inverse_square_bounded(&p, &exps)?;
    let c = series.coeff(&exps);
    if !c.is_integer() {
        return Err(Error::Inconsistency(format!("non-integral degree {c}")));
    }
    let value = c
        .to_integer()
        .to_u64()
        .ok_or_else(|| Error::Overflow(format!("degree of {format} exceeds u64")))?;
    degree_cache().lock().expect("cache lock").insert(ks, value);
    Ok(value)
}

/// `(k_0 + 1)! / (k_1! ⋯ k_p!)` with `k_0` the largest.
pub fn boundary_degree(format: &Format) -> Result<u64> {
    let (max, rest) = max_and_rest(format);
    if max != rest {
        return Err(Error::Format(format!("{format} is not of boundary format")));
    }
    let mut ks = format.ks();
    let pos = ks.iter().position(|&k| k == max).expect("nonempty");
    ks.remove(pos);
    let denom = ks.iter().fold(BigInt::from(1), |acc, &k| acc * factorial(k as u64));
    let (q, r) = factorial(max as u64 + 1).div_rem(&denom);
    if !r.is_zero() {
        return Err(Error::Inconsistency("non-integral boundary degree".into()));
    }
    q.to_u64()
        .ok_or_else(|| Error::Overflow(format!("degree of {format} exceeds u64")))
}

/// Degree `N / dims[axis]` of the hyperdeterminant in the entries of one slice.
pub fn slice_degree(format: &Format, axis: usize) -> Result<u64> {
    if axis >= format.order() {
        return Err(Error::Domain(format!("axis {axis} out of range for {format}")));
    }
    let n = hyperdet_degree(format)?;
    if n == 0 {
        return Err(Error::Format(format!("no hyperdeterminant for {format}")));
    }
    let d = format.dims()[axis] as u64;
    if n % d != 0 {
        return Err(Error::Inconsistency(format!("{n} not divisible by {d}")));
    }
    Ok(n / d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(dims: &[usize]) -> Format {
        Format::new(dims.to_vec()).unwrap()
    }

    #[test]
    fn classification() {
        let c = classify(&f(&[3, 2, 2])).unwrap();
        assert!(c.exists && c.boundary);
        assert_eq!(c.degree, 6);
        let c = classify(&f(&[4, 2, 2])).unwrap();
        assert!(!c.exists && !c.boundary);
        assert_eq!(c.degree, 0);
        let c = classify(&f(&[2, 2])).unwrap();
        assert!(c.exists && c.boundary);
        let c = classify(&f(&[2, 2, 2])).unwrap();
        assert!(c.exists && !c.boundary);
        let c = classify(&f(&[2, 3, 2])).unwrap();
        assert!(c.boundary);
    }

    #[test]
    fn degree_table() {
        let rows: &[(&[usize], u64)] = &[
            (&[2, 2, 2], 4),
            (&[2, 2, 3], 6),
            (&[2, 3, 3], 12),
            (&[2, 3, 4], 12),
            (&[2, 4, 4], 24),
            (&[2, 4, 5], 20),
            (&[3, 3, 3], 36),
            (&[3, 3, 4], 48),
            (&[3, 3, 5], 30),
            (&[3, 4, 4], 108),
            (&[3, 4, 5], 120),
            (&[4, 4, 4], 272),
        ];
        for &(dims, n) in rows {
            assert_eq!(hyperdet_degree(&f(dims)).unwrap(), n, "{dims:?}");
        }
    }

    #[test]
    fn parametric_rows() {
        for b in 2..=5u64 {
            let bb = b as usize;
            assert_eq!(hyperdet_degree(&f(&[2, bb, bb])).unwrap(), 2 * b * (b - 1));
            assert_eq!(hyperdet_degree(&f(&[2, bb, bb + 1])).unwrap(), b * (b + 1));
            for a in 2..=3usize {
                let c = a + bb - 1;
                let expected = (1..=c as u64).product::<u64>()
                    / ((1..a as u64).product::<u64>() * (1..b).product::<u64>());
                assert_eq!(hyperdet_degree(&f(&[a, bb, c])).unwrap(), expected);
            }
        }
    }

    #[test]
    fn absent_formats_have_degree_zero() {
        assert_eq!(hyperdet_degree(&f(&[6, 2, 2])).unwrap(), 0);
        assert_eq!(hyperdet_degree(&f(&[2, 3])).unwrap(), 0);
        assert!(boundary_degree(&f(&[2, 2, 2])).is_err());
        assert!(slice_degree(&f(&[6, 2, 2]), 0).is_err());
    }

    #[test]
    fn boundary_closed_form() {
        assert_eq!(boundary_degree(&f(&[3, 2, 2])).unwrap(), 6);
        assert_eq!(boundary_degree(&f(&[2, 3, 2])).unwrap(), 6);
        for n in 1..=7 {
            assert_eq!(boundary_degree(&f(&[n, n])).unwrap(), n as u64);
            assert_eq!(hyperdet_degree(&f(&[n, n])).unwrap(), n as u64);
        }
    }

    #[test]
    fn slice_degrees() {
        for axis in 0..3 {
            assert_eq!(slice_degree(&f(&[2, 2, 2]), axis).unwrap(), 2);
        }
        assert_eq!(slice_degree(&f(&[3, 2, 2]), 0).unwrap(), 2);
        assert_eq!(slice_degree(&f(&[3, 2, 2]), 1).unwrap(), 3);
        assert_eq!(slice_degree(&f(&[4, 4]), 0).unwrap(), 1);
        assert!(slice_degree(&f(&[2, 2]), 2).is_err());
    }

    #[test]
    fn generating_function_agrees_with_closed_form() {
        // all boundary formats with dims <= 6 and up to four axes
        fn walk(prefix: &mut Vec<usize>, count: &mut usize) {
            if prefix.len() >= 2 {
                let format = Format::new(prefix.clone()).unwrap();
                if classify(&format).unwrap().boundary {
                    assert_eq!(
                        hyperdet_degree(&format).unwrap(),
                        boundary_degree(&format).unwrap(),
                        "{format}"
                    );
                    *count += 1;
                }
            }
            if prefix.len() == 4 {
                return;
            }
            let start = prefix.last().copied().unwrap_or(6);
            for d in (1..=start).rev() {
                prefix.push(d);
                walk(prefix, count);
                prefix.pop();
            }
        }
        let mut count = 0;
        walk(&mut Vec::new(), &mut count);
        assert!(count > 20);
    }

    #[test]
    fn symmetric_under_permutation() {
        for dims in [[2, 3, 4], [3, 3, 5], [2, 4, 5]] {
            let n = hyperdet_degree(&f(&dims)).unwrap();
            for perm in [[0, 2, 1], [1, 0, 2], [2, 1, 0], [1, 2, 0], [2, 0, 1]] {
                let p: Vec<usize> = perm.iter().map(|&i| dims[i]).collect();
                assert_eq!(hyperdet_degree(&f(&p)).unwrap(), n);
            }
        }
    }
}
