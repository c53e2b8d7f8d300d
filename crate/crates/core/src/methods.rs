//! Dispatch over the available hyperdeterminant routes, with cross-checking.

use std::fmt;
use std::str::FromStr;

use crate::boundary::{cayley_3x2x2, hyperdet_boundary, CAYLEY_3X2X2_SCALE};
use crate::degree::classify;
use crate::polyalg::{exact_determinant, rat, Rational};
use crate::schlaefli::{cayley_2x2x2, conic_matrix_3x2x2, conic_scale, hyperdet_2bb};
use crate::tensor::{Format, MultiMatrix};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Boundary,
    Cayley2x2x2,
    Cayley3x2x2,
    Schlaefli,
    SchlaefliConic,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::Boundary,
        Method::Cayley3x2x2,
        Method::SchlaefliConic,
        Method::Cayley2x2x2,
        Method::Schlaefli,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Boundary => "boundary",
            Method::Cayley2x2x2 => "cayley2x2x2",
            Method::Cayley3x2x2 => "cayley3x2x2",
            Method::Schlaefli => "schlaefli",
            Method::SchlaefliConic => "schlaefli-conic",
        }
    }

    pub fn applies_to(self, format: &Format) -> bool {
        let d = format.dims();
        match self {
            Method::Boundary => classify(format).map(|c| c.boundary).unwrap_or(false),
            Method::Cayley2x2x2 => d == [2, 2, 2],
            Method::Cayley3x2x2 | Method::SchlaefliConic => d == [3, 2, 2],
            Method::Schlaefli => d.len() == 3 && d[0] == 2 && d[1] == d[2] && d[1] >= 2,
        }
    }

    /// Factor `c` with `raw value = c · Det`.
    pub fn scale(self) -> Rational {
        match self {
            Method::Cayley3x2x2 => rat(CAYLEY_3X2X2_SCALE),
            Method::SchlaefliConic => conic_scale(),
            _ => rat(1),
        }
    }

    /// Value of this route, before normalisation.
    pub fn raw(self, a: &MultiMatrix) -> Result<Rational> {
        if !self.applies_to(a.format()) {
            return Err(Error::Format(format!("{} does not apply to {}", self.name(), a.format())));
        }
        match self {
            Method::Boundary => hyperdet_boundary(a),
            Method::Cayley2x2x2 => cayley_2x2x2(a),
            Method::Cayley3x2x2 => cayley_3x2x2(a),
            Method::Schlaefli => Ok(hyperdet_2bb(a)?.value),
            Method::SchlaefliConic => exact_determinant(&conic_matrix_3x2x2(a)?),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown method {s:?}")))
    }
}

/// Which routes to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MethodChoice {
    Auto,
    Boundary,
    Schlaefli,
    Cayley,
}

impl FromStr for MethodChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(MethodChoice::Auto),
            "boundary" => Ok(MethodChoice::Boundary),
            "schlaefli" => Ok(MethodChoice::Schlaefli),
            "cayley" => Ok(MethodChoice::Cayley),
            _ => Err(Error::Parse(format!("unknown method {s:?}"))),
        }
    }
}

impl MethodChoice {
    fn candidates(self) -> &'static [Method] {
        match self {
            MethodChoice::Auto => &Method::ALL,
            MethodChoice::Boundary => &[Method::Boundary],
            MethodChoice::Schlaefli => &[Method::SchlaefliConic, Method::Schlaefli],
            MethodChoice::Cayley => &[Method::Cayley3x2x2, Method::Cayley2x2x2],
        }
    }
}

pub fn applicable_methods(format: &Format) -> Vec<Method> {
    Method::ALL.into_iter().filter(|m| m.applies_to(format)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MethodValue {
    pub method: Method,
    pub raw: Rational,
    /// `raw / scale`, comparable across routes.
    pub value: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DetReport {
    pub value: Rational,
    pub runs: Vec<MethodValue>,
}

/// Runs every selected route that applies and checks that the normalised values agree.
pub fn compute_det(a: &MultiMatrix, choice: MethodChoice) -> Result<DetReport> {
    let methods: Vec<Method> = choice
        .candidates()
        .iter()
        .copied()
        .filter(|m| m.applies_to(a.format()))
        .collect();
    let methods = match choice {
        MethodChoice::Auto => methods,
        _ => methods.into_iter().take(1).collect(),
    };
    if methods.is_empty() {
        return Err(Error::Format(format!("no hyperdeterminant method for {}", a.format())));
    }
    let mut runs = Vec::new();
    for m in methods {
        let raw = m.raw(a)?;
        let value = &raw / m.scale();
        runs.push(MethodValue { method: m, raw, value });
    }
    let value = runs[0].value.clone();
    if let Some(bad) = runs.iter().find(|r| r.value != value) {
        return Err(Error::Inconsistency(format!(
            "{} gives {} but {} gives {}",
            runs[0].method, value, bad.method, bad.value
        )));
    }
    Ok(DetReport { value, runs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boundary::{diagonal_tensor, DIAGONAL_SIGN_3X2X2};

    #[test]
    fn method_lists() {
        let f = |d: &[usize]| applicable_methods(&Format::new(d.to_vec()).unwrap());
        assert_eq!(f(&[3, 2, 2]), vec![Method::Boundary, Method::Cayley3x2x2, Method::SchlaefliConic]);
        assert_eq!(f(&[2, 2, 2]), vec![Method::Cayley2x2x2, Method::Schlaefli]);
        assert_eq!(f(&[2, 3, 3]), vec![Method::Schlaefli]);
        assert_eq!(f(&[4, 3, 2]), vec![Method::Boundary]);
        assert!(f(&[3, 3, 3]).is_empty());
        assert!(f(&[2, 2, 2, 2]).is_empty());
    }

    #[test]
    fn diagonal_triple_check() {
        let a = diagonal_tensor(&Format::new(vec![3, 2, 2]).unwrap(), &[rat(1), rat(1), rat(1), rat(1)]).unwrap();
        let r = compute_det(&a, MethodChoice::Auto).unwrap();
        assert_eq!(r.value, rat(DIAGONAL_SIGN_3X2X2));
        assert_eq!(r.runs.len(), 3);
    }

    #[test]
    fn explicit_choices() {
        let a = MultiMatrix::from_i64(&[2, 2, 2], &[1, 0, 0, 0, 0, 0, 0, 1]);
        for c in [MethodChoice::Auto, MethodChoice::Cayley, MethodChoice::Schlaefli] {
            assert_eq!(compute_det(&a, c).unwrap().value, rat(1));
        }
        assert!(matches!(compute_det(&a, MethodChoice::Boundary), Err(Error::Format(_))));
        let b = MultiMatrix::from_i64(&[3, 3, 3], &[0; 27]);
        assert!(matches!(compute_det(&b, MethodChoice::Auto), Err(Error::Format(_))));
        assert_eq!("schlaefli-conic".parse::<Method>().unwrap(), Method::SchlaefliConic);
        assert!("nope".parse::<MethodChoice>().is_err());
    }
}
