//! Boundary-format hyperdeterminants as classical determinants.
//!
//! For `k_0 = k_1 + … + k_p` the hyperdeterminant is `det ∂_A`, where
//!
//! ```text
//! ∂_A : V_0^∨ ⊗ S^{m_1}V_1 ⊗ … ⊗ S^{m_p}V_p → S^{m_1+1}V_1 ⊗ … ⊗ S^{m_p+1}V_p
//! ```
//!
//! sends `ξ ⊗ g_1 ⊗ … ⊗ g_p` to `Σ_j a_{ξ, j_1 … j_p} (y_{j_1} g_1) ⊗ … ⊗ (y_{j_p} g_p)`.
//!
//! Basis conventions, fixed once since they decide the sign of `Det`:
//!
//! * monomials of `S^m V` are listed in decreasing lexicographic order of
//!   their exponent vectors, e.g. `y0², y0y1, y1²`;
//! * rows run over `(h_1, …, h_p)` with the last factor varying fastest;
//! * columns run over `(g_1, …, g_p, ξ)` with `ξ` varying fastest;
//! * for a factor order `(π_1, …, π_p)` the degrees are
//!   `m_{π_j} = k_{π_{j+1}} + … + k_{π_p}`, so the first factor carries the
//!   largest symmetric power and the last carries none.
//!
//! With these choices the 3×2×2 matrix is the familiar 6×6 display whose first
//! row is `a000 a100 a200 0 0 0`.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::degree::{boundary_degree, classify};
use crate::polyalg::{exact_determinant, rat, ExactMatrix, Rational};
use crate::tensor::{Format, MultiMatrix};
use crate::{Error, Result};

/// Sign of `Det` on the 3×2×2 diagonal: `Det = ε a000² a101 a110 a211²`.
pub const DIAGONAL_SIGN_3X2X2: i64 = -1;

/// `cayley_3x2x2(A) = CAYLEY_3X2X2_SCALE · hyperdet_boundary(A)`.
pub const CAYLEY_3X2X2_SCALE: i64 = -1;

/// Largest `N` accepted by [`hyperdet_boundary`].
pub const MAX_BOUNDARY_DEGREE: u64 = 5040;

/// Exponent vectors of degree `m` in `n` variables, lexicographically decreasing.
pub fn monomial_basis(n: usize, m: u32) -> Vec<Vec<u32>> {
    fn rec(n: usize, m: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() + 1 == n {
            prefix.push(m);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=m).rev() {
            prefix.push(e);
            rec(n, m - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    rec(n, m, &mut Vec::new(), &mut out);
    out
}

/// Sparse description of `∂_A`: entry `(row, col)` equals the tensor entry
/// at flat index `source`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stencil {
    pub size: usize,
    pub cells: Vec<StencilCell>,
    /// Symmetric-power degree `m_i` per axis `1..=p` of the source space.
    pub degrees: Vec<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StencilCell {
    pub row: usize,
    pub col: usize,
    pub source: usize,
}

impl Stencil {
    /// Builds the stencil for a format whose axis 0 is the largest.
    ///
    /// `factor_order` is a permutation of `1..=p`.
    pub fn new(format: &Format, factor_order: &[usize]) -> Result<Self> {
        let dims = format.dims();
        let p = dims.len() - 1;
        let ks = format.ks();
        if !classify(format)?.boundary || ks[0] != ks[1..].iter().sum::<usize>() {
            return Err(Error::Format(format!(
                "{format} is not of boundary format with the largest axis first"
            )));
        }
        let mut sorted = factor_order.to_vec();
        sorted.sort_unstable();
        if sorted != (1..=p).collect::<Vec<_>>() {
            return Err(Error::Domain(format!(
                "factor order {factor_order:?} is not a permutation of 1..={p}"
            )));
        }
        let n = boundary_degree(format)?;
        if n > MAX_BOUNDARY_DEGREE {
            return Err(Error::SizeLimit(format!(
                "N = {n} exceeds the limit {MAX_BOUNDARY_DEGREE}"
            )));
        }

        let mut degrees = vec![0u32; p + 1];
        let mut tail = 0u32;
        for &axis in factor_order.iter().rev() {
            degrees[axis] = tail;
            tail += ks[axis] as u32;
        }

        let sources: Vec<Vec<Vec<u32>>> = (1..=p).map(|t| monomial_basis(dims[t], degrees[t])).collect();
        let targets: Vec<Vec<Vec<u32>>> = (1..=p).map(|t| monomial_basis(dims[t], degrees[t] + 1)).collect();
        let target_pos: Vec<HashMap<Vec<u32>, usize>> = targets
            .iter()
            .map(|b| b.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect())
            .collect();

        let source_count: usize = sources.iter().map(Vec::len).product::<usize>() * dims[0];
        let target_count: usize = targets.iter().map(Vec::len).product();
        if source_count != target_count || source_count as u64 != n {
            return Err(Error::Inconsistency(format!(
                "∂_A would be {target_count}x{source_count}, expected N = {n}"
            )));
        }

        let source_sizes: Vec<usize> = sources.iter().map(Vec::len).collect();
        let target_sizes: Vec<usize> = targets.iter().map(Vec::len).collect();
        let target_strides = strides(&target_sizes);
        let tensor_strides = strides(dims);

        let mut cells = Vec::new();
        let mut col = 0usize;
        for g in odometer(&source_sizes) {
            for xi in 0..dims[0] {
                for j in odometer(&dims[1..]) {
                    let mut row = 0;
                    for t in 0..p {
                        let mut mono = sources[t][g[t]].clone();
                        mono[j[t]] += 1;
                        row += target_pos[t][&mono] * target_strides[t];
                    }
                    let source = xi * tensor_strides[0]
                        + j.iter().zip(&tensor_strides[1..]).map(|(a, b)| a * b).sum::<usize>();
                    cells.push(StencilCell { row, col, source });
                }
                col += 1;
            }
        }
        Ok(Stencil {
            size: source_count,
            cells,
            degrees: degrees[1..].to_vec(),
        })
    }

    /// The matrix with every cell filled from `A`.
    pub fn fill(&self, a: &MultiMatrix) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(self.size, self.size);
        for c in &self.cells {
            m.set(c.row, c.col, a.entries()[c.source].clone());
        }
        m
    }

    /// The matrix with generic entries `f(source)`, e.g. variables.
    pub fn map<T: Clone>(&self, zero: T, mut f: impl FnMut(usize) -> T) -> Vec<Vec<T>> {
        let mut m = vec![vec![zero; self.size]; self.size];
        for c in &self.cells {
            m[c.row][c.col] = f(c.source);
        }
        m
    }
}

fn strides(sizes: &[usize]) -> Vec<usize> {
    let mut s = vec![1; sizes.len()];
    for i in (0..sizes.len().saturating_sub(1)).rev() {
        s[i] = s[i + 1] * sizes[i + 1];
    }
    s
}

fn odometer(sizes: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &s in sizes {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..s).map(move |i| {
                    let mut v = prefix.clone();
                    v.push(i);
                    v
                })
            })
            .collect();
    }
    out
}

/// The `N × N` matrix of `∂_A` for `A` with its largest axis first.
pub fn build_partial_a(a: &MultiMatrix, factor_order: &[usize]) -> Result<ExactMatrix> {
    Ok(Stencil::new(a.format(), factor_order)?.fill(a))
}

/// Permutation moving the first largest axis to the front, keeping the others in order.
pub fn canonical_axes(format: &Format) -> Vec<usize> {
    let dims = format.dims();
    let max = dims.iter().copied().max().unwrap_or(0);
    let lead = dims.iter().position(|&d| d == max).unwrap_or(0);
    std::iter::once(lead)
        .chain((0..dims.len()).filter(|&i| i != lead))
        .collect()
}

/// `Det(A) = det ∂_A` for a boundary-format `A`, factors in their given order.
pub fn hyperdet_boundary(a: &MultiMatrix) -> Result<Rational> {
    if !classify(a.format())?.boundary {
        return Err(Error::Format(format!("{} is not of boundary format", a.format())));
    }
    let axes = canonical_axes(a.format());
    let a = a.permute_axes(&axes)?;
    let p = a.format().order() - 1;
    let order: Vec<usize> = (1..=p).collect();
    exact_determinant(&build_partial_a(&a, &order)?)
}

/// Cayley's 3×2×2 formula `det A01 · det A10 − det A00 · det A11`, where `A_jk`
/// is the 3×3 flattening with column `jk` removed.
pub fn cayley_3x2x2(a: &MultiMatrix) -> Result<Rational> {
    if a.dims() != [3, 2, 2] {
        return Err(Error::Format(format!("expected 3x2x2, got {}", a.format())));
    }
    let f = a.flattening(0)?;
    let minor = |col: usize| exact_determinant(&f.minor(&[], &[col]));
    Ok(minor(1)? * minor(2)? - minor(0)? * minor(3)?)
}

/// The identity of a boundary format: `a_{i} = 1` when the index on the
/// largest axis equals the sum of the others, 0 otherwise.
pub fn identity_tensor(format: &Format) -> Result<MultiMatrix> {
    if !classify(format)?.boundary {
        return Err(Error::Format(format!("{format} is not of boundary format")));
    }
    let lead = canonical_axes(format)[0];
    Ok(MultiMatrix::from_fn(format.clone(), |idx| {
        let rest: usize = idx.iter().enumerate().filter(|(t, _)| *t != lead).map(|(_, &v)| v).sum();
        if idx[lead] == rest {
            Rational::one()
        } else {
            Rational::zero()
        }
    }))
}

/// The tensor with the given entries on the diagonal of the identity and 0 elsewhere.
pub fn diagonal_tensor(format: &Format, diagonal: &[Rational]) -> Result<MultiMatrix> {
    let id = identity_tensor(format)?;
    let support: Vec<usize> = (0..id.entries().len()).filter(|&i| !id.entries()[i].is_zero()).collect();
    if support.len() != diagonal.len() {
        return Err(Error::Dimension(format!(
            "{format} has {} diagonal entries, got {}",
            support.len(),
            diagonal.len()
        )));
    }
    let mut entries = vec![rat(0); id.entries().len()];
    for (&i, v) in support.iter().zip(diagonal) {
        entries[i] = v.clone();
    }
    MultiMatrix::new(format.clone(), entries)
}
