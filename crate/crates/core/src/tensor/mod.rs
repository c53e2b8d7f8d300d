//! Multidimensional matrices over ℚ.
//!
//! Entries are stored row-major with the last axis varying fastest. That
//! order is load-bearing: flattenings, the ∂_A matrix and hence the sign of
//! the boundary-format hyperdeterminant are all read off it.

mod document;

pub use document::{EntryValue, PointDocument, TensorDocument};

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::polyalg::{exact_rank, rat, ExactMatrix, Polynomial, Rational};
use crate::{Error, Result};

/// Dimension vector `(k_0+1) × … × (k_p+1)`.
///
/// Hyperdeterminant-bearing formats have at least two axes. A single axis is
/// also accepted because slicing a two-dimensional matrix yields a vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Format {
    dims: Vec<usize>,
}

impl Format {
    pub fn new(dims: Vec<usize>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::Format("a format needs at least one axis".into()));
        }
        if dims.contains(&0) {
            return Err(Error::Format(format!("zero dimension in {dims:?}")));
        }
        Ok(Format { dims })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// `k_i = dims[i] - 1`.
    pub fn ks(&self) -> Vec<usize> {
        self.dims.iter().map(|d| d - 1).collect()
    }

    /// Number of axes, `p + 1`.
    pub fn order(&self) -> usize {
        self.dims.len()
    }

    pub fn num_entries(&self) -> usize {
        self.dims.iter().product()
    }

    fn strides(&self) -> Vec<usize> {
        let mut s = vec![1; self.dims.len()];
        for i in (0..self.dims.len().saturating_sub(1)).rev() {
            s[i] = s[i + 1] * self.dims[i + 1];
        }
        s
    }

    /// All multi-indices in storage order.
    pub fn indices(&self) -> MultiIndexIter {
        MultiIndexIter {
            dims: self.dims.clone(),
            next: Some(vec![0; self.dims.len()]),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.dims.iter().map(usize::to_string).collect();
        write!(f, "{}", parts.join("x"))
    }
}

/// Row-major odometer over a box of indices.
pub struct MultiIndexIter {
    dims: Vec<usize>,
    next: Option<Vec<usize>>,
}

impl Iterator for MultiIndexIter {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.next.take()?;
        if self.dims.contains(&0) {
            return None;
        }
        let mut n = cur.clone();
        let mut axis = n.len();
        loop {
            if axis == 0 {
                break;
            }
            axis -= 1;
            n[axis] += 1;
            if n[axis] < self.dims[axis] {
                self.next = Some(n);
                break;
            }
            n[axis] = 0;
        }
        Some(cur)
    }
}

/// A multidimensional matrix `A ∈ V_0 ⊗ … ⊗ V_p` with rational entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiMatrix {
    format: Format,
    entries: Vec<Rational>,
}

impl MultiMatrix {
    pub fn new(format: Format, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != format.num_entries() {
            return Err(Error::Dimension(format!(
                "format {format} needs {} entries, got {}",
                format.num_entries(),
                entries.len()
            )));
        }
        Ok(MultiMatrix { format, entries })
    }

    pub fn zeros(format: Format) -> Self {
        let n = format.num_entries();
        MultiMatrix {
            format,
            entries: vec![Rational::zero(); n],
        }
    }

    pub fn from_fn(format: Format, mut f: impl FnMut(&[usize]) -> Rational) -> Self {
        let entries = format.indices().map(|idx| f(&idx)).collect();
        MultiMatrix { format, entries }
    }

    /// Integer entries in storage order; panics on a length mismatch.
    pub fn from_i64(dims: &[usize], entries: &[i64]) -> Self {
        let format = Format::new(dims.to_vec()).expect("valid format");
        Self::new(format, entries.iter().map(|&v| rat(v)).collect()).expect("entry count")
    }

    /// The decomposable tensor `v_0 ⊗ … ⊗ v_p`.
    pub fn decomposable(vectors: &[Vec<Rational>]) -> Result<Self> {
        let format = Format::new(vectors.iter().map(Vec::len).collect())?;
        Ok(Self::from_fn(format, |idx| {
            idx.iter()
                .zip(vectors)
                .fold(Rational::one(), |acc, (&i, v)| acc * &v[i])
        }))
    }

    /// The two-dimensional matrix as a multidimensional one.
    pub fn from_matrix(m: &ExactMatrix) -> Result<Self> {
        Self::new(Format::new(vec![m.rows(), m.cols()])?, m.entries().to_vec())
    }

    pub fn format(&self) -> &Format {
        &self.format
    }

    pub fn dims(&self) -> &[usize] {
        self.format.dims()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn flat_index(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.format.order());
        idx.iter()
            .zip(self.format.strides())
            .map(|(i, s)| i * s)
            .sum()
    }

    pub fn get(&self, idx: &[usize]) -> &Rational {
        &self.entries[self.flat_index(idx)]
    }

    pub fn set(&mut self, idx: &[usize], v: Rational) {
        let k = self.flat_index(idx);
        self.entries[k] = v;
    }

    pub fn scale(&self, c: &Rational) -> Self {
        MultiMatrix {
            format: self.format.clone(),
            entries: self.entries.iter().map(|v| v * c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.format != other.format {
            return Err(Error::Dimension(format!(
                "cannot add {} and {}",
                self.format, other.format
            )));
        }
        Ok(MultiMatrix {
            format: self.format.clone(),
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        })
    }

    /// The two-dimensional case as an [`ExactMatrix`].
    pub fn to_matrix(&self) -> Result<ExactMatrix> {
        match self.dims() {
            [r, c] => ExactMatrix::new(*r, *c, self.entries.clone()),
            _ => Err(Error::Format(format!("{} is not two-dimensional", self.format))),
        }
    }

    fn check_axis(&self, axis: usize) -> Result<()> {
        if axis >= self.format.order() {
            return Err(Error::Domain(format!(
                "axis {axis} out of range for format {}",
                self.format
            )));
        }
        Ok(())
    }

    fn check_index(&self, axis: usize, index: usize) -> Result<()> {
        self.check_axis(axis)?;
        if index >= self.dims()[axis] {
            return Err(Error::Domain(format!(
                "index {index} out of range on axis {axis} of {}",
                self.format
            )));
        }
        Ok(())
    }

    /// The matrix obtained by fixing coordinate `axis` to `index`.
    pub fn slice(&self, axis: usize, index: usize) -> Result<Self> {
        self.check_index(axis, index)?;
        if self.format.order() == 1 {
            return Err(Error::Domain("cannot slice a vector".into()));
        }
        let mut dims = self.dims().to_vec();
        dims.remove(axis);
        let format = Format::new(dims)?;
        Ok(Self::from_fn(format, |idx| {
            let mut full = idx.to_vec();
            full.insert(axis, index);
            self.get(&full).clone()
        }))
    }

    /// Exchanges slices `j1` and `j2` along `axis`.
    pub fn swap_slices(&self, axis: usize, j1: usize, j2: usize) -> Result<Self> {
        self.check_index(axis, j1)?;
        self.check_index(axis, j2)?;
        if j1 == j2 {
            return Err(Error::Domain("swap needs two distinct slices".into()));
        }
        Ok(Self::from_fn(self.format.clone(), |idx| {
            let mut src = idx.to_vec();
            if src[axis] == j1 {
                src[axis] = j2;
            } else if src[axis] == j2 {
                src[axis] = j1;
            }
            self.get(&src).clone()
        }))
    }

    /// Reorders the axes: axis `t` of the result is axis `perm[t]` of `self`.
    pub fn permute_axes(&self, perm: &[usize]) -> Result<Self> {
        let n = self.format.order();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&a| a >= n || std::mem::replace(&mut seen[a], true)) {
            return Err(Error::Domain(format!("{perm:?} is not a permutation of 0..{n}")));
        }
        let format = Format::new(perm.iter().map(|&a| self.dims()[a]).collect())?;
        Ok(Self::from_fn(format, |idx| {
            let mut src = vec![0; n];
            for (t, &a) in perm.iter().enumerate() {
                src[a] = idx[t];
            }
            self.get(&src).clone()
        }))
    }

    /// The flattening `C_i(A)`: a `dims[i] × Π_{j≠i} dims[j]` matrix whose
    /// columns run over the remaining multi-indices in row-major order.
    pub fn flattening(&self, i: usize) -> Result<ExactMatrix> {
        self.check_axis(i)?;
        let rows = self.dims()[i];
        let cols = self.format.num_entries() / rows;
        let mut m = ExactMatrix::zeros(rows, cols);
        let mut other_dims = self.dims().to_vec();
        other_dims.remove(i);
        let other_strides = Format { dims: other_dims }.strides();
        for (flat, idx) in self.format.indices().enumerate() {
            let col: usize = idx
                .iter()
                .enumerate()
                .filter(|(a, _)| *a != i)
                .map(|(_, &v)| v)
                .zip(&other_strides)
                .map(|(v, s)| v * s)
                .sum();
            m.set(idx[i], col, self.entries[flat].clone());
        }
        Ok(m)
    }

    /// Whether `A = v_0 ⊗ … ⊗ v_p`, i.e. every flattening has rank ≤ 1.
    pub fn is_decomposable(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::Domain("decomposability is defined for nonzero tensors".into()));
        }
        for i in 0..self.format.order() {
            if exact_rank(&self.flattening(i)?) > 1 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Change of basis on every axis:
    /// `(A·g)_{i_0…i_p} = Σ_j a_{j_0…j_p} Π_t g_t[j_t][i_t]`.
    ///
    /// This is a right action, `A·(gh) = (A·g)·h`, and satisfies
    /// `A·g (x^0, …, x^p) = A(g_0 x^0, …, g_p x^p)`.
    pub fn multilinear_apply(&self, g: &[ExactMatrix]) -> Result<Self> {
        if g.len() != self.format.order() {
            return Err(Error::Dimension(format!(
                "need {} matrices, got {}",
                self.format.order(),
                g.len()
            )));
        }
        for (t, gt) in g.iter().enumerate() {
            let d = self.dims()[t];
            if gt.rows() != d || gt.cols() != d {
                return Err(Error::Dimension(format!(
                    "axis {t} needs a {d}x{d} matrix, got {}x{}",
                    gt.rows(),
                    gt.cols()
                )));
            }
        }
        // one axis at a time
        let mut cur = self.clone();
        for (t, gt) in g.iter().enumerate() {
            cur = Self::from_fn(cur.format.clone(), |idx| {
                let mut src = idx.to_vec();
                let mut acc = Rational::zero();
                for j in 0..gt.rows() {
                    let c = gt.get(j, idx[t]);
                    if c.is_zero() {
                        continue;
                    }
                    src[t] = j;
                    acc += c * cur.get(&src);
                }
                acc
            });
        }
        Ok(cur)
    }

    /// Convolution `A ∗ B` of two boundary-format matrices, contracting the
    /// last axis of `A` with the first axis of `B`.
    pub fn convolve(&self, other: &Self) -> Result<Self> {
        for (name, m) in [("left", self), ("right", other)] {
            if !crate::degree::classify(m.format())?.boundary {
                return Err(Error::Format(format!(
                    "{name} factor {} is not of boundary format",
                    m.format
                )));
            }
        }
        let p = self.format.order() - 1;
        let h_dim = self.dims()[p];
        if other.dims()[0] != h_dim {
            return Err(Error::Dimension(format!(
                "last axis of {} does not match first axis of {}",
                self.format, other.format
            )));
        }
        let mut dims = self.dims()[..p].to_vec();
        dims.extend_from_slice(&other.dims()[1..]);
        let format = Format::new(dims)?;
        Ok(Self::from_fn(format, |idx| {
            let mut ai = idx[..p].to_vec();
            ai.push(0);
            let mut bi = vec![0];
            bi.extend_from_slice(&idx[p..]);
            let mut acc = Rational::zero();
            for h in 0..h_dim {
                ai[p] = h;
                bi[0] = h;
                acc += self.get(&ai) * other.get(&bi);
            }
            acc
        }))
    }

    /// `A(x^0, …, V_i, …, x^p)`: contraction against every vector except
    /// the one on `axis`.
    pub fn contract_except(&self, x: &PointTuple, axis: usize) -> Result<Vec<Rational>> {
        self.check_axis(axis)?;
        self.check_points(x)?;
        let mut out = vec![Rational::zero(); self.dims()[axis]];
        for (flat, idx) in self.format.indices().enumerate() {
            let a = &self.entries[flat];
            if a.is_zero() {
                continue;
            }
            let mut w = a.clone();
            for (t, &i) in idx.iter().enumerate() {
                if t != axis {
                    w *= &x.vectors[t][i];
                    if w.is_zero() {
                        break;
                    }
                }
            }
            out[idx[axis]] += w;
        }
        Ok(out)
    }

    fn check_points(&self, x: &PointTuple) -> Result<()> {
        if x.vectors.len() != self.format.order()
            || x.vectors.iter().zip(self.dims()).any(|(v, &d)| v.len() != d)
        {
            return Err(Error::Dimension(format!(
                "point tuple does not fit format {}",
                self.format
            )));
        }
        Ok(())
    }

    /// Whether `x^0 ⊗ … ⊗ x^p` lies in the kernel `K(A)`, i.e. every
    /// contraction `A(x^0, …, V_i, …, x^p)` vanishes. A `true` answer
    /// certifies that `A` is degenerate.
    pub fn kernel_check(&self, x: &PointTuple) -> Result<bool> {
        self.check_points(x)?;
        if x.vectors.iter().any(|v| v.iter().all(Zero::is_zero)) {
            return Err(Error::Domain("kernel certificates need nonzero vectors".into()));
        }
        for axis in 0..self.format.order() {
            if self.contract_except(x, axis)?.iter().any(|v| !v.is_zero()) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Full contraction `A(x^0, …, x^p)`.
    pub fn evaluate(&self, x: &PointTuple) -> Result<Rational> {
        self.check_points(x)?;
        let last = self.format.order() - 1;
        Ok(self
            .contract_except(x, last)?
            .iter()
            .zip(&x.vectors[last])
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b))
    }

    /// The symmetric tensor of a homogeneous form `f` of degree `d` in `n+1`
    /// variables, normalised so that `A(x, …, x) = f(x)`.
    pub fn symmetric_embed(f: &Polynomial) -> Result<Self> {
        let d = f
            .homogeneous_degree()
            .ok_or_else(|| Error::Format("symmetric embedding needs a nonzero homogeneous form".into()))?;
        if d == 0 {
            return Err(Error::Format("symmetric embedding needs degree >= 1".into()));
        }
        let n = f.nvars();
        let format = Format::new(vec![n; d as usize])?;
        let d_fact = crate::polyalg::factorial(d as u64);
        Ok(Self::from_fn(format, |idx| {
            let mut exps = vec![0u32; n];
            for &i in idx {
                exps[i] += 1;
            }
            let c = f.coeff(&exps);
            if c.is_zero() {
                return c;
            }
            let denom = exps
                .iter()
                .fold(BigInt::one(), |acc, &e| acc * crate::polyalg::factorial(e as u64));
            // multinomial d! / Π e_i!
            c * Rational::new(denom, d_fact.clone())
        }))
    }
}

impl fmt::Display for MultiMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(crate::polyalg::format_rational).collect();
        write!(f, "{} [{}]", self.format, cells.join(", "))
    }
}

/// A tuple of vectors `x^0, …, x^p`, one per axis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointTuple {
    pub vectors: Vec<Vec<Rational>>,
}

impl PointTuple {
    pub fn new(vectors: Vec<Vec<Rational>>) -> Self {
        PointTuple { vectors }
    }

    pub fn from_i64(vectors: &[&[i64]]) -> Self {
        PointTuple {
            vectors: vectors.iter().map(|v| v.iter().map(|&x| rat(x)).collect()).collect(),
        }
    }

    /// `(g_0 x^0, …, g_p x^p)`: the transformation under which
    /// `kernel_check(A·g, x) == kernel_check(A, g x)`.
    pub fn transform(&self, g: &[ExactMatrix]) -> Result<Self> {
        if g.len() != self.vectors.len() {
            return Err(Error::Dimension("one matrix per vector".into()));
        }
        Ok(PointTuple {
            vectors: g
                .iter()
                .zip(&self.vectors)
                .map(|(m, v)| m.apply(v))
                .collect::<Result<_>>()?,
        })
    }
}
