use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{format_rational, rat, Rational};
use crate::{Error, Result};

/// Dense row-major matrix over ℚ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl ExactMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(ExactMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        ExactMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Convenience constructor from integer rows; panics on ragged input.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect())
            .expect("rectangular integer rows")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|v| v * c).collect(),
        }
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Self::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).fold(Rational::zero(), |acc, k| acc + self.get(i, k) * other.get(k, j))
        }))
    }

    /// Deletes the listed rows and columns.
    pub fn minor(&self, drop_rows: &[usize], drop_cols: &[usize]) -> Self {
        let keep_r: Vec<usize> = (0..self.rows).filter(|i| !drop_rows.contains(i)).collect();
        let keep_c: Vec<usize> = (0..self.cols).filter(|j| !drop_cols.contains(j)).collect();
        Self::from_fn(keep_r.len(), keep_c.len(), |i, j| self.get(keep_r[i], keep_c[j]).clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_skew_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                self.get(i, i).is_zero() && (0..i).all(|j| *self.get(i, j) == -self.get(j, i))
            })
    }

    /// Exact inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Dimension("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.to_rows();
        let mut inv = ExactMatrix::identity(n).to_rows();
        for col in 0..n {
            let piv = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .ok_or_else(|| Error::Pivot("matrix is singular".into()))?;
            a.swap(col, piv);
            inv.swap(col, piv);
            let p = a[col][col].clone();
            for j in 0..n {
                a[col][j] /= &p;
                inv[col][j] /= &p;
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for j in 0..n {
                        let t = &f * &a[col][j];
                        a[r][j] -= t;
                        let t = &f * &inv[col][j];
                        inv[r][j] -= t;
                    }
                }
            }
        }
        ExactMatrix::from_rows(inv)
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::Dimension("vector length".into()));
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).fold(Rational::zero(), |acc, (a, b)| acc + a * b))
            .collect())
    }

    /// Rows scaled by the lcm of their denominators, as integers, together
    /// with the product of those scale factors.
    fn cleared_integer_rows(&self) -> (Vec<Vec<BigInt>>, BigInt) {
        let mut total = BigInt::one();
        let rows = (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let l = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
                total *= &l;
                row.iter().map(|q| q.numer() * (&l / q.denom())).collect()
            })
            .collect();
        (rows, total)
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(format_rational).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Fraction-free Gaussian elimination on integer rows. Returns the rank and
/// the signed last pivot, which for a square full-rank input is the determinant.
fn bareiss(m: &mut [Vec<BigInt>]) -> (usize, BigInt) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut sign = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            m.swap(p, r);
            sign = -sign;
        }
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = (&m[r][c] * &m[i][j] - &m[i][c] * &m[r][j]) / &prev;
                m[i][j] = v;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    (r, sign * prev)
}

/// Determinant by Bareiss elimination on the denominator-cleared matrix.
pub fn exact_determinant(m: &ExactMatrix) -> Result<Rational> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "determinant of a {}x{} matrix",
            m.rows, m.cols
        )));
    }
    if m.rows == 0 {
        return Ok(Rational::one());
    }
    let (mut rows, scale) = m.cleared_integer_rows();
    let (rank, det) = bareiss(&mut rows);
    if rank < m.rows {
        return Ok(Rational::zero());
    }
    Ok(Rational::new(det, scale))
}

/// Rank over ℚ.
pub fn exact_rank(m: &ExactMatrix) -> usize {
    if m.rows == 0 || m.cols == 0 {
        return 0;
    }
    let (mut rows, _) = m.cleared_integer_rows();
    bareiss(&mut rows).0
}

/// Pfaffian of an even-order skew-symmetric matrix by expansion along the
/// first row: `Pf(M) = Σ_j (-1)^(j+1) m_0j Pf(M without rows/cols 0, j)`.
pub fn pfaffian(m: &ExactMatrix) -> Result<Rational> {
    if !m.is_skew_symmetric() {
        return Err(Error::Structure("pfaffian needs a skew-symmetric matrix".into()));
    }
    if m.rows % 2 == 1 {
        return Err(Error::Structure(format!("pfaffian of odd order {}", m.rows)));
    }
    let idx: Vec<usize> = (0..m.rows).collect();
    let mut memo = HashMap::new();
    Ok(pfaffian_rec(m, &idx, &mut memo))
}

fn pfaffian_rec(m: &ExactMatrix, idx: &[usize], memo: &mut HashMap<Vec<usize>, Rational>) -> Rational {
    if idx.is_empty() {
        return Rational::one();
    }
    if let Some(v) = memo.get(idx) {
        return v.clone();
    }
    let first = idx[0];
    let mut acc = Rational::zero();
    for (pos, &j) in idx.iter().enumerate().skip(1) {
        let a = m.get(first, j);
        if a.is_zero() {
            continue;
        }
        let rest: Vec<usize> = idx[1..].iter().copied().filter(|&k| k != j).collect();
        let sub = pfaffian_rec(m, &rest, memo);
        // pos is 1-based among the remaining columns, sign (-1)^(pos+1)
        if pos % 2 == 1 {
            acc += a * sub;
        } else {
            acc -= a * sub;
        }
    }
    memo.insert(idx.to_vec(), acc.clone());
    acc
}

/// Determinant over any commutative ring by Laplace expansion along rows,
/// memoised on the set of used columns. Intended for small symbolic
/// matrices (polynomial entries).
pub fn symbolic_determinant<T>(m: &[Vec<T>], zero: &T, one: &T) -> T
where
    T: Clone + PartialEq,
    for<'a> &'a T: Add<&'a T, Output = T> + Sub<&'a T, Output = T> + Mul<&'a T, Output = T>,
{
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "square matrix");
    assert!(n < 64, "symbolic determinant order");
    let mut memo: HashMap<u64, T> = HashMap::new();
    symbolic_rec(m, 0, 0, zero, one, &mut memo)
}

fn symbolic_rec<T>(m: &[Vec<T>], row: usize, used: u64, zero: &T, one: &T, memo: &mut HashMap<u64, T>) -> T
where
    T: Clone + PartialEq,
    for<'a> &'a T: Add<&'a T, Output = T> + Sub<&'a T, Output = T> + Mul<&'a T, Output = T>,
{
    let n = m.len();
    if row == n {
        return one.clone();
    }
    if let Some(v) = memo.get(&used) {
        return v.clone();
    }
    let mut acc = zero.clone();
    let mut free_seen = 0usize;
    for c in 0..n {
        if used & (1 << c) != 0 {
            continue;
        }
        let sign_neg = free_seen % 2 == 1;
        free_seen += 1;
        let e = &m[row][c];
        if e == zero {
            continue;
        }
        let sub = symbolic_rec(m, row + 1, used | (1 << c), zero, one, memo);
        let t = e * &sub;
        acc = if sign_neg { &acc - &t } else { &acc + &t };
    }
    memo.insert(used, acc.clone());
    acc
}
