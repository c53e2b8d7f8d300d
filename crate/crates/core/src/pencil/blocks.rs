use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockKind {
    /// Blocks `2×q×(q+1)` and `2×(q+1)×(q+2)`; `param` is `q`.
    Kronecker,
    /// Blocks `w×a_j×a_{j+1}` and `w×a_{j+1}×a_{j+2}`; `param` is `j`.
    Kac,
}

/// `n` blocks of the first shape and `m` of the second.
///
/// Block shapes are plain triples because the smallest Kronecker block,
/// `2×0×1`, has an empty axis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub kind: BlockKind,
    pub n: u64,
    pub m: u64,
    pub param: u64,
    pub blocks: Vec<[u64; 3]>,
}

fn overflow() -> Error {
    Error::Overflow("block arithmetic".into())
}

fn shapes(n: u64, m: u64, first: [u64; 3], second: [u64; 3]) -> Vec<[u64; 3]> {
    let mut out = vec![first; n as usize];
    out.extend(std::iter::repeat_n(second, m as usize));
    out
}

/// The unique `(n, m, q)` with `b = nq + m(q+1)` and `c = n(q+1) + m(q+2)`.
pub fn kronecker_blocks(b: u64, c: u64) -> Result<BlockDecomposition> {
    if b < 2 || b >= c {
        return Err(Error::Domain(format!("need 2 ≤ b < c, got b = {b}, c = {c}")));
    }
    let gap = c - b;
    let q = b / gap;
    let m = b - q * gap;
    let n = gap - m;
    let lhs_b = n.checked_mul(q).and_then(|x| x.checked_add(m.checked_mul(q + 1)?)).ok_or_else(overflow)?;
    let lhs_c = n
        .checked_mul(q + 1)
        .and_then(|x| x.checked_add(m.checked_mul(q + 2)?))
        .ok_or_else(overflow)?;
    if lhs_b != b || lhs_c != c {
        return Err(Error::Inconsistency(format!("({n}, {m}, {q}) does not reproduce ({b}, {c})")));
    }
    if n.checked_add(m).is_none_or(|s| s > 1 << 20) {
        return Err(Error::SizeLimit("too many blocks".into()));
    }
    Ok(BlockDecomposition {
        kind: BlockKind::Kronecker,
        n,
        m,
        param: q,
        blocks: shapes(n, m, [2, q, q + 1], [2, q + 1, q + 2]),
    })
}

/// `a_0 = 0, a_1 = 1, a_j = w a_{j-1} - a_{j-2}` up to `a_{jmax}`.
pub fn kac_sequence(w: u64, jmax: usize) -> Result<Vec<u64>> {
    if w < 2 {
        return Err(Error::Domain(format!("need w ≥ 2, got {w}")));
    }
    let mut a = vec![0u64, 1];
    while a.len() <= jmax {
        let l = a.len();
        let next = w.checked_mul(a[l - 1]).and_then(|x| x.checked_sub(a[l - 2])).ok_or_else(overflow)?;
        a.push(next);
    }
    a.truncate(jmax + 1);
    Ok(a)
}

/// The unique `(n, m, j)` with `s = n a_j + m a_{j+1}`, `t = n a_{j+1} + m a_{j+2}`,
/// `n ≥ 1`, `m ≥ 0`.
pub fn kac_blocks(w: u64, s: u64, t: u64) -> Result<BlockDecomposition> {
    if !(2 <= w && w <= s && s <= t) {
        return Err(Error::Domain(format!("need 2 ≤ w ≤ s ≤ t, got ({w}, {s}, {t})")));
    }
    let (wi, si, ti) = (w as i128, s as i128, t as i128);
    if ti * ti - wi * si * ti + si * si < 1 {
        return Err(Error::Domain(format!("t² - wst + s² < 1 for ({w}, {s}, {t})")));
    }
    let mut seq = vec![0i128, 1, wi];
    let mut found = Vec::new();
    let mut j = 0usize;
    while seq[j] <= ti {
        while seq.len() < j + 3 {
            let l = seq.len();
            let next = wi.checked_mul(seq[l - 1]).and_then(|x| x.checked_sub(seq[l - 2])).ok_or_else(overflow)?;
            seq.push(next);
        }
        let (x, y, z) = (seq[j], seq[j + 1], seq[j + 2]);
        // the system has determinant x z - y² = -1
        let n = y * ti - z * si;
        let m = y * si - x * ti;
        if n >= 1 && m >= 0 {
            found.push((n, m, j));
        }
        j += 1;
    }
    let (n, m, j) = match found.as_slice() {
        [one] => *one,
        [] => return Err(Error::Inconsistency(format!("no block count for ({w}, {s}, {t})"))),
        _ => return Err(Error::Inconsistency(format!("several block counts for ({w}, {s}, {t}): {found:?}"))),
    };
    let (x, y, z) = (seq[j], seq[j + 1], seq[j + 2]);
    if n * x + m * y != si || n * y + m * z != ti || x * z - y * y != -1 {
        return Err(Error::Inconsistency(format!("({n}, {m}, {j}) does not reproduce ({s}, {t})")));
    }
    if n + m > 1 << 20 {
        return Err(Error::SizeLimit("too many blocks".into()));
    }
    let (n, m) = (n as u64, m as u64);
    let (x, y, z) = (x as u64, y as u64, z as u64);
    Ok(BlockDecomposition {
        kind: BlockKind::Kac,
        n,
        m,
        param: j as u64,
        blocks: shapes(n, m, [w, x, y], [w, y, z]),
    })
}
