#![allow(dead_code)]

use hyperdet::pencil::pencil_tensor;
use hyperdet::polyalg::{rat, ExactMatrix, Rational};
use hyperdet::schlaefli::slice_determinant_poly;
use hyperdet::{Format, MultiMatrix, PointTuple};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_tensor(r: &mut impl Rng, dims: &[usize], bound: i64) -> MultiMatrix {
    let n: usize = dims.iter().product();
    let e: Vec<i64> = (0..n).map(|_| r.gen_range(-bound..=bound)).collect();
    MultiMatrix::from_i64(dims, &e)
}

pub fn random_vector(r: &mut impl Rng, n: usize, bound: i64) -> Vec<Rational> {
    loop {
        let v: Vec<Rational> = (0..n).map(|_| rat(r.gen_range(-bound..=bound))).collect();
        if v.iter().any(|x| !x.is_zero()) {
            return v;
        }
    }
}

/// Product of random elementary integer matrices and one diagonal scaling.
pub fn random_invertible(r: &mut impl Rng, n: usize) -> ExactMatrix {
    let mut g = ExactMatrix::identity(n);
    if n == 1 {
        return ExactMatrix::from_i64(&[&[*[1, -1, 2, 3].get(r.gen_range(0..4)).unwrap()]]);
    }
    for _ in 0..3 * n {
        let i = r.gen_range(0..n);
        let mut j = r.gen_range(0..n);
        while j == i {
            j = r.gen_range(0..n);
        }
        let c = rat(r.gen_range(-2..=2));
        let mut e = ExactMatrix::identity(n);
        e.set(i, j, c);
        g = g.matmul(&e).unwrap();
    }
    let s = rat(*[1, -1, 2, -3].get(r.gen_range(0..4)).unwrap());
    let mut d = ExactMatrix::identity(n);
    let k = r.gen_range(0..n);
    d.set(k, k, s);
    g.matmul(&d).unwrap()
}

pub fn random_group_element(r: &mut impl Rng, format: &Format) -> Vec<ExactMatrix> {
    format.dims().iter().map(|&d| random_invertible(r, d)).collect()
}

/// A random tensor together with a kernel certificate.
///
/// Entries whose index has at most one nonzero coordinate are cleared, so
/// `(e_0, …, e_0)` is in the kernel; a random change of basis hides it.
pub fn degenerate_with_certificate(r: &mut impl Rng, dims: &[usize], bound: i64) -> (MultiMatrix, PointTuple) {
    let mut a = random_tensor(r, dims, bound);
    for idx in a.format().indices().collect::<Vec<_>>() {
        if idx.iter().filter(|&&i| i != 0).count() <= 1 {
            a.set(&idx, rat(0));
        }
    }
    let e0 = PointTuple::new(
        dims.iter()
            .map(|&d| (0..d).map(|i| rat((i == 0) as i64)).collect())
            .collect(),
    );
    let g = random_group_element(r, a.format());
    let ginv: Vec<ExactMatrix> = g.iter().map(|m| m.inverse().unwrap()).collect();
    (a.multilinear_apply(&g).unwrap(), e0.transform(&ginv).unwrap())
}

pub fn diag(d: &[Rational]) -> ExactMatrix {
    let n = d.len();
    ExactMatrix::from_fn(n, n, |i, j| if i == j { d[i].clone() } else { rat(0) })
}

pub fn random_symmetric(r: &mut impl Rng, n: usize, bound: i64) -> ExactMatrix {
    let mut m = ExactMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = rat(r.gen_range(-bound..=bound));
            m.set(i, j, v.clone());
            m.set(j, i, v);
        }
    }
    m
}

/// `Pᵗ M P`.
pub fn congruence(m: &ExactMatrix, p: &ExactMatrix) -> ExactMatrix {
    p.transpose().matmul(m).unwrap().matmul(p).unwrap()
}

pub fn rank_one_sum(r: &mut impl Rng, terms: usize, bound: i64) -> MultiMatrix {
    let mut acc = MultiMatrix::zeros(Format::new(vec![3, 3, 3]).unwrap());
    for _ in 0..terms {
        let v: Vec<Vec<Rational>> = (0..3).map(|_| random_vector(r, 3, bound)).collect();
        acc = acc.add(&MultiMatrix::decomposable(&v).unwrap()).unwrap();
    }
    acc
}

pub fn pow(q: &Rational, e: u64) -> Rational {
    (0..e).fold(rat(1), |acc, _| acc * q)
}

// Dense univariate polynomials, lowest coefficient first.
fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn rem(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db && !r.is_empty() {
        let lead = r.last().unwrap() / b.last().unwrap();
        let shift = r.len() - 1 - db;
        for (i, c) in b.iter().enumerate() {
            r[shift + i] -= &lead * c;
        }
        r = trim(r);
    }
    r
}

fn gcd_degree(a: &[Rational], b: &[Rational]) -> usize {
    let (mut x, mut y) = (trim(a.to_vec()), trim(b.to_vec()));
    while !y.is_empty() {
        let r = rem(&x, &y);
        x = y;
        y = r;
    }
    x.len() - 1
}

/// Whether `det(x0 A0 + x1 A1)` has k distinct roots in P¹, decided from
/// `f(t) = F(t, 1)` with squarefreeness and at most a simple root at infinity.
pub fn distinct_roots_oracle(a: &MultiMatrix) -> bool {
    let k = a.dims()[1] as u32;
    let form = slice_determinant_poly(a).unwrap();
    if form.is_zero() {
        return false;
    }
    let f: Vec<Rational> = trim((0..=k).map(|e| form.coeff(&[e, k - e])).collect());
    let deg = f.len() - 1;
    if k as usize - deg > 1 {
        return false;
    }
    if deg == 0 {
        return true;
    }
    let df: Vec<Rational> = (1..f.len()).map(|i| &f[i] * rat(i as i64)).collect();
    gcd_degree(&f, &df) == 0
}

pub fn random_symmetric_pencil(r: &mut impl Rng, k: usize) -> MultiMatrix {
    if r.gen_bool(0.3) {
        // congruent to a diagonal pair with a repeated ratio
        let mut d0: Vec<Rational> = (0..k).map(|_| rat(r.gen_range(1..=3))).collect();
        let mut d1: Vec<Rational> = (0..k).map(|_| rat(r.gen_range(-3..=3))).collect();
        d0[1] = d0[0].clone() * rat(2);
        d1[1] = d1[0].clone() * rat(2);
        let p = random_invertible(r, k);
        pencil_tensor(&congruence(&diag(&d0), &p), &congruence(&diag(&d1), &p)).unwrap()
    } else {
        pencil_tensor(&random_symmetric(r, k, 2), &random_symmetric(r, k, 2)).unwrap()
    }
}
