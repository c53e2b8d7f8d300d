mod common;

use common::*;
use hyperdet::boundary::*;
use hyperdet::degree::{boundary_degree, slice_degree};
use hyperdet::polyalg::{exact_determinant, rat, Rational};
use hyperdet::schlaefli::{conic_matrix_3x2x2, conic_scale};
use hyperdet::{Format, MultiMatrix};
use num_traits::Zero;
use proptest::prelude::*;

fn format(d: &[usize]) -> Format {
    Format::new(d.to_vec()).unwrap()
}

fn tensor_strategy(dims: Vec<usize>, bound: i64) -> impl Strategy<Value = MultiMatrix> {
    let n: usize = dims.iter().product();
    proptest::collection::vec(-bound..=bound, n).prop_map(move |v| MultiMatrix::from_i64(&dims, &v))
}

// det ∂_A for the order (V2, V1) over det ∂_A for (V1, V2)
const REVERSED_ORDER_SIGN_4X3X2: i64 = -1;

#[test]
fn factor_orders_agree_up_to_a_fixed_sign() {
    let mut r = rng(11);
    let mut sign: Option<Rational> = None;
    let mut nonzero = 0;
    for _ in 0..8 {
        let a = random_tensor(&mut r, &[4, 3, 2], 3);
        let d12 = exact_determinant(&build_partial_a(&a, &[1, 2]).unwrap()).unwrap();
        let d21 = exact_determinant(&build_partial_a(&a, &[2, 1]).unwrap()).unwrap();
        if d12.is_zero() {
            assert!(d21.is_zero());
            continue;
        }
        nonzero += 1;
        let ratio = &d21 / &d12;
        match &sign {
            None => sign = Some(ratio),
            Some(s) => assert_eq!(&ratio, s),
        }
    }
    assert!(nonzero >= 5);
    assert_eq!(sign.unwrap(), rat(REVERSED_ORDER_SIGN_4X3X2));
}

#[test]
fn map_dimensions_for_both_orders() {
    let a = MultiMatrix::zeros(format(&[4, 3, 2]));
    let s12 = Stencil::new(a.format(), &[1, 2]).unwrap();
    let s21 = Stencil::new(a.format(), &[2, 1]).unwrap();
    // V0^∨ ⊗ V1 → S²V1 ⊗ V2 and V0^∨ ⊗ S²V2 → V1 ⊗ S³V2
    assert_eq!(s12.degrees, vec![1, 0]);
    assert_eq!(s21.degrees, vec![0, 2]);
    assert_eq!(s12.size, 12);
    assert_eq!(s21.size, 12);
}

#[test]
fn cayley_and_conic_track_the_reference() {
    let mut r = rng(5);
    for _ in 0..20 {
        let a = random_tensor(&mut r, &[3, 2, 2], 4);
        let d = hyperdet_boundary(&a).unwrap();
        assert_eq!(cayley_3x2x2(&a).unwrap(), &d * rat(CAYLEY_3X2X2_SCALE));
        assert_eq!(exact_determinant(&conic_matrix_3x2x2(&a).unwrap()).unwrap(), &d * conic_scale());
    }
}

#[test]
fn certificates_force_zero() {
    let mut r = rng(8);
    for dims in [[3, 2, 2], [4, 3, 2], [2, 2, 3]] {
        for _ in 0..4 {
            let (a, x) = degenerate_with_certificate(&mut r, &dims, 3);
            assert!(a.kernel_check(&x).unwrap());
            assert!(hyperdet_boundary(&a).unwrap().is_zero(), "{dims:?}");
        }
    }
}

#[test]
fn slice_swaps() {
    let mut r = rng(21);
    for dims in [[3, 2, 2], [4, 3, 2]] {
        let f = format(&dims);
        let n = boundary_degree(&f).unwrap();
        for _ in 0..3 {
            let a = random_tensor(&mut r, &dims, 3);
            let d = hyperdet_boundary(&a).unwrap();
            for axis in 0..3 {
                let s = a.swap_slices(axis, 0, 1).unwrap();
                let e = slice_degree(&f, axis).unwrap();
                let sign = if e % 2 == 0 { rat(1) } else { rat(-1) };
                assert_eq!(hyperdet_boundary(&s).unwrap(), &d * &sign, "{dims:?} axis {axis} N = {n}");
            }
        }
    }
}

#[test]
fn proportional_slices_vanish() {
    let mut r = rng(3);
    let mut a = random_tensor(&mut r, &[4, 3, 2], 3);
    for j in 0..3 {
        for k in 0..2 {
            let v = a.get(&[1, j, k]) * rat(-2);
            a.set(&[3, j, k], v);
        }
    }
    assert!(hyperdet_boundary(&a).unwrap().is_zero());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn homogeneous_of_degree_n(a in tensor_strategy(vec![3, 2, 2], 3), c in -3i64..=3) {
        let n = boundary_degree(a.format()).unwrap();
        let lhs = hyperdet_boundary(&a.scale(&rat(c))).unwrap();
        prop_assert_eq!(lhs, pow(&rat(c), n) * hyperdet_boundary(&a).unwrap());
    }

    #[test]
    fn covariant_under_the_group(a in tensor_strategy(vec![3, 2, 2], 3), seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = random_group_element(&mut r, a.format());
        let f = a.format().clone();
        let factor = g.iter().enumerate().fold(rat(1), |acc, (i, gi)| {
            acc * pow(&exact_determinant(gi).unwrap(), slice_degree(&f, i).unwrap())
        });
        let lhs = hyperdet_boundary(&a.multilinear_apply(&g).unwrap()).unwrap();
        prop_assert_eq!(lhs, hyperdet_boundary(&a).unwrap() * factor);
    }

    #[test]
    fn cauchy_binet(a in tensor_strategy(vec![3, 2, 2], 3), b in tensor_strategy(vec![2, 2], 3)) {
        let lhs = hyperdet_boundary(&a.convolve(&b).unwrap()).unwrap();
        let det_b = hyperdet_boundary(&b).unwrap();
        prop_assert_eq!(lhs, hyperdet_boundary(&a).unwrap() * pow(&det_b, 3));
    }

    #[test]
    fn convolution_of_larger_blocks(a in tensor_strategy(vec![4, 3, 2], 2), b in tensor_strategy(vec![2, 2], 3)) {
        // Det(A∗B) = Det(A)^1 · Det(B)^(4! / (2! 2!))
        let lhs = hyperdet_boundary(&a.convolve(&b).unwrap()).unwrap();
        let det_b = hyperdet_boundary(&b).unwrap();
        prop_assert_eq!(lhs, hyperdet_boundary(&a).unwrap() * pow(&det_b, 6));
    }
}

#[test]
fn diagonal_family_is_a_monomial() {
    let mut r = rng(1);
    use rand::Rng;
    for _ in 0..10 {
        let d: Vec<Rational> = (0..4).map(|_| rat(r.gen_range(-5..=5))).collect();
        let a = diagonal_tensor(&format(&[3, 2, 2]), &d).unwrap();
        let expected = &d[0] * &d[0] * &d[1] * &d[2] * &d[3] * &d[3] * rat(DIAGONAL_SIGN_3X2X2);
        assert_eq!(hyperdet_boundary(&a).unwrap(), expected);
    }
}
