use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use resgraph::corpus::{random_connected, random_pd};
use resgraph::laplacian;
use resgraph::linalg::{
    adjugate, determinant, inverse, moore_penrose, penrose_residual, principal_minor, sym_eigen,
    Matrix, PinvMethod,
};

fn random_symmetric(seed: u64, n: usize) -> Matrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = Matrix::from_fn(n, n, |_, _| rng.gen_range(-2.0..2.0));
    (&a + &a.transpose()).scale(0.5)
}

/// Elementary symmetric polynomial `e_s` of `xs`.
fn elementary(xs: &[f64], s: usize) -> f64 {
    let mut e = vec![0.0; s + 1];
    e[0] = 1.0;
    for &x in xs {
        for k in (1..=s).rev() {
            e[k] += e[k - 1] * x;
        }
    }
    e[s]
}

/// Sum of the principal minors of order `s`, by explicit subset enumeration.
fn principal_minor_sum(m: &Matrix, s: usize) -> f64 {
    let n = m.rows();
    (0u32..1 << n)
        .filter(|mask| mask.count_ones() as usize == n - s)
        .map(|mask| {
            let removed: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            principal_minor(m, &removed).unwrap()
        })
        .sum()
}

proptest! {
    #[test]
    fn eigenpairs_have_small_residual(seed in any::<u64>(), n in 1usize..=7) {
        let m = random_symmetric(seed, n);
        let e = sym_eigen(&m).unwrap();
        let scale = m.frobenius_norm().max(1.0);
        prop_assert!(e.residual(&m) <= 1e-9 * scale);
        prop_assert!(e.values.windows(2).all(|w| w[0] >= w[1]));
        let vtv = &e.vectors.transpose() * &e.vectors;
        prop_assert!(vtv.max_abs_diff(&Matrix::identity(n)) < 1e-10);
    }

    #[test]
    fn principal_minor_sums_are_elementary_polynomials(seed in any::<u64>(), n in 1usize..=6) {
        let m = random_symmetric(seed, n);
        let lambda = sym_eigen(&m).unwrap().values;
        for s in [1, n - 1, n] {
            if s == 0 { continue; }
            let lhs = principal_minor_sum(&m, s);
            let rhs = elementary(&lambda, s);
            prop_assert!((lhs - rhs).abs() <= 1e-8 * rhs.abs().max(1.0), "s={} {} vs {}", s, lhs, rhs);
        }
    }

    #[test]
    fn pseudoinverse_of_rank_deficient_matrix(seed in any::<u64>(), n in 2usize..=6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let q = sym_eigen(&random_symmetric(seed ^ 1, n)).unwrap().vectors;
        let rank = rng.gen_range(1..n);
        let lambda: Vec<f64> = (0..n)
            .map(|i| if i < rank { rng.gen_range(0.5..3.0) * if rng.gen_bool(0.5) { 1.0 } else { -1.0 } } else { 0.0 })
            .collect();
        let m = (&(&q * &Matrix::diagonal(&lambda)) * &q.transpose()).symmetrized();
        let p = moore_penrose(&m, PinvMethod::Eigen).unwrap();
        prop_assert!(penrose_residual(&m, &p) < 1e-8);
    }

    #[test]
    fn both_pinv_routes_agree_on_laplacians(seed in any::<u64>(), n in 1usize..=8, p in 0.0f64..1.0) {
        let g = random_connected(&mut ChaCha8Rng::seed_from_u64(seed), n, p);
        let l = laplacian(&g);
        let a = moore_penrose(&l, PinvMethod::Eigen).unwrap();
        let b = moore_penrose(&l, PinvMethod::Shift).unwrap();
        prop_assert!(a.max_abs_diff(&b) < 1e-8);
        prop_assert!(penrose_residual(&l, &b) < 1e-8);
    }

    #[test]
    fn shifted_laplacian_spectrum(seed in any::<u64>(), n in 2usize..=7, a in 0.1f64..3.0) {
        // L + aJ keeps the nonzero spectrum of L and moves 0 to a·n
        let g = random_connected(&mut ChaCha8Rng::seed_from_u64(seed), n, 0.4);
        let l = laplacian(&g);
        let shifted = &l + &Matrix::ones(n).scale(a);
        let mut want = sym_eigen(&l).unwrap().values;
        *want.last_mut().unwrap() = a * n as f64;
        want.sort_by(|x, y| y.total_cmp(x));
        let got = sym_eigen(&shifted).unwrap().values;
        for (x, y) in got.iter().zip(&want) {
            prop_assert!((x - y).abs() < 1e-9);
        }
    }

    #[test]
    fn inverses_and_adjugates(seed in any::<u64>(), k in 1usize..=5) {
        let w = random_pd(&mut ChaCha8Rng::seed_from_u64(seed), k, 0.1, 10.0);
        let inv = inverse(&w).unwrap();
        prop_assert!((&w * &inv).max_abs_diff(&Matrix::identity(k)) < 1e-9);
        let adj = adjugate(&w).unwrap();
        let det = determinant(&w).unwrap();
        prop_assert!((&w * &adj).max_abs_diff(&Matrix::identity(k).scale(det)) < 1e-8 * det.abs().max(1.0));
    }
}

#[test]
fn singular_inverse_is_an_error() {
    let m = Matrix::from_rows(&[[1.0, 2.0], [2.0, 4.0]]);
    assert!(inverse(&m).is_err());
    assert_eq!(determinant(&m).unwrap(), 0.0);
}
