use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use resgraph::block::{
    block_kirchhoff, block_laplacian, block_pinv, block_resistance, kirchhoff_from_pinv,
    lr_identity_residual, parse_mwg, parse_rblk, reconstruct_tree, resistance_from_one_inverse,
    resistance_structured, tau, tau_sum_residual, to_rblk, tree_one_inverse, BlockMatrix, MwGraph,
};
use resgraph::corpus::{self, random_mw_graphs, random_mw_trees, standard_corpus};
use resgraph::linalg::{sym_eigen, Matrix};
use resgraph::resistance::{kirchhoff_index, resistance_matrix, ResistanceMethod};
use resgraph::Error;

fn weighted() -> Vec<MwGraph> {
    random_mw_graphs(11, 60, 6)
}

fn random_dense(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    Matrix::from_fn(n, n, |_, _| rng.gen_range(-3.0..3.0))
}

#[test]
fn laplacian_times_pinv_is_the_projector() {
    for g in weighted() {
        let (n, k) = (g.n(), g.k());
        let l = block_laplacian(&g);
        let p = block_pinv(&g).unwrap();
        let proj = BlockMatrix::identity(n, k)
            .sub(&BlockMatrix::ones_kron_identity(n, k).scale(1.0 / n as f64))
            .unwrap();
        assert!(l.mul(&p.lplus).unwrap().max_abs_diff(&proj) < 1e-8);
        for s in p.x.block_column_sums() {
            assert!(s.max_abs_diff(&Matrix::identity(k)) < 1e-9);
        }
    }
}

#[test]
fn laplacian_null_space_has_dimension_k() {
    for g in weighted() {
        let e = sym_eigen(block_laplacian(&g).as_matrix()).unwrap();
        let tol = 1e-9 * e.values[0].abs().max(1.0);
        let zeros = e.values.iter().filter(|v| v.abs() <= tol).count();
        assert_eq!(zeros, g.k());
        assert!(e.values.iter().all(|&v| v > -tol));
    }
}

#[test]
fn resistance_identities() {
    for g in weighted() {
        let k = g.k();
        assert!(lr_identity_residual(&g).unwrap() < 1e-7);
        assert!(tau_sum_residual(&tau(&g).unwrap(), k) < 1e-7);
        let p = block_pinv(&g).unwrap();
        let kf = block_kirchhoff(&g).unwrap();
        assert!(kf.max_abs_diff(&kirchhoff_from_pinv(&p.lplus)) < 1e-8);
        let r = block_resistance(&g).unwrap();
        assert!(r.max_abs_diff(&resistance_structured(&p.x).unwrap()) < 1e-9);
        assert!(r.max_abs_diff(&resistance_from_one_inverse(&p.lplus)) < 1e-9);
    }
}

#[test]
fn resistance_does_not_depend_on_the_one_inverse() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for g in weighted() {
        let m = g.n() * g.k();
        let l = block_laplacian(&g).into_matrix();
        let lp = block_pinv(&g).unwrap().lplus.into_matrix();
        let id = Matrix::identity(m);
        let left = &id - &(&lp * &l);
        let right = &id - &(&l * &lp);
        let y = random_dense(&mut rng, m);
        let z = random_dense(&mut rng, m);
        let g1 = &(&lp + &(&left * &y)) + &(&z * &right);
        assert!(
            (&(&l * &g1) * &l).max_abs_diff(&l) < 1e-8,
            "not a (1)-inverse"
        );
        let g1 = BlockMatrix::from_matrix(g1, g.n(), g.k()).unwrap();
        let want = block_resistance(&g).unwrap();
        assert!(resistance_from_one_inverse(&g1).max_abs_diff(&want) < 1e-7);
    }
}

#[test]
fn trees_add_weights_along_paths() {
    for t in random_mw_trees(17, 40, 8, 3) {
        let r = block_resistance(&t).unwrap();
        let g1 = tree_one_inverse(&t).unwrap();
        assert!(resistance_from_one_inverse(&g1).max_abs_diff(&r) < 1e-8);
        let n = t.n();
        for i in 0..n {
            for j in 0..n {
                let mut sum = Matrix::zeros(t.k(), t.k());
                for (a, b) in path_edges(&t, i, j) {
                    sum = &sum + t.weight(a, b).unwrap().matrix();
                }
                assert!(r.block(i, j).max_abs_diff(&sum) < 1e-8 * sum.max_abs().max(1.0));
            }
        }
    }
}

fn path_edges(t: &MwGraph, from: usize, to: usize) -> Vec<(usize, usize)> {
    let g = t.graph();
    let mut parent = vec![usize::MAX; g.n()];
    parent[from] = from;
    let mut stack = vec![from];
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if parent[w] == usize::MAX {
                parent[w] = v;
                stack.push(w);
            }
        }
    }
    let mut out = Vec::new();
    let mut v = to;
    while v != from {
        out.push((v, parent[v]));
        v = parent[v];
    }
    out
}

#[test]
fn reconstruction_round_trip() {
    for t in random_mw_trees(23, 60, 8, 3) {
        let r = block_resistance(&t).unwrap();
        let back = reconstruct_tree(&r).unwrap();
        assert_eq!(back.graph().edges(), t.graph().edges());
        for ((_, a), (_, b)) in t.weighted_edges().zip(back.weighted_edges()) {
            assert!(a.matrix().max_abs_diff(b.matrix()) <= 1e-6 * a.matrix().max_abs());
        }
    }
}

#[test]
fn rblk_text_round_trip() {
    for t in random_mw_trees(29, 20, 8, 3) {
        let r = block_resistance(&t).unwrap();
        let back = parse_rblk(&to_rblk(&r)).unwrap();
        assert!(back.max_abs_diff(&r) <= 1e-8 * r.as_matrix().max_abs());
    }
}

#[test]
fn reconstruction_rejects_cyclic_resistance() {
    let g = MwGraph::lift(&corpus::cycle(4), 2).unwrap();
    assert!(matches!(
        reconstruct_tree(&block_resistance(&g).unwrap()),
        Err(Error::NotTree | Error::InvalidResistance(_) | Error::NotPositiveDefinite(..))
    ));
}

#[test]
fn unit_weights_reduce_to_the_scalar_case() {
    for (name, g) in standard_corpus() {
        let r = resistance_matrix(&g, ResistanceMethod::Eigen).unwrap();
        let kf = kirchhoff_index(&g).unwrap();
        for k in [1, 2] {
            let w = MwGraph::lift(&g, k).unwrap();
            let want = r.matrix().kron(&Matrix::identity(k));
            let got = block_resistance(&w).unwrap();
            assert!(got.as_matrix().max_abs_diff(&want) < 1e-9, "{name} k={k}");
            let kfb = block_kirchhoff(&w).unwrap();
            assert!(
                kfb.max_abs_diff(&Matrix::identity(k).scale(kf)) < 1e-9,
                "{name}"
            );
        }
    }
}

#[test]
fn weighted_path_from_text() {
    let g = parse_mwg("3 2 1\n1 2\n2\n2 3\n5\n").unwrap();
    let r = block_resistance(&g).unwrap();
    assert!((r.block(0, 2)[(0, 0)] - 7.0).abs() < 1e-12);
    let g1 = tree_one_inverse(&g).unwrap();
    let want = Matrix::from_rows(&[[7.0, 5.0, 0.0], [5.0, 5.0, 0.0], [0.0, 0.0, 0.0]]);
    assert!(g1.as_matrix().max_abs_diff(&want) < 1e-12);
    assert_eq!(
        reconstruct_tree(&r).unwrap().to_mwg(),
        "3 2 1\n1 2\n2\n2 3\n5\n"
    );
}
