use resgraph::corpus::{self, standard_corpus};
use resgraph::forests::{
    enumerate_forests, forest_identities, round_count, spanning_tree_count, two_forest_count,
    two_forest_matrix, ForestCountMethod, TreeCountMethod, ENUMERATION_EDGE_CAP,
};
use resgraph::Error;

#[test]
fn determinants_match_enumeration() {
    let mut checked = 0;
    for (name, g) in standard_corpus() {
        if g.edge_count() > ENUMERATION_EDGE_CAP {
            continue;
        }
        checked += 1;
        let e = enumerate_forests(&g).unwrap();
        for m in [TreeCountMethod::Det, TreeCountMethod::Eigen] {
            assert_eq!(spanning_tree_count(&g, m).unwrap(), e.trees, "{name} {m:?}");
        }
        assert_eq!(
            two_forest_matrix(&g, ForestCountMethod::Det).unwrap(),
            e.separating,
            "{name}"
        );
    }
    assert!(checked > 200);
}

#[test]
fn forest_identities_hold() {
    for (name, g) in standard_corpus() {
        let r = forest_identities(&g).unwrap();
        assert!(
            r.max_residual() <= 1e-6 * r.trees as f64,
            "{name}: {}",
            r.max_residual()
        );
    }
}

#[test]
fn concrete_counts() {
    assert_eq!(
        spanning_tree_count(&corpus::complete(4), TreeCountMethod::Det).unwrap(),
        16
    );
    let c4 = corpus::cycle(4);
    assert_eq!(
        two_forest_count(&c4, 0, 2, ForestCountMethod::Det).unwrap(),
        4
    );
    assert_eq!(
        two_forest_count(&c4, 0, 2, ForestCountMethod::Enumerate).unwrap(),
        4
    );
    assert_eq!(
        two_forest_count(&c4, 0, 1, ForestCountMethod::Det).unwrap(),
        3
    );
    assert_eq!(
        spanning_tree_count(&corpus::petersen(), TreeCountMethod::Enumerate).unwrap(),
        2000
    );
    for n in 2..=6 {
        let cayley = (n as u64).pow(n as u32 - 2);
        assert_eq!(
            spanning_tree_count(&corpus::complete(n), TreeCountMethod::Eigen).unwrap(),
            cayley
        );
    }
}

#[test]
fn distinct_two_forests() {
    // P3 has two 2-forests; C4 has six
    assert_eq!(enumerate_forests(&corpus::path(3)).unwrap().two_forests, 2);
    assert_eq!(enumerate_forests(&corpus::cycle(4)).unwrap().two_forests, 6);
}

#[test]
fn enumeration_cap_and_rounding() {
    let k8 = corpus::complete(8);
    assert!(matches!(
        enumerate_forests(&k8),
        Err(Error::EnumerationCap { edges: 28, cap: 25 })
    ));
    assert_eq!(round_count(15.9999999999).unwrap(), 16);
    assert!(matches!(round_count(2.5), Err(Error::NotInteger(_))));
    assert!(round_count(-1.0).is_err());
}
