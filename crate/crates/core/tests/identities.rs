//! The auxiliary identities checked against the oracle on every fan class
//! with at most 10 vertices.

use fanideal_core::fan::canonical_fans;
use fanideal_core::formulas::{
    clique_sum_reg_drop, complete_invariants, leaf_removal_depth_identity, path_invariants,
    FormulaError,
};
use fanideal_core::oracle::graph_invariants;
use fanideal_core::{FanGraphSpec, Field, SimpleGraph};

fn depth_reg(g: &SimpleGraph) -> (usize, usize) {
    let o = graph_invariants(g, Field::Gf2).unwrap();
    (o.depth, o.reg)
}

#[test]
fn complete_and_path_base_cases() {
    for n in 2..=8 {
        assert_eq!(
            complete_invariants(n).unwrap(),
            depth_reg(&SimpleGraph::complete(n)),
            "K_{n}"
        );
    }
    for n in 2..=12 {
        assert_eq!(
            path_invariants(n).unwrap(),
            depth_reg(&SimpleGraph::path(n)),
            "P_{n}"
        );
    }
}

#[test]
fn leaf_removal_keeps_depth() {
    let (mut predicted, mut withheld) = (0, 0);
    for spec in canonical_fans(10) {
        let g = spec.realize().graph;
        for site in spec.leaf_catalog() {
            match leaf_removal_depth_identity(&spec, site.leaf) {
                Ok(depth) => {
                    predicted += 1;
                    let without = g.remove_vertex(site.leaf).unwrap();
                    assert_eq!(depth_reg(&without).0, depth, "{spec:?} minus {}", site.leaf);
                    assert_eq!(depth_reg(&g).0, depth);
                }
                Err(FormulaError::HypothesisNotMet { t_max, t_prime }) => {
                    withheld += 1;
                    assert_ne!(t_prime + 1, t_max);
                }
                Err(e) => panic!("{e}"),
            }
        }
    }
    assert!(
        predicted > 100 && withheld > 100,
        "{predicted} predicted, {withheld} withheld"
    );
}

#[test]
fn leaf_removal_example() {
    let spec = FanGraphSpec::new(3, vec![(vec![1, 2], vec![2, 3])]).unwrap();
    let g = spec.realize().graph;
    let leaf = spec.leaf_catalog()[0].leaf;
    let depth = leaf_removal_depth_identity(&spec, leaf).unwrap();
    assert_eq!(depth_reg(&g.remove_vertex(leaf).unwrap()).0, depth);
}

/// `G = fan ∪_v P_2` is the fan with an extra block `({v}, [2])`.
#[test]
fn clique_sum_regularity_drop() {
    let mut checked = [0usize; 2];
    for spec in canonical_fans(9) {
        let w = spec.w();
        for v in (1..=spec.n()).filter(|v| !w.contains(v)) {
            let mut blocks: Vec<_> = spec
                .blocks()
                .iter()
                .map(|b| (b.vertices().to_vec(), b.branch_sizes().to_vec()))
                .collect();
            blocks.push((vec![v], vec![2]));
            let g = FanGraphSpec::new(spec.n(), blocks).unwrap().realize().graph;
            let s = clique_sum_reg_drop(&spec, v).unwrap();
            let before = depth_reg(&g).1;
            let after = depth_reg(&g.remove_vertex(v).unwrap()).1;
            assert_eq!(after + s, before, "{spec:?} at {v}");
            checked[s] += 1;
        }
    }
    assert!(checked[0] > 50 && checked[1] > 10, "{checked:?}");
}
