use std::collections::BTreeSet;

use fanideal_core::fan::canonical_fans;
use fanideal_core::oracle::{
    betti_table_hochster, betti_table_taylor, decompose_at_vertex, graph_invariants,
    oracle_invariants, reduced_homology_ranks, SimplicialComplex,
};
use fanideal_core::{Field, Monomial, SimpleGraph, SquarefreeMonomialIdeal, Vertex};
use proptest::prelude::*;

fn arb_graph(max_vertices: u32) -> impl Strategy<Value = SimpleGraph> {
    (1..=max_vertices).prop_flat_map(|n| {
        let pairs: Vec<(Vertex, Vertex)> = (1..=n)
            .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
            .collect();
        let len = pairs.len();
        proptest::collection::vec(any::<bool>(), len).prop_map(move |keep| {
            let edges = pairs
                .iter()
                .zip(&keep)
                .filter(|(_, k)| **k)
                .map(|(e, _)| *e);
            SimpleGraph::from_edges(1..=n, edges).unwrap()
        })
    })
}

fn arb_ideal(max_vars: u32, max_gens: usize) -> impl Strategy<Value = SquarefreeMonomialIdeal> {
    (1..=max_vars).prop_flat_map(move |n| {
        proptest::collection::vec(1u32..(1 << n), 0..=max_gens).prop_map(move |masks| {
            let gens = masks
                .into_iter()
                .map(|m| Monomial::new((0..n).filter(|i| m >> i & 1 == 1).map(|i| i + 1)));
            SquarefreeMonomialIdeal::new(1..=n, gens).unwrap()
        })
    })
}

fn depth_reg(g: &SimpleGraph) -> (usize, usize) {
    let o = graph_invariants(g, Field::Gf2).unwrap();
    (o.depth, o.reg)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn hochster_agrees_with_taylor(ideal in arb_ideal(8, 9)) {
        for field in [Field::Gf2, Field::Rationals] {
            prop_assert_eq!(
                betti_table_hochster(&ideal, field).unwrap(),
                betti_table_taylor(&ideal, field).unwrap()
            );
        }
    }

    #[test]
    fn hochster_agrees_with_taylor_on_edge_ideals(g in arb_graph(8)) {
        let ideal = SquarefreeMonomialIdeal::edge_ideal(&g);
        prop_assume!(ideal.generator_count() <= 12);
        prop_assert_eq!(
            betti_table_hochster(&ideal, Field::Gf2).unwrap(),
            betti_table_taylor(&ideal, Field::Gf2).unwrap()
        );
    }

    #[test]
    fn betti_table_basic_shape(ideal in arb_ideal(7, 8)) {
        let t = betti_table_hochster(&ideal, Field::Gf2).unwrap();
        prop_assert_eq!(t.get(0, 0), 1);
        prop_assert_eq!(t.entries().filter(|((i, _), _)| *i == 0).count(), 1);
        let linear: u64 = ideal.generators().count() as u64;
        let first: u64 = t.entries().filter(|((i, _), _)| *i == 1).map(|(_, b)| b).sum();
        prop_assert_eq!(first, linear);
        prop_assert!(t.projective_dimension() <= ideal.variable_count());
        // Nonzero β_{i,j} only in degrees j between i and the lcm degree.
        for ((i, j), _) in t.entries() {
            prop_assert!(j >= i && j <= ideal.variable_count());
        }
    }

    /// The alternating sum of reduced Betti numbers equals the reduced
    /// Euler characteristic from the face counts.
    #[test]
    fn homology_respects_euler_characteristic(ideal in arb_ideal(7, 6)) {
        let c = fanideal_core::oracle::stanley_reisner_complex(&ideal).unwrap();
        let mut faces = BTreeSet::new();
        for f in c.facets() {
            let f: Vec<Vertex> = f.to_vec();
            for m in 0u32..1 << f.len() {
                faces.insert((0..f.len()).filter(|i| m >> i & 1 == 1).map(|i| f[i]).collect::<Vec<_>>());
            }
        }
        let chi: i64 = faces.iter().map(|f| if f.len() % 2 == 1 { 1 } else { -1 }).sum();
        for field in [Field::Gf2, Field::Rationals, Field::Prime(3)] {
            let h = reduced_homology_ranks(&c, field).unwrap();
            let alt: i64 = h.iter().map(|(&d, &r)| if d % 2 == 0 { r as i64 } else { -(r as i64) }).sum();
            prop_assert_eq!(alt, chi);
        }
    }

    #[test]
    fn dimension_routes_agree(ideal in arb_ideal(9, 8)) {
        let o = oracle_invariants(&ideal, Field::Gf2).unwrap();
        prop_assert_eq!(o.dim, ideal.variable_count() - ideal.min_transversal_size());
        prop_assert!(o.depth <= o.dim);
    }

    #[test]
    fn disjoint_union_is_additive(g1 in arb_graph(6), g2 in arb_graph(6)) {
        let (u, _) = g1.disjoint_union(&g2);
        let (a, b, c) = (depth_reg(&g1), depth_reg(&g2), depth_reg(&u));
        prop_assert_eq!(c, (a.0 + b.0, a.1 + b.1));
    }

    #[test]
    fn chordal_regularity_is_induced_matching(g in arb_graph(9)) {
        if g.is_chordal() {
            prop_assert_eq!(depth_reg(&g).1, g.induced_matching_number());
        } else {
            prop_assert!(depth_reg(&g).1 >= g.induced_matching_number());
        }
    }

    #[test]
    fn regularity_is_monotone_on_induced_subgraphs(g in arb_graph(8), keep in any::<u8>()) {
        let subset: BTreeSet<Vertex> = g.vertices().filter(|v| keep >> (v - 1) & 1 == 1).collect();
        let h = g.induced_subgraph(&subset).unwrap();
        prop_assert!(depth_reg(&h).1 <= depth_reg(&g).1);
    }

    #[test]
    fn decomposition_contracts(g in arb_graph(8)) {
        let ideal = SquarefreeMonomialIdeal::edge_ideal(&g);
        for v in g.vertices() {
            let d = decompose_at_vertex(&g, v).unwrap();
            prop_assert_eq!(&d.j.intersect(&d.k).unwrap(), &ideal);
            let sum = d.j.sum(&d.k).unwrap();
            prop_assert_eq!(&sum, &d.expected_sum);
            let j = oracle_invariants(&d.j, Field::Gf2).unwrap();
            let s = oracle_invariants(&sum, Field::Gf2).unwrap();
            prop_assert_eq!(j.depth, s.depth + 1);
            prop_assert_eq!(j.reg, s.reg);
        }
    }
}

#[test]
fn fields_agree_on_fan_classes() {
    for spec in canonical_fans(9) {
        let ideal = SquarefreeMonomialIdeal::edge_ideal(&spec.realize().graph);
        let f2 = betti_table_hochster(&ideal, Field::Gf2).unwrap();
        assert_eq!(
            f2,
            betti_table_hochster(&ideal, Field::Rationals).unwrap(),
            "{spec:?}"
        );
    }
}

#[test]
fn fans_are_chordal() {
    for spec in canonical_fans(11) {
        assert!(spec.realize().graph.is_chordal(), "{spec:?}");
    }
}

#[test]
fn void_and_irrelevant_complexes_differ() {
    let irrelevant =
        reduced_homology_ranks(&SimplicialComplex::irrelevant([1]), Field::Gf2).unwrap();
    let void = reduced_homology_ranks(&SimplicialComplex::void([1]), Field::Gf2).unwrap();
    assert_eq!(irrelevant.into_iter().collect::<Vec<_>>(), vec![(-1, 1)]);
    assert!(void.is_empty());
}
