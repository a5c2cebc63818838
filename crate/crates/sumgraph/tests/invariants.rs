//! Property tests for the structural claims: partition and matching
//! properties of edge-sum classes, negation symmetry, join decomposition,
//! and the Vizing sandwich on the exact solver.

mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;

use sumgraph::coloring::{edge_sum_coloring, exact_chromatic_index, verify_coloring};
use sumgraph::edge_sum::EdgeSumPartition;
use sumgraph::graph::IntegralSumGraph;

fn label_sets() -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::btree_set(-20i64..=20, 2..=12).prop_map(|s| s.into_iter().collect())
}

proptest! {
    #[test]
    fn edges_match_the_oracle(labels in label_sets()) {
        let g = IntegralSumGraph::from_labels(labels.iter().copied()).unwrap();
        let got: BTreeSet<(i64, i64)> = g.edges().iter().map(|e| (e.lo(), e.hi())).collect();
        prop_assert_eq!(got, common::oracle_edges(&labels));
    }

    #[test]
    fn construction_ignores_input_order(labels in label_sets().prop_shuffle()) {
        let shuffled = IntegralSumGraph::from_labels(labels.iter().copied()).unwrap();
        let mut sorted = labels.clone();
        sorted.sort_unstable();
        let canonical = IntegralSumGraph::from_labels(sorted).unwrap();
        prop_assert_eq!(shuffled.to_json(), canonical.to_json());
    }

    #[test]
    fn classes_partition_the_edge_set(labels in label_sets()) {
        let g = IntegralSumGraph::from_labels(labels.iter().copied()).unwrap();
        let p = EdgeSumPartition::of(&g);
        let mut seen = BTreeSet::new();
        for (sum, class) in p.non_empty() {
            for (k, e) in class.iter().enumerate() {
                prop_assert_eq!(e.sum(), sum);
                prop_assert!(seen.insert(*e), "edge {} in two classes", e);
                for other in &class[k + 1..] {
                    prop_assert!(!e.adjacent(other), "class {} not a matching", sum);
                }
            }
        }
        prop_assert_eq!(seen.len(), g.size());
        prop_assert!(p.chromatic_number() <= g.order());
        // Distinct non-empty classes have distinct sum keys by construction;
        // saturation is exactly "count reaches the order".
        prop_assert_eq!(p.is_saturated(), p.chromatic_number() == g.order());
    }

    #[test]
    fn negating_labels_mirrors_the_graph(labels in label_sets()) {
        let g = IntegralSumGraph::from_labels(labels.iter().copied()).unwrap();
        let neg = IntegralSumGraph::from_labels(labels.iter().map(|&x| -x)).unwrap();
        let mirrored: BTreeSet<(i64, i64)> = g
            .edges()
            .iter()
            .map(|e| ((-e.hi()).min(-e.lo()), (-e.hi()).max(-e.lo())))
            .collect();
        let got: BTreeSet<(i64, i64)> = neg.edges().iter().map(|e| (e.lo(), e.hi())).collect();
        prop_assert_eq!(got, mirrored);
    }

    #[test]
    fn edge_sum_coloring_is_always_proper(labels in label_sets()) {
        let g = IntegralSumGraph::from_labels(labels.iter().copied()).unwrap();
        let coloring = edge_sum_coloring(&g);
        let report = verify_coloring(&g, &coloring).unwrap();
        prop_assert!(report.is_valid());
        prop_assert_eq!(coloring.palette_size(), EdgeSumPartition::of(&g).chromatic_number());
    }

    #[test]
    fn join_decomposition_matches_direct_construction(
        s in 1i64..=12,
        offset in 0i64..=11,
    ) {
        let r = -(offset % s + 1);
        let join = IntegralSumGraph::join_interval(r, s).unwrap();
        let interval = IntegralSumGraph::interval(r, s).unwrap();
        prop_assert_eq!(join, interval);
    }

    #[test]
    fn exact_solver_stays_inside_the_vizing_sandwich(
        labels in proptest::collection::btree_set(-8i64..=8, 2..=7)
            .prop_map(|s| s.into_iter().collect::<Vec<_>>())
    ) {
        let g = IntegralSumGraph::from_labels(labels.iter().copied()).unwrap();
        prop_assume!(g.size() <= 20);
        let result = exact_chromatic_index(&g, 40).unwrap();
        let delta = g.max_degree();
        prop_assert!(result.chi == delta || result.chi == delta + 1);
        if let Some(witness) = &result.witness {
            prop_assert_eq!(result.chi, delta);
            let report = verify_coloring(&g, witness).unwrap();
            prop_assert!(report.is_valid());
            prop_assert!(witness.palette_size() <= delta.max(1));
        }
    }
}
