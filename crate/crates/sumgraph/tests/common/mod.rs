//! Brute-force oracles shared by the integration suites. Deliberately
//! independent of the library internals: plain pair scans over hash sets.
#![allow(dead_code)] // each test binary uses its own subset

use std::collections::BTreeSet;

/// All edges of `G+(S)` by definition: unordered pairs whose sum is a label.
pub fn oracle_edges(labels: &[i64]) -> BTreeSet<(i64, i64)> {
    let set: BTreeSet<i64> = labels.iter().copied().collect();
    let mut edges = BTreeSet::new();
    for &u in &set {
        for &v in &set {
            if u < v && set.contains(&(u + v)) {
                edges.insert((u, v));
            }
        }
    }
    edges
}

pub fn oracle_degree(labels: &[i64], v: i64) -> usize {
    oracle_edges(labels)
        .iter()
        .filter(|&&(a, b)| a == v || b == v)
        .count()
}

pub fn interval_labels(r: i64, s: i64) -> Vec<i64> {
    (r..=s).collect()
}

/// Count of distinct edge sums, the brute-force edge sum chromatic number.
pub fn oracle_class_count(labels: &[i64]) -> usize {
    oracle_edges(labels)
        .iter()
        .map(|&(u, v)| u + v)
        .collect::<BTreeSet<i64>>()
        .len()
}
