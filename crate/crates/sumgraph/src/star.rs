//! Integral sum labelings of star graphs: center 0 and leaf labels forming
//! the geometric progression `t(d+1)^(i-1)`. Labels are big integers since
//! the progression outgrows machine words quickly.

use num_bigint::BigInt;
use serde::Serialize;

use crate::coloring::{exact_chromatic_index, DEFAULT_EDGE_BUDGET};
use crate::edge_sum;
use crate::error::{Error, Result};
use crate::graph::IntegralSumGraph;

/// A star labeling: `labels[0] = 0` is the center, `labels[i] = t(d+1)^(i-1)`
/// the leaves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarLabeling {
    pub n: usize,
    pub t: u64,
    pub d: u64,
    pub labels: Vec<BigInt>,
}

/// Labels the star on `n` vertices from seed `t` and multiplier `d` via the
/// recurrence `f(v_{i+1}) = d * (f(v_1) + ... + f(v_i)) + t`, and checks the
/// run against the closed form `t(d+1)^(i-1)` before returning.
pub fn star_labels(n: usize, t: u64, d: u64) -> Result<StarLabeling> {
    if n < 2 {
        return Err(Error::domain(format!(
            "star needs n >= 2 vertices, got {n}"
        )));
    }
    if t < 1 || d < 1 {
        return Err(Error::domain(format!(
            "seed and multiplier must be positive, got t = {t}, d = {d}"
        )));
    }
    let mut labels = vec![BigInt::from(0), BigInt::from(t)];
    let mut leaf_sum = BigInt::from(t);
    for _ in 2..n {
        let next = BigInt::from(d) * &leaf_sum + t;
        leaf_sum += &next;
        labels.push(next);
    }
    // Closed form check: leaf i carries t(d+1)^(i-1).
    let ratio = BigInt::from(d + 1);
    let mut expected = BigInt::from(t);
    for (i, label) in labels.iter().enumerate().skip(1) {
        assert_eq!(
            label, &expected,
            "recurrence diverges from closed form at leaf {i}"
        );
        expected *= &ratio;
    }
    Ok(StarLabeling { n, t, d, labels })
}

/// Structural verification of a star labeling.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StarReport {
    pub labels_distinct: bool,
    pub strictly_increasing: bool,
    pub center_adjacent_to_all: bool,
    /// Leaf pairs whose label sum is again a label, each inducing an edge
    /// that a star must not have.
    pub leaf_leaf_edges: Vec<(String, String)>,
    pub is_star: bool,
}

/// Checks that the induced sum graph on `{labels}` is exactly the star
/// `K_{1,n-1}` centered at 0. Labels that fit machine integers go through
/// the ordinary graph constructor; larger ones fall back to big-integer pair
/// sums, which computes the same edge relation.
pub fn verify_star(sl: &StarLabeling) -> StarReport {
    let mut sorted = sl.labels.clone();
    sorted.sort();
    sorted.dedup();
    let labels_distinct = sorted.len() == sl.labels.len();
    let strictly_increasing = sl.labels.windows(2).all(|pair| pair[0] < pair[1]);

    let machine: Option<Vec<i64>> = sl
        .labels
        .iter()
        .map(|b| i64::try_from(b.clone()).ok())
        .collect();

    let (center_adjacent_to_all, leaf_leaf_edges) = match machine {
        Some(labels) if labels_distinct => {
            let g = IntegralSumGraph::from_labels(labels.iter().copied())
                .expect("distinct labels build");
            let center_ok = labels
                .iter()
                .filter(|&&v| v != 0)
                .all(|&v| g.has_edge(0, v));
            let leaf_leaf: Vec<(String, String)> = g
                .edges()
                .iter()
                .filter(|e| e.lo() != 0 && e.hi() != 0)
                .map(|e| (e.lo().to_string(), e.hi().to_string()))
                .collect();
            (center_ok, leaf_leaf)
        }
        _ => big_pair_scan(&sl.labels),
    };

    let is_star = labels_distinct
        && strictly_increasing
        && center_adjacent_to_all
        && leaf_leaf_edges.is_empty();
    StarReport {
        labels_distinct,
        strictly_increasing,
        center_adjacent_to_all,
        leaf_leaf_edges,
        is_star,
    }
}

/// Same edge relation computed directly on big integers.
fn big_pair_scan(labels: &[BigInt]) -> (bool, Vec<(String, String)>) {
    let set: std::collections::BTreeSet<&BigInt> = labels.iter().collect();
    let zero = BigInt::from(0);
    let mut center_ok = true;
    let mut leaf_leaf = Vec::new();
    for (i, u) in labels.iter().enumerate() {
        for v in &labels[i + 1..] {
            let sum = u + v;
            let is_edge = set.contains(&sum);
            if *u == zero || *v == zero {
                center_ok &= is_edge;
            } else if is_edge {
                let (lo, hi) = if u < v { (u, v) } else { (v, u) };
                leaf_leaf.push((lo.to_string(), hi.to_string()));
            }
        }
    }
    (center_ok, leaf_leaf)
}

/// `(chi', chi'_Z-sum)` of the star on `n` vertices: both are `n - 1` (every
/// edge-sum class is a singleton and all edges meet at the center).
pub fn star_chi_values(n: usize) -> Result<(usize, usize)> {
    if n < 2 {
        return Err(Error::domain(format!(
            "star needs n >= 2 vertices, got {n}"
        )));
    }
    Ok((n - 1, n - 1))
}

/// Oracle counterpart of [`star_chi_values`]: builds a labeled star and
/// measures both numbers on it. Used by the verification suite.
pub fn star_chi_oracle(n: usize) -> Result<(usize, usize)> {
    let sl = star_labels(n, 1, 1)?;
    let labels: Vec<i64> = sl
        .labels
        .iter()
        .map(|b| i64::try_from(b.clone()).map_err(|_| Error::Overflow(b.to_string())))
        .collect::<Result<_>>()?;
    let g = IntegralSumGraph::from_labels(labels)?;
    let chi = exact_chromatic_index(&g, DEFAULT_EDGE_BUDGET.max(g.size()))?.chi;
    Ok((chi, edge_sum::chromatic_number(&g)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels_as_i64(sl: &StarLabeling) -> Vec<i64> {
        sl.labels
            .iter()
            .map(|b| i64::try_from(b.clone()).unwrap())
            .collect()
    }

    #[test]
    fn recurrence_examples() {
        assert_eq!(
            labels_as_i64(&star_labels(4, 2, 1).unwrap()),
            vec![0, 2, 4, 8]
        );
        assert_eq!(labels_as_i64(&star_labels(2, 5, 3).unwrap()), vec![0, 5]);
        assert_eq!(
            labels_as_i64(&star_labels(5, 1, 2).unwrap()),
            vec![0, 1, 3, 9, 27]
        );
    }

    #[test]
    fn parameter_validation() {
        assert!(star_labels(1, 1, 1).is_err());
        assert!(star_labels(4, 0, 1).is_err());
        assert!(star_labels(4, 1, 0).is_err());
    }

    #[test]
    fn verified_stars() {
        let report = verify_star(&star_labels(4, 2, 1).unwrap());
        assert!(report.is_star);
        let report = verify_star(&star_labels(10, 1, 1).unwrap());
        assert!(report.is_star);
    }

    #[test]
    fn tampered_labels_fail() {
        // 2 + 4 = 6 creates a leaf-leaf edge.
        let sl = StarLabeling {
            n: 4,
            t: 2,
            d: 1,
            labels: vec![0, 2, 4, 6].into_iter().map(BigInt::from).collect(),
        };
        let report = verify_star(&sl);
        assert!(!report.is_star);
        assert_eq!(report.leaf_leaf_edges, vec![("2".into(), "4".into())]);
    }

    #[test]
    fn big_label_path_agrees() {
        // Large enough that labels overflow i64 and the BigInt scan runs.
        let sl = star_labels(40, 5, 5).unwrap();
        assert!(sl.labels.last().unwrap() > &BigInt::from(i64::MAX));
        assert!(verify_star(&sl).is_star);
    }

    #[test]
    fn chi_values_match_oracle() {
        for n in [2, 5, 10] {
            assert_eq!(star_chi_values(n).unwrap(), (n - 1, n - 1));
            assert_eq!(star_chi_oracle(n).unwrap(), (n - 1, n - 1));
        }
    }
}
