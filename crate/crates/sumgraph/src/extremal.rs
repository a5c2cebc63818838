//! Interval-family extremal checks: the shift embedding witnessing that
//! `G_{0,s}` is not sum-maximal, and the balanced interval maximizing the
//! edge count among all intervals of a given order.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::formulas::IntervalSpec;
use crate::graph::IntegralSumGraph;

/// An injective vertex map carrying every source edge to a target edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmbeddingWitness {
    pub source: IntervalSpec,
    pub target: IntervalSpec,
    pub vertex_map: BTreeMap<i64, i64>,
    /// Edges of the target beyond the embedded image.
    pub edge_margin: usize,
}

/// The shift `x -> x - 1` embedding `G_{0,s}` into `G_{-1,s-1}` (`s >= 2`),
/// checked edge by edge; the inclusion is proper, with the margin recording
/// how many target edges the image misses.
pub fn shift_embedding(s: i64) -> Result<EmbeddingWitness> {
    if s < 2 {
        return Err(Error::domain(format!(
            "shift embedding needs s >= 2, got {s}"
        )));
    }
    let source = IntegralSumGraph::interval(0, s)?;
    let target = IntegralSumGraph::interval(-1, s - 1)?;
    for e in source.edges() {
        if !target.has_edge(e.lo() - 1, e.hi() - 1) {
            return Err(Error::domain(format!(
                "edge {e} fails to map into the target under x -> x - 1"
            )));
        }
    }
    assert!(
        target.size() > source.size(),
        "inclusion must be proper: {} vs {}",
        target.size(),
        source.size()
    );
    Ok(EmbeddingWitness {
        source: IntervalSpec::new(0, s)?,
        target: IntervalSpec::new(-1, s - 1)?,
        vertex_map: source.labels().iter().map(|&x| (x, x - 1)).collect(),
        edge_margin: target.size() - source.size(),
    })
}

/// Edge-count comparison across all intervals of a fixed order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntervalMaximum {
    pub order: i64,
    pub best: IntervalSpec,
    pub best_edges: usize,
    /// Other intervals reaching the same count.
    pub ties: Vec<IntervalSpec>,
    /// Every admissible `(r, s)` with its brute-force edge count.
    pub table: Vec<(IntervalSpec, usize)>,
}

/// Finds the edge-maximal interval graph among all `G_{r,s}` with
/// `s - r = n >= 2` (so order `n + 1`), `r <= 0 <= s`, `r + s >= 0`. The
/// maximizer is asserted to be the balanced split `r = -floor(n/2)`.
pub fn interval_maximum(n: i64) -> Result<IntervalMaximum> {
    if n < 2 {
        return Err(Error::domain(format!(
            "interval comparison needs n >= 2, got {n}"
        )));
    }
    let mut table = Vec::new();
    // r + s = n + 2r >= 0 bounds r from below.
    let r_min = -(n / 2);
    for r in r_min..=0 {
        let s = n + r;
        let g = IntegralSumGraph::interval(r, s)?;
        table.push((IntervalSpec::new(r, s)?, g.size()));
    }
    let best_edges = table
        .iter()
        .map(|&(_, m)| m)
        .max()
        .expect("non-empty table");
    let balanced = IntervalSpec::new(-(n / 2), n - n / 2)?;
    let winners: Vec<IntervalSpec> = table
        .iter()
        .filter(|&&(_, m)| m == best_edges)
        .map(|&(spec, _)| spec)
        .collect();
    assert!(
        winners.contains(&balanced),
        "balanced interval ({}, {}) is not maximal at order {}",
        balanced.r,
        balanced.s,
        n + 1
    );
    let ties = winners.into_iter().filter(|&w| w != balanced).collect();
    Ok(IntervalMaximum {
        order: n + 1,
        best: balanced,
        best_edges,
        ties,
        table,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shift_embeds_g06_into_g_minus1_5() {
        let w = shift_embedding(6).unwrap();
        assert_eq!(w.vertex_map[&0], -1);
        assert_eq!(w.vertex_map[&6], 5);
        // 12 source edges, 15 target edges.
        assert_eq!(w.edge_margin, 3);
    }

    #[test]
    fn shift_small_and_large() {
        let w = shift_embedding(2).unwrap();
        assert_eq!(w.edge_margin, 1); // 2 edges into the triangle
        let w = shift_embedding(9).unwrap();
        assert!(w.edge_margin > 0);
        assert!(shift_embedding(1).is_err());
    }

    #[test]
    fn balanced_interval_wins() {
        let m = interval_maximum(6).unwrap();
        assert_eq!(m.best, IntervalSpec::new(-3, 3).unwrap());
        assert_eq!(m.best_edges, 17);

        let m = interval_maximum(2).unwrap();
        assert_eq!(m.best, IntervalSpec::new(-1, 1).unwrap());
        assert_eq!(m.best_edges, 3);

        let m = interval_maximum(7).unwrap();
        assert_eq!(m.best, IntervalSpec::new(-3, 4).unwrap());
    }

    #[test]
    fn table_lists_all_admissible_intervals() {
        let m = interval_maximum(7).unwrap();
        let specs: Vec<(i64, i64)> = m.table.iter().map(|(sp, _)| (sp.r, sp.s)).collect();
        assert_eq!(specs, vec![(-3, 4), (-2, 5), (-1, 6), (0, 7)]);
    }

    #[test]
    fn even_orders_tie_with_the_adjacent_split() {
        let m = interval_maximum(4).unwrap();
        assert_eq!(m.best, IntervalSpec::new(-2, 2).unwrap());
        assert_eq!(m.ties, vec![IntervalSpec::new(-1, 3).unwrap()]);
    }
}
