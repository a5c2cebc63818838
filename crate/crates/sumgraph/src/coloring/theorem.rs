//! The constructive proper edge coloring of `G_{r,s}` with `|r| + s` colors,
//! and the coloring induced by the edge-sum classes.

use crate::edge_sum::EdgeSumPartition;
use crate::error::{Error, Result};
use crate::graph::{Edge, IntegralSumGraph};

use super::EdgeColoring;

/// Colors `G_{r,s}` (`s >= 2`, `r < 0`, `-r <= s`) with exactly `|r| + s`
/// colors by the seven assignment rules, writing `m = |r|` and `h = floor(m/2)`:
///
/// 1. `(0, j)   -> c_j`            for `1 <= j <= s`
/// 2. `(0, -i)  -> c_{i+s}`        for `1 <= i <= m`
/// 3. `(-i, j)  -> c_{i+j}`        for `1 <= i <= m`, `1 <= j <= s-1`
/// 4. `(-i, s)  -> c_{2i+s}`       for `1 <= i <= h`
/// 5. `(-i, s)  -> c_{i-h}`        for `h < i <= m`
/// 6. `(i, j)   -> c_{i+j+m}`      for positive pairs, `i < j`, `i+j <= s`
/// 7. `(-i, -j) -> c_{i+j+s}`      for negative pairs, `i < j`, `i+j <= m`
///
/// The rule domains partition the edge set; each edge is classified by the
/// signs of its endpoints and the result is asserted to cover every edge
/// exactly once.
pub fn theorem_coloring(r: i64, s: i64) -> Result<EdgeColoring> {
    if !(r < 0 && s >= 2) {
        return Err(Error::domain(format!(
            "constructive coloring needs r < 0 and s >= 2, got ({r}, {s})"
        )));
    }
    if -r > s {
        return Err(Error::IntervalConvention { r, s });
    }
    let g = IntegralSumGraph::interval(r, s)?;
    let m = -r;
    let half = m / 2;

    let mut coloring = EdgeColoring::new();
    for &edge in g.edges() {
        let (lo, hi) = (edge.lo(), edge.hi());
        let color = if lo == 0 {
            // (0, j), j positive
            hi as usize
        } else if hi == 0 {
            // (0, -i)
            (-lo + s) as usize
        } else if lo < 0 && hi > 0 {
            let i = -lo;
            let j = hi;
            if j < s {
                (i + j) as usize
            } else if i <= half {
                (2 * i + s) as usize
            } else {
                (i - half) as usize
            }
        } else if lo > 0 {
            // positive pair, adjacency gives lo + hi <= s
            (lo + hi + m) as usize
        } else {
            // negative pair, adjacency gives -(lo + hi) <= m
            (-lo - hi + s) as usize
        };
        coloring
            .assign(edge, color)
            .expect("each edge matches one rule");
    }

    assert_eq!(coloring.len(), g.size(), "a rule domain missed an edge");
    assert!(
        coloring.palette_size() <= (m + s) as usize,
        "rule emitted a color above |r| + s"
    );
    Ok(coloring)
}

/// Colors every edge by the rank of its edge sum among the non-empty
/// edge-sum classes (ascending, 1-based). Proper because each class is a
/// matching; the palette size is the edge sum chromatic number.
pub fn edge_sum_coloring(g: &IntegralSumGraph) -> EdgeColoring {
    let partition = EdgeSumPartition::of(g);
    let rank: std::collections::BTreeMap<i64, usize> = partition
        .non_empty()
        .enumerate()
        .map(|(k, (sum, _))| (sum, k + 1))
        .collect();
    g.edges()
        .iter()
        .map(|&e: &Edge| (e, rank[&e.sum()]))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify_coloring;

    fn edge(u: i64, v: i64) -> Edge {
        Edge::new(u, v).unwrap()
    }

    #[test]
    fn rules_on_g_minus1_5() {
        let c = theorem_coloring(-1, 5).unwrap();
        assert_eq!(c.color(&edge(-1, 5)).unwrap(), 1);
        assert_eq!(c.color(&edge(2, 3)).unwrap(), 6);
        assert_eq!(c.color(&edge(0, -1)).unwrap(), 6);
        assert_eq!(c.palette_size(), 6);
    }

    #[test]
    fn drawn_coloring_g_minus4_7_spot_checks() {
        let c = theorem_coloring(-4, 7).unwrap();
        assert_eq!(c.len(), 50);
        assert_eq!(c.palette_size(), 11);
        assert_eq!(c.color(&edge(-3, 7)).unwrap(), 1);
        assert_eq!(c.color(&edge(-4, 7)).unwrap(), 2);
        assert_eq!(c.color(&edge(-1, 7)).unwrap(), 9);
        assert_eq!(c.color(&edge(-3, -1)).unwrap(), 11);
    }

    #[test]
    fn drawn_coloring_g_minus5_7_uses_twelve_colors() {
        let c = theorem_coloring(-5, 7).unwrap();
        assert_eq!(c.palette_size(), 12);
        assert_eq!(c.color(&edge(-2, -3)).unwrap(), 12);
    }

    #[test]
    fn proper_across_the_small_range() {
        for s in 2..=8 {
            for r in -s..=-1 {
                let g = IntegralSumGraph::interval(r, s).unwrap();
                let c = theorem_coloring(r, s).unwrap();
                let report = verify_coloring(&g, &c).unwrap();
                assert!(report.is_valid(), "({r}, {s}): {}", report.summary());
                assert_eq!(c.palette_size(), (-r + s) as usize);
            }
        }
    }

    #[test]
    fn preconditions_enforced() {
        assert!(theorem_coloring(0, 5).is_err());
        assert!(theorem_coloring(-1, 1).is_err());
        assert!(theorem_coloring(-6, 5).is_err());
    }

    #[test]
    fn edge_sum_coloring_is_proper_with_chi_sum_palette() {
        let g = IntegralSumGraph::interval(-3, 3).unwrap();
        let c = edge_sum_coloring(&g);
        let report = verify_coloring(&g, &c).unwrap();
        assert!(report.is_valid());
        assert_eq!(c.palette_size(), 7);

        let empty = IntegralSumGraph::from_labels([9]).unwrap();
        assert_eq!(edge_sum_coloring(&empty).palette_size(), 0);
    }
}
