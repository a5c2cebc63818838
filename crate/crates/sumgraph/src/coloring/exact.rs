//! Exact chromatic index by deterministic backtracking: edges in canonical
//! order, colors tried ascending. Either a proper `Delta`-coloring exists or
//! the answer is `Delta + 1` by Vizing's bound, so one search decides.

use crate::error::{Error, Result};
use crate::graph::IntegralSumGraph;

use super::{ColorCertificate, EdgeColoring};

/// Edge-count guard for the exhaustive solver; callers can raise it.
pub const DEFAULT_EDGE_BUDGET: usize = 40;

/// Exact chromatic index together with the witness coloring when the graph
/// turned out to be class 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChromaticIndex {
    pub chi: usize,
    pub delta: usize,
    pub witness: Option<EdgeColoring>,
}

/// Computes `chi'(g)` exactly. Searches for a proper `Delta(g)`-edge-coloring
/// by backtracking; on success the witness is returned, on exhaustive failure
/// the index is `Delta + 1`.
pub fn exact_chromatic_index(g: &IntegralSumGraph, budget: usize) -> Result<ChromaticIndex> {
    if g.size() > budget {
        return Err(Error::BudgetExceeded {
            edges: g.size(),
            budget,
        });
    }
    let delta = g.max_degree();
    if delta == 0 {
        return Ok(ChromaticIndex {
            chi: 0,
            delta: 0,
            witness: Some(EdgeColoring::new()),
        });
    }
    match try_k_coloring(g, delta)? {
        Some(witness) => Ok(ChromaticIndex {
            chi: delta,
            delta,
            witness: Some(witness),
        }),
        None => Ok(ChromaticIndex {
            chi: delta + 1,
            delta,
            witness: None,
        }),
    }
}

/// Searches for a proper `k`-edge-coloring and packages it as a certificate
/// with exactly `k` classes. `None` means the exhaustive search ruled one out.
pub fn search_certificate(
    g: &IntegralSumGraph,
    k: usize,
    budget: usize,
) -> Result<Option<ColorCertificate>> {
    if g.size() > budget {
        return Err(Error::BudgetExceeded {
            edges: g.size(),
            budget,
        });
    }
    Ok(try_k_coloring(g, k)?.map(|coloring| {
        let mut classes = coloring.to_certificate().classes().to_vec();
        classes.resize(k, Vec::new());
        ColorCertificate::new(classes)
    }))
}

fn try_k_coloring(g: &IntegralSumGraph, k: usize) -> Result<Option<EdgeColoring>> {
    if k > 120 {
        return Err(Error::domain(format!(
            "palette of {k} colors is over the solver limit"
        )));
    }
    let labels = g.labels();
    let index = |v: i64| labels.binary_search(&v).expect("endpoint is a vertex");
    let ends: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|e| (index(e.lo()), index(e.hi())))
        .collect();

    let mut used = vec![0u128; labels.len()];
    let mut colors = vec![0usize; ends.len()];
    if !extend(&ends, k, &mut used, &mut colors, 0, 0) {
        return Ok(None);
    }
    let coloring = g
        .edges()
        .iter()
        .zip(&colors)
        .map(|(&e, &c)| (e, c))
        .collect();
    Ok(Some(coloring))
}

/// Depth-first extension over edge positions. Colors are tried ascending and
/// capped at one past the highest color used so far, which breaks palette
/// permutations without losing completeness.
fn extend(
    ends: &[(usize, usize)],
    k: usize,
    used: &mut [u128],
    colors: &mut [usize],
    pos: usize,
    max_used: usize,
) -> bool {
    if pos == ends.len() {
        return true;
    }
    let (u, v) = ends[pos];
    let blocked = used[u] | used[v];
    for c in 1..=k.min(max_used + 1) {
        let bit = 1u128 << c;
        if blocked & bit == 0 {
            used[u] |= bit;
            used[v] |= bit;
            colors[pos] = c;
            if extend(ends, k, used, colors, pos + 1, max_used.max(c)) {
                return true;
            }
            used[u] &= !bit;
            used[v] &= !bit;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify_coloring;

    #[test]
    fn triangle_is_class_two() {
        let g = IntegralSumGraph::interval(-1, 1).unwrap();
        let result = exact_chromatic_index(&g, DEFAULT_EDGE_BUDGET).unwrap();
        assert_eq!(result.chi, 3);
        assert_eq!(result.delta, 2);
        assert!(result.witness.is_none());
    }

    #[test]
    fn balanced_interval_is_class_one() {
        let g = IntegralSumGraph::interval(-2, 2).unwrap();
        let result = exact_chromatic_index(&g, DEFAULT_EDGE_BUDGET).unwrap();
        assert_eq!(result.chi, 4);
        let witness = result.witness.unwrap();
        let report = verify_coloring(&g, &witness).unwrap();
        assert!(report.is_valid());
        assert_eq!(witness.palette_size(), 4);
    }

    #[test]
    fn g_0_6_needs_six_colors() {
        let g = IntegralSumGraph::interval(0, 6).unwrap();
        let result = exact_chromatic_index(&g, DEFAULT_EDGE_BUDGET).unwrap();
        assert_eq!(result.chi, 6);
        assert!(result.witness.is_some());
    }

    #[test]
    fn budget_guard_trips() {
        let g = IntegralSumGraph::interval(-6, 6).unwrap();
        assert_eq!(
            exact_chromatic_index(&g, DEFAULT_EDGE_BUDGET).unwrap_err(),
            Error::BudgetExceeded {
                edges: 60,
                budget: 40
            }
        );
    }

    #[test]
    fn searched_certificate_has_requested_class_count() {
        let g = IntegralSumGraph::interval(-2, 2).unwrap();
        let cert = search_certificate(&g, 4, DEFAULT_EDGE_BUDGET)
            .unwrap()
            .unwrap();
        assert_eq!(cert.class_count(), 4);
        // Asking below chi' is refused by the search itself.
        assert!(search_certificate(&g, 3, DEFAULT_EDGE_BUDGET)
            .unwrap()
            .is_none());
    }

    #[test]
    fn empty_graph_needs_no_colors() {
        let g = IntegralSumGraph::from_labels([3]).unwrap();
        let result = exact_chromatic_index(&g, DEFAULT_EDGE_BUDGET).unwrap();
        assert_eq!(result.chi, 0);
        assert_eq!(result.witness.unwrap().palette_size(), 0);
    }
}
