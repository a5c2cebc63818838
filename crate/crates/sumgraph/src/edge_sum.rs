//! Edge-sum classes `E_i` (all edges whose endpoint labels add up to `i`),
//! their partition of the edge set, and the edge sum chromatic number.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, IntegralSumGraph};

/// The partition of `E(G+(S))` into edge-sum classes, one key per label in
/// `S`. Empty classes are kept so `class(i)` can answer for every `i` in `S`;
/// iteration and serialization expose only the non-empty ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeSumPartition {
    classes: BTreeMap<i64, Vec<Edge>>,
    graph_order: usize,
}

impl EdgeSumPartition {
    /// Groups the edges of `g` by their edge sum number.
    pub fn of(g: &IntegralSumGraph) -> Self {
        let mut classes: BTreeMap<i64, Vec<Edge>> =
            g.labels().iter().map(|&i| (i, Vec::new())).collect();
        for &e in g.edges() {
            classes
                .get_mut(&e.sum())
                .expect("edge sum is a label by construction")
                .push(e);
        }
        EdgeSumPartition {
            classes,
            graph_order: g.order(),
        }
    }

    /// The class `E_i`, empty when no edge sums to `i`; `None` if `i` is not
    /// a label.
    pub fn class(&self, i: i64) -> Option<&[Edge]> {
        self.classes.get(&i).map(|c| c.as_slice())
    }

    /// Non-empty classes in ascending sum order.
    pub fn non_empty(&self) -> impl Iterator<Item = (i64, &[Edge])> {
        self.classes
            .iter()
            .filter(|(_, edges)| !edges.is_empty())
            .map(|(&i, edges)| (i, edges.as_slice()))
    }

    /// Number of distinct non-empty classes; never exceeds the graph order.
    pub fn chromatic_number(&self) -> usize {
        self.non_empty().count()
    }

    /// True when every label is the sum of some edge, i.e. the class count
    /// reaches the graph order.
    pub fn is_saturated(&self) -> bool {
        self.classes.values().all(|edges| !edges.is_empty())
    }

    pub fn graph_order(&self) -> usize {
        self.graph_order
    }

    /// `{"classes":[{"sum":i,"edges":[[lo,hi],...]},...]}`, non-empty classes
    /// ascending by sum and edges lexicographic.
    pub fn to_json(&self) -> String {
        let doc = ClassesDoc {
            classes: self
                .non_empty()
                .map(|(sum, edges)| ClassDoc {
                    sum,
                    edges: edges.iter().map(|e| (e.lo(), e.hi())).collect(),
                })
                .collect(),
        };
        serde_json::to_string(&doc).expect("classes document serializes")
    }
}

#[derive(Serialize, Deserialize)]
struct ClassesDoc {
    classes: Vec<ClassDoc>,
}

#[derive(Serialize, Deserialize)]
struct ClassDoc {
    sum: i64,
    edges: Vec<(i64, i64)>,
}

/// The partition of the edge set of `g` into edge-sum classes.
pub fn classes(g: &IntegralSumGraph) -> EdgeSumPartition {
    EdgeSumPartition::of(g)
}

/// Count of distinct non-empty edge-sum classes of `g`.
pub fn chromatic_number(g: &IntegralSumGraph) -> usize {
    EdgeSumPartition::of(g).chromatic_number()
}

/// The pair `(i, E_i)` behind `F_i = {i} ∪ E_i`; errors when `i` is not a
/// label of `g`.
pub fn f_set(g: &IntegralSumGraph, i: i64) -> Result<(i64, Vec<Edge>)> {
    if !g.has_vertex(i) {
        return Err(Error::LabelNotFound(i));
    }
    let edges = g.edges().iter().copied().filter(|e| e.sum() == i).collect();
    Ok((i, edges))
}

/// True when every label of `g` is realized as an edge sum.
pub fn is_saturated(g: &IntegralSumGraph) -> bool {
    EdgeSumPartition::of(g).is_saturated()
}
