//! Integral sum graphs `G+(S)`: vertices carry distinct integer labels and
//! `{u, v}` is an edge exactly when `u + v` is itself a label.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite set of distinct integer labels, kept in ascending order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelSet {
    labels: Vec<i64>,
}

impl LabelSet {
    /// Builds a canonical label set from labels in any order.
    pub fn new(labels: impl IntoIterator<Item = i64>) -> Result<Self> {
        let mut labels: Vec<i64> = labels.into_iter().collect();
        if labels.is_empty() {
            return Err(Error::EmptyLabelSet);
        }
        labels.sort_unstable();
        for pair in labels.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateLabel(pair[0]));
            }
        }
        Ok(LabelSet { labels })
    }

    /// The interval `[r, s] = {r, r+1, ..., s}`.
    pub fn interval(r: i64, s: i64) -> Result<Self> {
        if r > s {
            return Err(Error::domain(format!("empty interval [{r}, {s}]")));
        }
        Ok(LabelSet {
            labels: (r..=s).collect(),
        })
    }

    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn contains(&self, label: i64) -> bool {
        self.labels.binary_search(&label).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> + '_ {
        self.labels.iter().copied()
    }

    /// The set `-S = {-x : x in S}`, again in canonical order.
    pub fn negated(&self) -> Self {
        let mut labels: Vec<i64> = self.labels.iter().map(|&x| -x).collect();
        labels.reverse();
        LabelSet { labels }
    }
}

/// An undirected edge written with its smaller label first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge(i64, i64);

impl Edge {
    /// Canonicalizes the endpoint order; `u == v` is rejected (no loops).
    pub fn new(u: i64, v: i64) -> Result<Self> {
        if u == v {
            return Err(Error::domain(format!("loop edge ({u}, {v})")));
        }
        Ok(Edge(u.min(v), u.max(v)))
    }

    pub fn lo(&self) -> i64 {
        self.0
    }

    pub fn hi(&self) -> i64 {
        self.1
    }

    /// The induced edge sum number, the sum of the two endpoint labels.
    pub fn sum(&self) -> i64 {
        self.0 + self.1
    }

    pub fn touches(&self, v: i64) -> bool {
        self.0 == v || self.1 == v
    }

    /// Whether the two edges share an endpoint.
    pub fn adjacent(&self, other: &Edge) -> bool {
        self.touches(other.0) || self.touches(other.1)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.0, self.1)
    }
}

/// The integral sum graph `G+(S)`. Immutable once built; the edge list is
/// kept sorted lexicographically by `(lo, hi)` so serialized output is stable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralSumGraph {
    labels: LabelSet,
    edges: Vec<Edge>,
}

impl IntegralSumGraph {
    /// Builds `G+(S)`: enumerates all unordered label pairs and keeps those
    /// whose sum is again a label.
    pub fn new(labels: LabelSet) -> Self {
        let mut edges = Vec::new();
        let ls = labels.labels();
        for (i, &u) in ls.iter().enumerate() {
            for &v in &ls[i + 1..] {
                // i128 so extreme i64 labels cannot wrap around.
                let sum = u as i128 + v as i128;
                if let Ok(sum) = i64::try_from(sum) {
                    if labels.contains(sum) {
                        edges.push(Edge(u, v));
                    }
                }
            }
        }
        IntegralSumGraph { labels, edges }
    }

    pub fn from_labels(labels: impl IntoIterator<Item = i64>) -> Result<Self> {
        Ok(Self::new(LabelSet::new(labels)?))
    }

    /// The interval graph `G_{r,s} = G+([r, s])` with `r <= 0 <= s` and
    /// `r + s >= 0`. Accepts the degenerate cases `r = 0`, `s = 0`.
    pub fn interval(r: i64, s: i64) -> Result<Self> {
        if r > 0 {
            return Err(Error::domain(format!(
                "interval start r = {r} must be <= 0"
            )));
        }
        if s < 0 {
            return Err(Error::domain(format!("interval end s = {s} must be >= 0")));
        }
        if r + s < 0 {
            return Err(Error::IntervalConvention { r, s });
        }
        Ok(Self::new(LabelSet::interval(r, s)?))
    }

    /// Builds `G_{r,s}` as the join `K_1 * G+([r,-1]) * G+([1,s])`: vertex 0
    /// adjacent to everything, every negative adjacent to every positive,
    /// plus the two interval subgraphs. The result carries the same labels as
    /// [`IntegralSumGraph::interval`], so the edge sets can be compared for
    /// equality rather than isomorphism.
    pub fn join_interval(r: i64, s: i64) -> Result<Self> {
        if !(r < 0 && 0 < s) {
            return Err(Error::domain(format!(
                "join construction needs r < 0 < s, got ({r}, {s})"
            )));
        }
        if r + s < 0 {
            return Err(Error::IntervalConvention { r, s });
        }
        let labels = LabelSet::interval(r, s)?;
        let mut edges = BTreeSet::new();
        for v in labels.iter() {
            if v != 0 {
                edges.insert(Edge(v.min(0), v.max(0)));
            }
        }
        for u in r..=-1 {
            for v in 1..=s {
                edges.insert(Edge(u, v));
            }
        }
        // G+([1,s]) on the positive labels: i + j must stay within [1, s].
        for i in 1..=s {
            for j in (i + 1)..=s {
                if i + j <= s {
                    edges.insert(Edge(i, j));
                }
            }
        }
        // G+([r,-1]) on the negative labels, mirrored.
        for i in r..=-1 {
            for j in (i + 1)..=-1 {
                if i + j >= r {
                    edges.insert(Edge(i, j));
                }
            }
        }
        Ok(IntegralSumGraph {
            labels,
            edges: edges.into_iter().collect(),
        })
    }

    pub fn label_set(&self) -> &LabelSet {
        &self.labels
    }

    pub fn labels(&self) -> &[i64] {
        self.labels.labels()
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    /// Edges in canonical `(lo, hi)` order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn has_vertex(&self, v: i64) -> bool {
        self.labels.contains(v)
    }

    pub fn has_edge(&self, u: i64, v: i64) -> bool {
        match Edge::new(u, v) {
            Ok(e) => self.edges.binary_search(&e).is_ok(),
            Err(_) => false,
        }
    }

    /// Number of edges incident to `v`.
    pub fn degree(&self, v: i64) -> Result<usize> {
        if !self.labels.contains(v) {
            return Err(Error::LabelNotFound(v));
        }
        Ok(self.edges.iter().filter(|e| e.touches(v)).count())
    }

    /// Largest vertex degree; 0 for a single vertex.
    pub fn max_degree(&self) -> usize {
        self.labels
            .iter()
            .map(|v| self.edges.iter().filter(|e| e.touches(v)).count())
            .max()
            .unwrap_or(0)
    }

    /// Serializes to the canonical JSON document
    /// `{"labels":[...],"edges":[[lo,hi],...]}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&GraphDoc {
            labels: self.labels.labels().to_vec(),
            edges: self.edges.iter().map(|e| (e.0, e.1)).collect(),
        })
        .expect("graph document serializes")
    }

    /// Parses a graph document, rebuilds the graph from its labels and
    /// rejects the document if the listed edges disagree with `G+(S)`.
    pub fn from_json(doc: &str) -> Result<Self> {
        let doc: GraphDoc = serde_json::from_str(doc).map_err(|e| Error::Parse(e.to_string()))?;
        let graph = Self::from_labels(doc.labels)?;
        let mut listed: Vec<Edge> = doc
            .edges
            .iter()
            .map(|&(u, v)| Edge::new(u, v))
            .collect::<Result<_>>()?;
        listed.sort_unstable();
        if listed != graph.edges {
            return Err(Error::Parse(
                "edge list does not match the sum graph induced by the labels".into(),
            ));
        }
        Ok(graph)
    }
}

#[derive(Serialize, Deserialize)]
struct GraphDoc {
    labels: Vec<i64>,
    edges: Vec<(i64, i64)>,
}
