//! Properness verification for colorings and certificates: coverage,
//! disjointness, and distinct colors at every vertex.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Edge, IntegralSumGraph};

use super::{ColorCertificate, EdgeColoring};

/// Outcome of checking a set of color classes against a graph. A valid
/// certificate has all three flags set; the detail lists record exactly what
/// went wrong otherwise, so transcription defects in stored class lists stay visible instead
/// of being repaired silently.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProperReport {
    pub covers_all_edges: bool,
    pub pairwise_disjoint: bool,
    pub proper_at_every_vertex: bool,
    pub palette_size: usize,
    /// Graph edges not present in any class.
    pub missing_edges: Vec<Edge>,
    /// Edges listed in more than one class.
    pub duplicated_edges: Vec<Edge>,
    /// Same-colored edge pairs meeting at a vertex, as (vertex, edge, edge).
    pub conflicts: Vec<(i64, Edge, Edge)>,
}

impl ProperReport {
    pub fn is_valid(&self) -> bool {
        self.covers_all_edges && self.pairwise_disjoint && self.proper_at_every_vertex
    }

    pub fn summary(&self) -> String {
        if self.is_valid() {
            return format!("proper cover with palette {}", self.palette_size);
        }
        let mut parts = Vec::new();
        if !self.covers_all_edges {
            parts.push(format!("{} edge(s) uncovered", self.missing_edges.len()));
        }
        if !self.pairwise_disjoint {
            parts.push(format!(
                "{} edge(s) duplicated",
                self.duplicated_edges.len()
            ));
        }
        if !self.proper_at_every_vertex {
            parts.push(format!("{} incidence conflict(s)", self.conflicts.len()));
        }
        parts.join(", ")
    }
}

/// Checks a certificate against `g`. Edges that are not even edges of `g`
/// are a hard error; everything else is reported through the flags.
pub fn verify_certificate(g: &IntegralSumGraph, cert: &ColorCertificate) -> Result<ProperReport> {
    let graph_edges: BTreeSet<Edge> = g.edges().iter().copied().collect();

    let mut seen: BTreeSet<Edge> = BTreeSet::new();
    let mut duplicated = BTreeSet::new();
    let mut conflicts = Vec::new();

    for class in cert.classes() {
        for &e in class {
            if !graph_edges.contains(&e) {
                return Err(Error::ForeignEdge(e));
            }
            if !seen.insert(e) {
                duplicated.insert(e);
            }
        }
        // A class is one color: any shared endpoint inside it is a conflict.
        for (i, &a) in class.iter().enumerate() {
            for &b in &class[i + 1..] {
                for v in [a.lo(), a.hi()] {
                    if b.touches(v) {
                        conflicts.push((v, a, b));
                    }
                }
            }
        }
    }

    let missing: Vec<Edge> = graph_edges.difference(&seen).copied().collect();
    Ok(ProperReport {
        covers_all_edges: missing.is_empty(),
        pairwise_disjoint: duplicated.is_empty(),
        proper_at_every_vertex: conflicts.is_empty(),
        palette_size: cert.class_count(),
        missing_edges: missing,
        duplicated_edges: duplicated.into_iter().collect(),
        conflicts,
    })
}

/// Checks an edge coloring against `g`. The assignment maps each edge to one
/// color, so disjointness holds by construction; coverage and properness are
/// checked the same way as for certificates.
pub fn verify_coloring(g: &IntegralSumGraph, coloring: &EdgeColoring) -> Result<ProperReport> {
    let graph_edges: BTreeSet<Edge> = g.edges().iter().copied().collect();
    for (e, _) in coloring.iter() {
        if !graph_edges.contains(&e) {
            return Err(Error::ForeignEdge(e));
        }
    }

    let mut at_vertex: BTreeMap<(i64, usize), Edge> = BTreeMap::new();
    let mut conflicts = Vec::new();
    for (e, c) in coloring.iter() {
        for v in [e.lo(), e.hi()] {
            if let Some(&other) = at_vertex.get(&(v, c)) {
                conflicts.push((v, other, e));
            } else {
                at_vertex.insert((v, c), e);
            }
        }
    }

    let covered: BTreeSet<Edge> = coloring.iter().map(|(e, _)| e).collect();
    let missing: Vec<Edge> = graph_edges.difference(&covered).copied().collect();
    Ok(ProperReport {
        covers_all_edges: missing.is_empty(),
        pairwise_disjoint: true,
        proper_at_every_vertex: conflicts.is_empty(),
        palette_size: coloring.palette_size(),
        missing_edges: missing,
        duplicated_edges: Vec::new(),
        conflicts,
    })
}
