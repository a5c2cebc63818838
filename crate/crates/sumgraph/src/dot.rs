//! DOT export: undirected graphs with vertex ids equal to labels, and edge
//! colorings carrying `color` / `label="c<j>"` attributes from the fixed
//! palette.

use std::fmt::Write;

use crate::coloring::{color_name, EdgeColoring};
use crate::graph::IntegralSumGraph;

pub fn graph_dot(g: &IntegralSumGraph) -> String {
    let mut out = String::from("graph sumgraph {\n");
    for v in g.labels() {
        writeln!(out, "  \"{v}\";").unwrap();
    }
    for e in g.edges() {
        writeln!(out, "  \"{}\" -- \"{}\";", e.lo(), e.hi()).unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn coloring_dot(g: &IntegralSumGraph, coloring: &EdgeColoring) -> String {
    let mut out = String::from("graph sumgraph {\n");
    for v in g.labels() {
        writeln!(out, "  \"{v}\";").unwrap();
    }
    for e in g.edges() {
        match coloring.color(e) {
            Some(c) => writeln!(
                out,
                "  \"{}\" -- \"{}\" [color=\"{}\", label=\"c{}\"];",
                e.lo(),
                e.hi(),
                color_name(c),
                c
            )
            .unwrap(),
            None => writeln!(out, "  \"{}\" -- \"{}\";", e.lo(), e.hi()).unwrap(),
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::theorem_coloring;

    #[test]
    fn plain_graph_lists_vertices_and_edges() {
        let g = IntegralSumGraph::interval(-1, 1).unwrap();
        let dot = graph_dot(&g);
        assert!(dot.starts_with("graph sumgraph {"));
        assert!(dot.contains("\"-1\";"));
        assert!(dot.contains("\"-1\" -- \"1\";"));
    }

    #[test]
    fn colored_edges_carry_palette_names() {
        let g = IntegralSumGraph::interval(-1, 2).unwrap();
        let c = theorem_coloring(-1, 2).unwrap();
        let dot = coloring_dot(&g, &c);
        // (0,1) -> c_1 = gray
        assert!(dot.contains("\"0\" -- \"1\" [color=\"gray\", label=\"c1\"];"));
    }
}
