//! Graphviz DOT export. Arcs become directed edges, ties undirected dashed
//! edges rendered once; an optional dominance report colors weak kings and
//! weak serfs and adds scores to the labels.

use okings_core::dominance::DominanceReport;
use okings_core::graph::OrientedGraph;

pub fn export_dot(g: &OrientedGraph, annotations: Option<&DominanceReport>) -> String {
    let n = g.vertex_count();
    let mut out = String::from("digraph oriented {\n");
    out.push_str("  node [shape=circle];\n");
    for v in 1..=n {
        let mut attrs = Vec::new();
        if let Some(report) = annotations {
            attrs.push(format!("label=\"{v} (s={})\"", g.score(v).unwrap()));
            let wk = report.weak_kings.contains(&v);
            let ws = report.weak_serfs.contains(&v);
            match (wk, ws) {
                (true, true) => attrs.push("style=filled, fillcolor=palegreen".into()),
                (true, false) => attrs.push("style=filled, fillcolor=lightgoldenrod".into()),
                (false, true) => attrs.push("style=filled, fillcolor=lightblue".into()),
                (false, false) => {}
            }
        } else {
            attrs.push(format!("label=\"{v}\""));
        }
        out.push_str(&format!("  {v} [{}];\n", attrs.join(", ")));
    }
    for (u, v) in g.arcs() {
        out.push_str(&format!("  {u} -> {v};\n"));
    }
    for (u, v) in g.tie_pairs() {
        out.push_str(&format!("  {u} -> {v} [dir=none, style=dashed];\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn directed_edges(dot: &str) -> usize {
        dot.lines()
            .filter(|l| l.contains("->") && !l.contains("dashed"))
            .count()
    }

    fn dashed_edges(dot: &str) -> usize {
        dot.lines().filter(|l| l.contains("dashed")).count()
    }

    #[test]
    fn null_graph_has_one_dashed_edge() {
        let g = OrientedGraph::build(2, &[]).unwrap();
        let dot = export_dot(&g, None);
        assert_eq!(directed_edges(&dot), 0);
        assert_eq!(dashed_edges(&dot), 1);
    }

    #[test]
    fn c3_has_three_directed_edges() {
        let g = OrientedGraph::build(3, &[(1, 2), (2, 3), (3, 1)]).unwrap();
        let dot = export_dot(&g, None);
        assert_eq!(directed_edges(&dot), 3);
        assert_eq!(dashed_edges(&dot), 0);
    }

    #[test]
    fn dstar_annotated() {
        let g = OrientedGraph::build(5, &[(1, 2), (2, 3), (2, 4), (2, 5)]).unwrap();
        let report = DominanceReport::compute(&g);
        let dot = export_dot(&g, Some(&report));
        assert_eq!(directed_edges(&dot), 4);
        assert_eq!(dashed_edges(&dot), 6);
        for (v, s) in [(1, 5), (2, 6), (3, 3), (4, 3), (5, 3)] {
            assert!(dot.contains(&format!("label=\"{v} (s={s})\"")));
        }
    }
}
