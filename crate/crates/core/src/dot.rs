//! Graphviz export with edges labelled and colored by Θ-class.

use std::fmt::Write;

use crate::graph::Graph;

const PALETTE: [&str; 12] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#aec7e8",
    "#98df8a", "#c5b0d5",
];

const LIFTED_COLOR: &str = "#d62728";

/// Renders `g` as an undirected DOT graph. With `edge_class`, each edge is
/// labelled by its class id and colored per class; classes flagged in
/// `highlighted` are drawn bold in a reserved color.
pub fn to_dot(g: &Graph, edge_class: Option<&[usize]>, highlighted: &[bool]) -> String {
    let mut out = String::from("graph G {\n  node [shape=point];\n");
    for v in g.vertices() {
        match g.coord(v) {
            Some(c) => {
                let c: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                let _ = writeln!(out, "  {v} [tooltip=\"({})\"];", c.join(","));
            }
            None => {
                let _ = writeln!(out, "  {v};");
            }
        }
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        match edge_class {
            Some(classes) => {
                let c = classes[e];
                if highlighted.get(c).copied().unwrap_or(false) {
                    let _ = writeln!(out, "  {u} -- {v} [label=\"{c}\", color=\"{LIFTED_COLOR}\", penwidth=2];");
                } else {
                    let color = PALETTE[c % PALETTE.len()];
                    let _ = writeln!(out, "  {u} -- {v} [label=\"{c}\", color=\"{color}\"];");
                }
            }
            None => {
                let _ = writeln!(out, "  {u} -- {v};");
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_and_colors() {
        let g = Graph::cycle(4);
        let dot = to_dot(&g, Some(&[0, 1, 1, 0]), &[true, false]);
        assert!(dot.starts_with("graph G {"));
        assert_eq!(dot.matches("penwidth=2").count(), 2);
        assert!(dot.contains("label=\"1\", color=\"#ff7f0e\""));
        assert_eq!(to_dot(&g, None, &[]).matches(" -- ").count(), 4);
    }
}
