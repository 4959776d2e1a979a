//! Deterministic SVG rendering of graphs, witnesses, and good-vertex
//! markers. All geometry in the output is integer arithmetic on the input
//! coordinates, so identical inputs give byte-identical documents.

use crate::graph::GeometricGraph;
use std::fmt::Write as _;

/// What to highlight on top of the base graph.
#[derive(Debug, Clone, Default)]
pub struct RenderOptions {
    /// Edge ids drawn in the first witness stroke class.
    pub witness_e1: Vec<usize>,
    /// Edge ids drawn in the second witness stroke class.
    pub witness_e2: Vec<usize>,
    /// Vertex ids marked with small discs (good endpoints).
    pub good_vertices: Vec<usize>,
}

/// Renders the graph as a standalone SVG document: one `<line>` per edge,
/// one vertex-class `<circle>` per point, plus small marker discs for good
/// vertices. The viewBox is the integer bounding box with a 5% margin.
pub fn render_svg(g: &GeometricGraph, opts: &RenderOptions) -> String {
    let points = g.points();
    let (mut min_x, mut min_y, mut max_x, mut max_y) = (0i64, 0i64, 0i64, 0i64);
    if let Some(first) = points.first() {
        (min_x, min_y, max_x, max_y) = (first.x, first.y, first.x, first.y);
    }
    for p in points {
        min_x = min_x.min(p.x);
        min_y = min_y.min(p.y);
        max_x = max_x.max(p.x);
        max_y = max_y.max(p.y);
    }
    let w = max_x - min_x;
    let h = max_y - min_y;
    let margin = ((w.max(h)) / 20).max(5);
    let vb = (
        min_x - margin,
        min_y - margin,
        w + 2 * margin,
        h + 2 * margin,
    );
    let dim = w.max(h).max(1);
    let stroke = (dim / 200).max(1);
    let r_vertex = (dim / 80).max(2);
    let r_good = (dim / 160).max(1);

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}">"#,
        vb.0, vb.1, vb.2, vb.3
    );
    let _ = writeln!(
        svg,
        "<style>\n.edge {{ stroke: #404040; stroke-width: {stroke}; }}\n.e1 {{ stroke: #d62728; stroke-width: {wide}; }}\n.e2 {{ stroke: #1f77b4; stroke-width: {wide}; }}\n.vertex {{ fill: #202020; }}\n.good {{ fill: #2ca02c; }}\n</style>",
        wide = 2 * stroke,
    );

    svg.push_str("<g class=\"edges\">\n");
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        let class = if opts.witness_e1.contains(&i) {
            "e1"
        } else if opts.witness_e2.contains(&i) {
            "e2"
        } else {
            "edge"
        };
        let (a, b) = (points[u], points[v]);
        let _ = writeln!(
            svg,
            r#"<line class="{class}" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            a.x, a.y, b.x, b.y
        );
    }
    svg.push_str("</g>\n<g class=\"vertices\">\n");
    for p in points {
        let _ = writeln!(
            svg,
            r#"<circle class="vertex" cx="{}" cy="{}" r="{r_vertex}"/>"#,
            p.x, p.y
        );
    }
    svg.push_str("</g>\n");
    if !opts.good_vertices.is_empty() {
        svg.push_str("<g class=\"good-markers\">\n");
        for &v in &opts.good_vertices {
            let p = points[v];
            let _ = writeln!(
                svg,
                r#"<circle class="good" cx="{}" cy="{}" r="{r_good}"/>"#,
                p.x, p.y
            );
        }
        svg.push_str("</g>\n");
    }
    svg.push_str("</svg>\n");
    svg
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::load_graph;

    #[test]
    fn element_counts_match_graph() {
        let g = load_graph(r#"{ "points": [[0,0],[2,0],[2,2],[0,2]], "edges": [[0,2],[1,3]] }"#)
            .unwrap();
        let svg = render_svg(&g, &RenderOptions::default());
        assert_eq!(svg.matches("<line ").count(), 2);
        assert_eq!(svg.matches("<circle ").count(), 4);
        assert!(svg.starts_with("<svg "));
        assert!(svg.trim_end().ends_with("</svg>"));
    }

    #[test]
    fn witness_classes_and_good_markers() {
        let g = load_graph(
            r#"{ "points": [[0,0],[4,4],[0,4],[4,1],[10,0],[11,5]],
                 "edges": [[0,1],[2,3],[4,5]] }"#,
        )
        .unwrap();
        let opts = RenderOptions {
            witness_e1: vec![0, 1],
            witness_e2: vec![2],
            good_vertices: vec![4, 5],
        };
        let svg = render_svg(&g, &opts);
        assert_eq!(svg.matches("class=\"e1\"").count(), 2);
        assert_eq!(svg.matches("class=\"e2\"").count(), 1);
        assert_eq!(svg.matches("class=\"good\"").count(), 2);
        assert_eq!(svg.matches("<circle ").count(), 6 + 2);
    }

    #[test]
    fn output_is_deterministic() {
        let g = load_graph(r#"{ "points": [[0,0],[7,3],[2,9]], "edges": [[0,1],[1,2]] }"#).unwrap();
        assert_eq!(
            render_svg(&g, &RenderOptions::default()),
            render_svg(&g, &RenderOptions::default())
        );
    }
}
