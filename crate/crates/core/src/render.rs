//! DOT export of shift graphs and SVG drawings of planar staircases.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::module::Module;
use crate::pruning::ShiftGraph;
use crate::rational::Rational;

/// `digraph G { "M1" -> "M2" [label="t=3/2"]; ... }`, one node per summand
/// and one labelled edge per arc of the graph, in index order.
pub fn shift_graph_dot(graph: &ShiftGraph) -> String {
    let mut out = String::from("digraph G {\n");
    for i in 0..graph.len() {
        let _ = writeln!(out, "  \"M{}\";", i + 1);
    }
    for i in 0..graph.len() {
        for j in 0..graph.len() {
            if graph.has_edge(i, j) {
                let _ = writeln!(
                    out,
                    "  \"M{}\" -> \"M{}\" [label=\"t={}\"];",
                    i + 1,
                    j + 1,
                    graph.thresholds()[i][j]
                );
            }
        }
    }
    out.push_str("}\n");
    out
}

/// Human-readable summary: thresholds, arcs and reach sets (1-based).
pub fn shift_graph_text(graph: &ShiftGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "alpha = {}", graph.alpha());
    let _ = writeln!(out, "thresholds:");
    for row in graph.thresholds() {
        let cells: Vec<String> = row.iter().map(Rational::to_string).collect();
        let _ = writeln!(out, "  {}", cells.join(" "));
    }
    for i in 0..graph.len() {
        let reach: Vec<String> = graph
            .reach(i)
            .iter()
            .map(|j| format!("M{}", j + 1))
            .collect();
        let _ = writeln!(out, "reach(M{}) = {{{}}}", i + 1, reach.join(", "));
    }
    out
}

const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf",
];
const SCALE: f64 = 40.0;
const MARGIN: f64 = 20.0;

/// SVG 1.1 drawing of every summand boundary of planar modules. The view is
/// the bounding box of all generators padded by 1; each summand gets its own
/// stroke colour and modules after the first are dashed.
pub fn staircase_svg(modules: &[Module]) -> Result<String> {
    for m in modules {
        if m.dim() != 2 {
            return Err(Error::UnsupportedDimension(m.dim()));
        }
    }
    let gens = modules
        .iter()
        .flat_map(|m| m.summands())
        .flat_map(|u| u.generators());
    let mut bounds: Option<[Rational; 4]> = None;
    for g in gens {
        let (x, y) = (&g.coords()[0], &g.coords()[1]);
        bounds = Some(match bounds {
            None => [x.clone(), x.clone(), y.clone(), y.clone()],
            Some([x0, x1, y0, y1]) => [
                x0.min(x.clone()),
                x1.max(x.clone()),
                y0.min(y.clone()),
                y1.max(y.clone()),
            ],
        });
    }
    let one = Rational::one();
    let [x0, x1, y0, y1] = bounds.unwrap_or_else(|| std::array::from_fn(|_| Rational::zero()));
    let (x0, x1, y0, y1) = (
        (&x0 - &one).to_f64(),
        (&x1 + &one).to_f64(),
        (&y0 - &one).to_f64(),
        (&y1 + &one).to_f64(),
    );
    let width = (x1 - x0) * SCALE + 2.0 * MARGIN;
    let height = (y1 - y0) * SCALE + 2.0 * MARGIN;
    let px = |x: f64| MARGIN + (x - x0) * SCALE;
    let py = |y: f64| MARGIN + (y1 - y) * SCALE;

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.2}" height="{height:.2}" viewBox="0 0 {width:.2} {height:.2}">"#
    );
    let _ = writeln!(
        out,
        r##"  <rect x="{:.2}" y="{:.2}" width="{:.2}" height="{:.2}" fill="none" stroke="#cccccc"/>"##,
        px(x0),
        py(y1),
        (x1 - x0) * SCALE,
        (y1 - y0) * SCALE
    );
    let mut colour = 0;
    for (k, m) in modules.iter().enumerate() {
        let dash = if k == 0 {
            ""
        } else {
            r#" stroke-dasharray="6,4""#
        };
        for u in m.summands() {
            // generators ascend in x and therefore descend in y
            let g = u.generators();
            let mut pts = vec![(g[0].coords()[0].to_f64(), y1)];
            for (i, p) in g.iter().enumerate() {
                let (x, y) = (p.coords()[0].to_f64(), p.coords()[1].to_f64());
                if i > 0 {
                    pts.push((x, pts.last().expect("nonempty").1));
                }
                pts.push((x, y));
            }
            pts.push((x1, pts.last().expect("nonempty").1));
            let path: Vec<String> = pts
                .iter()
                .map(|&(x, y)| format!("{:.2},{:.2}", px(x), py(y)))
                .collect();
            let _ = writeln!(
                out,
                r#"  <polyline points="{}" fill="none" stroke="{}" stroke-width="2"{dash}/>"#,
                path.join(" "),
                PALETTE[colour % PALETTE.len()]
            );
            colour += 1;
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}
