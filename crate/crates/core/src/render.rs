//! SVG and TikZ drawings of a meander: vertices on a line, top arcs above, bottom arcs below.
//!
//! Vertices sit at unit spacing; an arc spanning `d` vertices rises `d/2`
//! units. Output depends only on the meander, so repeated runs are byte-identical.

use std::fmt::Write as _;

use crate::meander::Meander;

const SCALE: f64 = 40.0;
const MARGIN: f64 = 20.0;

fn arc_height(u: usize, v: usize) -> f64 {
    (v - u) as f64 / 2.0
}

fn max_height(edges: &[(usize, usize)]) -> f64 {
    edges
        .iter()
        .map(|&(u, v)| arc_height(u, v))
        .fold(0.0, f64::max)
}

/// Standalone SVG document.
///
/// Arcs are `<path>` elements with class `top` or `bottom`; vertices are `<circle>` elements.
pub fn to_svg(m: &Meander) -> String {
    let top = m.top_edges();
    let bottom = m.bottom_edges();
    let up = max_height(&top) * SCALE;
    let down = max_height(&bottom) * SCALE;
    let width = 2.0 * MARGIN + (m.n().saturating_sub(1)) as f64 * SCALE;
    let height = 2.0 * MARGIN + up + down;
    let baseline = MARGIN + up;
    let x = |v: usize| MARGIN + (v - 1) as f64 * SCALE;

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.1}" height="{height:.1}" viewBox="0 0 {width:.1} {height:.1}">"#
    )
    .unwrap();
    writeln!(out, r#"  <g fill="none" stroke="black" stroke-width="2">"#).unwrap();
    for (class, edges, sweep) in [("top", &top, 1), ("bottom", &bottom, 0)] {
        for &(u, v) in edges.iter() {
            let rx = (v - u) as f64 * SCALE / 2.0;
            let ry = arc_height(u, v) * SCALE;
            writeln!(
                out,
                r#"    <path class="{class}" d="M {:.1} {baseline:.1} A {rx:.1} {ry:.1} 0 0 {sweep} {:.1} {baseline:.1}"/>"#,
                x(u),
                x(v)
            )
            .unwrap();
        }
    }
    writeln!(out, "  </g>").unwrap();
    writeln!(out, r#"  <g fill="black">"#).unwrap();
    for v in 1..=m.n() {
        writeln!(
            out,
            r#"    <circle class="vertex" cx="{:.1}" cy="{baseline:.1}" r="4"><title>v{v}</title></circle>"#,
            x(v)
        )
        .unwrap();
    }
    writeln!(out, "  </g>").unwrap();
    out.push_str("</svg>\n");
    out
}

/// A `tikzpicture` environment in the same layout.
pub fn to_tikz(m: &Meander) -> String {
    let mut out = String::from("\\begin{tikzpicture}\n");
    for v in 1..=m.n() {
        writeln!(
            out,
            "  \\node [circle, fill, inner sep=2pt, label=below:$v_{{{v}}}$] (v{v}) at ({}, 0) {{}};",
            v - 1
        )
        .unwrap();
    }
    for (edges, sign) in [(m.top_edges(), 1.0), (m.bottom_edges(), -1.0)] {
        for (u, v) in edges {
            let h = sign * arc_height(u, v);
            writeln!(
                out,
                "  \\draw (v{u}) .. controls ({}, {h:.2}) and ({}, {h:.2}) .. (v{v});",
                u - 1,
                v - 1
            )
            .unwrap();
        }
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}
