use std::fmt::Write;

use chorddia::ChordDiagram;

const SIZE: f64 = 240.0;
const CENTER: f64 = SIZE / 2.0;
const RADIUS: f64 = 100.0;
const LABEL_RADIUS: f64 = 113.0;
const MARKER_RADIUS: f64 = 3.0;

fn coord(value: f64) -> String {
    let s = format!("{value:.3}");
    // avoid emitting "-0.000"
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        "0.000".to_string()
    } else {
        s
    }
}

/// Position of 0-based point `v` of `points`: counterclockwise from the
/// positive x-axis, in SVG coordinates (y grows downwards).
fn position(v: usize, points: usize, radius: f64) -> (String, String) {
    let angle = std::f64::consts::TAU * v as f64 / points as f64;
    (
        coord(CENTER + radius * angle.cos()),
        coord(CENTER - radius * angle.sin()),
    )
}

/// Standalone SVG 1.1 drawing of a diagram: the circle, one straight segment
/// per chord, a marker per point and 1-based point labels.
pub fn render_svg(d: &ChordDiagram) -> String {
    let points = d.points();
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">"
    );
    let _ = writeln!(out, "  <title>chord diagram {d}</title>");
    let _ = writeln!(
        out,
        "  <circle cx=\"{CENTER}\" cy=\"{CENTER}\" r=\"{RADIUS}\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>"
    );
    out.push_str("  <g class=\"chords\" stroke=\"black\" stroke-width=\"1.5\">\n");
    for (a, b) in d.chords() {
        let (x1, y1) = position(a, points, RADIUS);
        let (x2, y2) = position(b, points, RADIUS);
        let _ = writeln!(
            out,
            "    <line x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\"/>"
        );
    }
    out.push_str("  </g>\n");
    out.push_str("  <g class=\"points\" fill=\"black\">\n");
    for v in 0..points {
        let (x, y) = position(v, points, RADIUS);
        let _ = writeln!(
            out,
            "    <ellipse cx=\"{x}\" cy=\"{y}\" rx=\"{MARKER_RADIUS}\" ry=\"{MARKER_RADIUS}\"/>"
        );
    }
    out.push_str("  </g>\n");
    out.push_str(
        "  <g class=\"labels\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\" dominant-baseline=\"central\">\n",
    );
    for v in 0..points {
        let (x, y) = position(v, points, LABEL_RADIUS);
        let _ = writeln!(out, "    <text x=\"{x}\" y=\"{y}\">{}</text>", v + 1);
    }
    out.push_str("  </g>\n");
    out.push_str("</svg>\n");
    out
}
