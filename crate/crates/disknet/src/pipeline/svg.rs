//! Hand-emitted SVG renderers for the report stage.

use crate::embedding::EmbeddingModel;
use std::fmt::Write;

const PALETTE: [&str; 10] = [
    "#4269d0", "#efb118", "#ff725c", "#6cc5b0", "#3ca951", "#ff8ab7", "#a463f2", "#97bbf5",
    "#9c6b4e", "#9498a0",
];

fn color_for(id: &str) -> &'static str {
    let lead = id.bytes().next().unwrap_or(b'0') as usize;
    PALETTE[lead % PALETTE.len()]
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Render every embedded node inside the unit circle. SVG y grows downward,
/// so the vertical coordinate is flipped to keep angles counterclockwise.
pub fn disk_svg(model: &EmbeddingModel) -> String {
    let mut s = String::new();
    s.push_str(concat!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"560\" height=\"560\" ",
        "viewBox=\"-1.08 -1.08 2.16 2.16\">\n"
    ));
    s.push_str("  <rect x=\"-1.08\" y=\"-1.08\" width=\"2.16\" height=\"2.16\" fill=\"white\"/>\n");
    s.push_str(
        "  <circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#666666\" stroke-width=\"0.006\"/>\n",
    );
    for (id, point) in model.positions() {
        writeln!(
            s,
            "  <circle cx=\"{:.6}\" cy=\"{:.6}\" r=\"0.02\" fill=\"{}\" fill-opacity=\"0.8\"><title>{}</title></circle>",
            point.x(),
            -point.y(),
            color_for(id),
            escape(id)
        )
        .expect("write to string");
    }
    s.push_str("</svg>\n");
    s
}

const WIDTH: f64 = 480.0;
const HEIGHT: f64 = 360.0;
const LEFT: f64 = 60.0;
const RIGHT: f64 = 20.0;
const TOP: f64 = 20.0;
const BOTTOM: f64 = 50.0;

fn padded_range(values: impl Iterator<Item = f64>) -> (f64, f64) {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for v in values {
        lo = lo.min(v);
        hi = hi.max(v);
    }
    if lo == hi {
        return (lo - 1.0, hi + 1.0);
    }
    let pad = 0.05 * (hi - lo);
    (lo - pad, hi + pad)
}

pub fn scatter_svg(points: &[(f64, f64)], x_label: &str, y_label: &str) -> String {
    let (x_lo, x_hi) = padded_range(points.iter().map(|p| p.0));
    let (y_lo, y_hi) = padded_range(points.iter().map(|p| p.1));
    let to_px = |x: f64| LEFT + (x - x_lo) / (x_hi - x_lo) * (WIDTH - LEFT - RIGHT);
    let to_py = |y: f64| HEIGHT - BOTTOM - (y - y_lo) / (y_hi - y_lo) * (HEIGHT - TOP - BOTTOM);

    let mut s = String::new();
    writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" viewBox=\"0 0 {WIDTH} {HEIGHT}\">"
    )
    .expect("write to string");
    writeln!(
        s,
        "  <rect x=\"0\" y=\"0\" width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"white\"/>"
    )
    .expect("write to string");
    let x0 = to_px(x_lo);
    let x1 = to_px(x_hi);
    let y0 = to_py(y_lo);
    let y1 = to_py(y_hi);
    writeln!(
        s,
        "  <line x1=\"{x0:.2}\" y1=\"{y0:.2}\" x2=\"{x1:.2}\" y2=\"{y0:.2}\" stroke=\"#333333\" stroke-width=\"1\"/>"
    )
    .expect("write to string");
    writeln!(
        s,
        "  <line x1=\"{x0:.2}\" y1=\"{y0:.2}\" x2=\"{x0:.2}\" y2=\"{y1:.2}\" stroke=\"#333333\" stroke-width=\"1\"/>"
    )
    .expect("write to string");
    for (value, px) in [(x_lo, x0), (x_hi, x1)] {
        writeln!(
            s,
            "  <text x=\"{px:.2}\" y=\"{:.2}\" font-size=\"11\" text-anchor=\"middle\" fill=\"#333333\">{value:.4}</text>",
            y0 + 16.0
        )
        .expect("write to string");
    }
    for (value, py) in [(y_lo, y0), (y_hi, y1)] {
        writeln!(
            s,
            "  <text x=\"{:.2}\" y=\"{:.2}\" font-size=\"11\" text-anchor=\"end\" fill=\"#333333\">{value:.4}</text>",
            x0 - 6.0,
            py + 4.0
        )
        .expect("write to string");
    }
    writeln!(
        s,
        "  <text x=\"{:.2}\" y=\"{:.2}\" font-size=\"12\" text-anchor=\"middle\" fill=\"#111111\">{}</text>",
        (x0 + x1) / 2.0,
        HEIGHT - 12.0,
        escape(x_label)
    )
    .expect("write to string");
    writeln!(
        s,
        "  <text x=\"{:.2}\" y=\"{:.2}\" font-size=\"12\" text-anchor=\"start\" fill=\"#111111\">{}</text>",
        6.0,
        TOP - 6.0,
        escape(y_label)
    )
    .expect("write to string");
    for (x, y) in points {
        writeln!(
            s,
            "  <circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"3\" fill=\"#4269d0\" fill-opacity=\"0.7\"/>",
            to_px(*x),
            to_py(*y)
        )
        .expect("write to string");
    }
    s.push_str("</svg>\n");
    s
}
