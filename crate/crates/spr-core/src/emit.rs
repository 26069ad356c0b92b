//! Deterministic DOT and SVG emitters for the geometric model.
//!
//! Output is byte-stable for a given input: every collection is emitted in
//! sorted order and floating point appears only in SVG coordinates, printed
//! with fixed precision.

use crate::geometry::{translate, ArQuiver, Polygon, SegmentClasses, TranslationQuiver};
use std::fmt::Write as _;

/// DOT graph of all segments with pivot arrows, rotation drawn dashed.
pub fn translation_quiver_dot(poly: &Polygon, tq: &TranslationQuiver) -> String {
    let mut out = String::from("digraph translation_quiver {\n");
    out.push_str("  rankdir=LR;\n  node [shape=box];\n");
    for s in &tq.nodes {
        writeln!(out, "  \"{}\";", s.label()).unwrap();
    }
    let mut arrows = tq.arrows.clone();
    arrows.sort();
    for (s, t) in arrows {
        writeln!(out, "  \"{}\" -> \"{}\";", s.label(), t.label()).unwrap();
    }
    for &s in &tq.nodes {
        if let Some(t) = translate(poly, s) {
            writeln!(
                out,
                "  \"{}\" -> \"{}\" [style=dashed];",
                s.label(),
                t.label()
            )
            .unwrap();
        }
    }
    out.push_str("}\n");
    out
}

/// DOT graph of the selected-segment Auslander-Reiten quiver; rotation
/// arcs between selected segments are drawn dashed.
pub fn ar_quiver_dot(poly: &Polygon, arq: &ArQuiver) -> String {
    let mut out = String::from("digraph ar_quiver {\n");
    out.push_str("  rankdir=LR;\n  node [shape=box];\n");
    for s in &arq.nodes {
        writeln!(out, "  \"{}\";", s.label()).unwrap();
    }
    let mut arrows = arq.arrows.clone();
    arrows.sort();
    for (s, t) in arrows {
        writeln!(out, "  \"{}\" -> \"{}\";", s.label(), t.label()).unwrap();
    }
    for &s in &arq.nodes {
        if let Some(t) = translate(poly, s) {
            if arq.nodes.contains(&t) {
                writeln!(
                    out,
                    "  \"{}\" -> \"{}\" [style=dashed];",
                    s.label(),
                    t.label()
                )
                .unwrap();
            }
        }
    }
    out.push_str("}\n");
    out
}

/// One line per segment naming its classes, in segment order.
pub fn classes_listing(poly: &Polygon, classes: &SegmentClasses) -> String {
    let mut out = String::new();
    for s in poly.all_segments() {
        let mut names: Vec<&str> = Vec::new();
        for (set, name) in [
            (&classes.suitable, "suitable"),
            (&classes.overline, "overline"),
            (&classes.underline, "underline"),
            (&classes.star, "star"),
            (&classes.frozen, "frozen"),
            (&classes.sp, "sp"),
        ] {
            if set.contains(&s) {
                names.push(name);
            }
        }
        if names.is_empty() {
            names.push("-");
        }
        writeln!(out, "{}: {}", s.label(), names.join(" ")).unwrap();
    }
    out
}

const SX: f64 = 70.0;
const SY: f64 = 6.0;
const PAD: f64 = 50.0;

fn fmt(v: f64) -> String {
    format!("{v:.1}")
}

/// SVG 1.1 drawing of the polygon with classified segment overlays:
/// suitable segments green dashed, frozen red, selected blue.
pub fn polygon_svg(poly: &Polygon, classes: &SegmentClasses) -> String {
    let n = poly.n();
    let ys: Vec<i64> = (0..=n).map(|v| poly.coords(v).1).collect();
    let (ymin, ymax) = (*ys.iter().min().unwrap(), *ys.iter().max().unwrap());
    let width = n as f64 * SX + 2.0 * PAD;
    let height = (ymax - ymin) as f64 * SY + 2.0 * PAD;
    let px = |v: usize| poly.coords(v).0 as f64 * SX + PAD;
    let py = |v: usize| (ymax - poly.coords(v).1) as f64 * SY + PAD;
    let mut out = String::new();
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         viewBox=\"0 0 {} {}\">",
        fmt(width),
        fmt(height)
    )
    .unwrap();
    let boundary: Vec<String> = poly
        .cycle()
        .iter()
        .map(|&v| format!("{},{}", fmt(px(v)), fmt(py(v))))
        .collect();
    writeln!(
        out,
        "  <polygon points=\"{}\" fill=\"none\" stroke=\"#555555\" stroke-width=\"1.5\"/>",
        boundary.join(" ")
    )
    .unwrap();
    for (set, color, dash) in [
        (&classes.suitable, "#2ca02c", " stroke-dasharray=\"6,3\""),
        (&classes.frozen, "#d62728", ""),
        (&classes.sp, "#1f77b4", ""),
    ] {
        for s in set {
            writeln!(
                out,
                "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" \
                 stroke=\"{color}\" stroke-width=\"1.0\" opacity=\"0.8\"{dash}/>",
                fmt(px(s.a)),
                fmt(py(s.a)),
                fmt(px(s.b)),
                fmt(py(s.b))
            )
            .unwrap();
        }
    }
    for v in 0..=n {
        writeln!(
            out,
            "  <circle cx=\"{}\" cy=\"{}\" r=\"3.0\" fill=\"#000000\"/>",
            fmt(px(v)),
            fmt(py(v))
        )
        .unwrap();
        let dy = if poly.is_lower(v) { 18.0 } else { -10.0 };
        writeln!(
            out,
            "  <text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"middle\">{v}</text>",
            fmt(px(v)),
            fmt(py(v) + dy)
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}

/// SVG 1.1 drawing of a margin polygon: the prefix-sum path with labeled
/// vertices.
pub fn polygon_prime_svg(coords: &[(i64, i64)]) -> String {
    let scale = 30.0;
    let xs: Vec<i64> = coords.iter().map(|c| c.0).collect();
    let ys: Vec<i64> = coords.iter().map(|c| c.1).collect();
    let (xmax, ymax) = (*xs.iter().max().unwrap(), *ys.iter().max().unwrap());
    let width = xmax as f64 * scale + 2.0 * PAD;
    let height = ymax as f64 * scale + 2.0 * PAD;
    let px = |c: (i64, i64)| c.0 as f64 * scale + PAD;
    let py = |c: (i64, i64)| (ymax - c.1) as f64 * scale + PAD;
    let mut out = String::new();
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         viewBox=\"0 0 {} {}\">",
        fmt(width),
        fmt(height)
    )
    .unwrap();
    let pts: Vec<String> = coords
        .iter()
        .map(|&c| format!("{},{}", fmt(px(c)), fmt(py(c))))
        .collect();
    writeln!(
        out,
        "  <polyline points=\"{}\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\"/>",
        pts.join(" ")
    )
    .unwrap();
    for (k, &c) in coords.iter().enumerate() {
        writeln!(
            out,
            "  <circle cx=\"{}\" cy=\"{}\" r=\"3.0\" fill=\"#000000\"/>",
            fmt(px(c)),
            fmt(py(c))
        )
        .unwrap();
        writeln!(
            out,
            "  <text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"middle\">{k}</text>",
            fmt(px(c)),
            fmt(py(c) - 10.0)
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}
