//! SVG rendering of string representations. Coordinates are converted to
//! floating point here only for display; nothing downstream depends on it.

use num_traits::ToPrimitive;

use super::exact::Pt;
use super::StringRepresentation;
use crate::graph::Graph;

fn f(v: &super::exact::Q) -> f64 {
    v.to_f64().unwrap_or(0.0)
}

fn color_for(g: &Graph, v: usize) -> &'static str {
    match g.label(v as u32) {
        Some("red") => "#c0392b",
        Some("blue") => "#2960ac",
        Some("white") => "#9aa0a6",
        Some("jewel") => "#8e44ad",
        Some("red-apex") => "#e74c3c",
        Some("blue-apex") => "#3498db",
        Some("yellow") => "#b8a000",
        _ => {
            const PALETTE: [&str; 6] =
                ["#1b7837", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#275d6b"];
            PALETTE[v % PALETTE.len()]
        }
    }
}

pub fn svg_string(rep: &StringRepresentation, g: &Graph) -> String {
    let pts: Vec<&Pt> = rep.strings.iter().flatten().collect();
    let (mut x0, mut y0, mut x1, mut y1) = (0.0f64, 0.0, 1.0, 1.0);
    if !pts.is_empty() {
        x0 = pts.iter().map(|p| f(&p.x)).fold(f64::INFINITY, f64::min);
        y0 = pts.iter().map(|p| f(&p.y)).fold(f64::INFINITY, f64::min);
        x1 = pts.iter().map(|p| f(&p.x)).fold(f64::NEG_INFINITY, f64::max);
        y1 = pts.iter().map(|p| f(&p.y)).fold(f64::NEG_INFINITY, f64::max);
    }
    let span = (x1 - x0).max(y1 - y0).max(1e-9);
    let margin = span * 0.05;
    let stroke = span / 400.0;
    let dot = span / 150.0;

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\">\n",
        x0 - margin,
        y0 - margin,
        (x1 - x0) + 2.0 * margin,
        (y1 - y0) + 2.0 * margin,
    ));
    for (v, poly) in rep.strings.iter().enumerate() {
        let color = color_for(g, v);
        if poly.len() == 1 {
            out.push_str(&format!(
                "  <circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{}\"><title>vertex {}</title></circle>\n",
                f(&poly[0].x),
                f(&poly[0].y),
                dot,
                color,
                v
            ));
            continue;
        }
        let coords: Vec<String> = poly
            .iter()
            .map(|p| format!("{},{}", f(&p.x), f(&p.y)))
            .collect();
        out.push_str(&format!(
            "  <polyline points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"{}\" stroke-linejoin=\"round\" stroke-linecap=\"round\"><title>vertex {}</title></polyline>\n",
            coords.join(" "),
            color,
            stroke,
            v
        ));
    }
    for ((i, j), p) in &rep.crossings {
        out.push_str(&format!(
            "  <circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"none\" stroke=\"#000\" stroke-width=\"{}\"><title>crossing {} x {}</title></circle>\n",
            f(&p.x),
            f(&p.y),
            dot,
            stroke,
            i,
            j
        ));
    }
    out.push_str("</svg>\n");
    out
}
