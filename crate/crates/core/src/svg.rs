//! SVG rendering with the y axis pointing up.

use std::fmt::Write;

use num_traits::ToPrimitive;

use crate::drawing::Drawing;
use crate::geom::Point;

#[derive(Clone, Copy, Debug)]
pub struct SvgOptions {
    /// Pixels per grid unit.
    pub scale: f64,
    pub grid: bool,
    pub labels: bool,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions { scale: 40.0, grid: true, labels: true }
    }
}

pub fn to_svg(d: &Drawing, opt: SvgOptions) -> String {
    let (w, h) = (d.width().max(1), d.height().max(1));
    let s = opt.scale;
    // One unit of margin on each side; grid point (x, y) maps to
    // (x * s, (h + 1 - y) * s).
    let map = |p: &Point| (p.x.to_f64().unwrap_or(0.0) * s, (h as f64 + 1.0 - p.y.to_f64().unwrap_or(0.0)) * s);
    let (pw, ph) = ((w + 1) as f64 * s, (h + 1) as f64 * s);
    let mut out = String::new();
    let _ = writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{pw}" height="{ph}" viewBox="0 0 {pw} {ph}">"#);
    let _ = writeln!(out, r#"<rect width="{pw}" height="{ph}" fill="white"/>"#);
    if opt.grid {
        let _ = writeln!(out, r##"<g stroke="#dddddd" stroke-width="1">"##);
        for x in 1..=w {
            let _ = writeln!(out, r#"<line x1="{0}" y1="{1}" x2="{0}" y2="{2}"/>"#, x as f64 * s, s, h as f64 * s);
        }
        for y in 1..=h {
            let _ = writeln!(out, r#"<line x1="{1}" y1="{0}" x2="{2}" y2="{0}"/>"#, (h + 1 - y) as f64 * s, s, w as f64 * s);
        }
        let _ = writeln!(out, "</g>");
    }
    let _ = writeln!(out, r#"<g stroke="black" stroke-width="2" fill="none">"#);
    for i in 0..d.edges.len() {
        let pts = d.polyline(i);
        let list: Vec<String> = pts.iter().map(|p| {
            let (x, y) = map(p);
            format!("{x},{y}")
        }).collect();
        let _ = writeln!(out, r#"<polyline points="{}"/>"#, list.join(" "));
    }
    let _ = writeln!(out, "</g>");
    let r = (s * 0.2).max(2.0);
    let _ = writeln!(out, r##"<g fill="#1f5fbf" stroke="black">"##);
    for p in &d.coords {
        let (x, y) = map(p);
        let _ = writeln!(out, r#"<circle cx="{x}" cy="{y}" r="{r}"/>"#);
    }
    let _ = writeln!(out, "</g>");
    if opt.labels {
        let fs = (s * 0.3).max(8.0);
        let _ = writeln!(out, r#"<g font-family="sans-serif" font-size="{fs}" fill="black">"#);
        for (v, p) in d.coords.iter().enumerate() {
            let (x, y) = map(p);
            let _ = writeln!(out, r#"<text x="{}" y="{}">{v}</text>"#, x + r, y - r);
        }
        let _ = writeln!(out, "</g>");
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;

    #[test]
    fn flips_y_and_is_deterministic() {
        let d = Drawing::straight(vec![Point::int(1, 1), Point::int(2, 3)], &[Edge(0, 1)], "t");
        let opt = SvgOptions { scale: 10.0, grid: false, labels: false };
        let a = to_svg(&d, opt);
        assert_eq!(a, to_svg(&d, opt));
        // (1, 1) is low on the page, (2, 3) near the top.
        assert!(a.contains(r#"cx="10" cy="30""#));
        assert!(a.contains(r#"cx="20" cy="10""#));
        assert!(a.contains(r#"width="30" height="40""#));
    }

    #[test]
    fn grid_lines_optional() {
        let d = Drawing::straight(vec![Point::int(1, 1), Point::int(3, 2)], &[Edge(0, 1)], "t");
        let with = to_svg(&d, SvgOptions::default());
        let without = to_svg(&d, SvgOptions { grid: false, ..SvgOptions::default() });
        assert_eq!(with.matches("<line").count(), 5);
        assert_eq!(without.matches("<line").count(), 0);
    }
}
