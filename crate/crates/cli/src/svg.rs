//! SVG rendering of crease patterns.

use std::fmt::Write as _;
use std::path::Path;

use flatfold::{CreasePattern, MvLabel};

const MOUNTAIN_DASH: &str = "8 3 2 3";
const VALLEY_DASH: &str = "6 4";

/// Renders `p` as an SVG 1.1 document. The viewBox is the boundary's
/// bounding box plus a 5% margin; y points up as in the pattern.
pub fn render_svg(p: &CreasePattern) -> String {
    let pts: Vec<(f64, f64)> = p.vertices().iter().map(|v| v.position.to_f64()).collect();
    let (mut lo, mut hi) = (
        (f64::INFINITY, f64::INFINITY),
        (f64::NEG_INFINITY, f64::NEG_INFINITY),
    );
    for &b in p.boundary() {
        let (x, y) = pts[b];
        lo = (lo.0.min(x), lo.1.min(y));
        hi = (hi.0.max(x), hi.1.max(y));
    }
    let (w, h) = (hi.0 - lo.0, hi.1 - lo.1);
    let (mx, my) = (0.05 * w, 0.05 * h);
    let unit = w.max(h) / 100.0;
    let y = |v: f64| -v;

    let mut s = String::new();
    writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{} {} {} {}">"#,
        num(lo.0 - mx),
        num(y(hi.1) - my),
        num(w + 2.0 * mx),
        num(h + 2.0 * my)
    )
    .unwrap();
    let polygon: Vec<String> = p
        .boundary()
        .iter()
        .map(|&b| format!("{},{}", num(pts[b].0), num(y(pts[b].1))))
        .collect();
    writeln!(
        s,
        r#"  <polygon class="boundary" points="{}" fill="none" stroke="black" stroke-width="{}"/>"#,
        polygon.join(" "),
        num(0.6 * unit)
    )
    .unwrap();
    for (i, &(a, b)) in p.creases().iter().enumerate() {
        let (style, colour, width, dash) = match p.label(i) {
            Some(MvLabel::Mountain) => ("mountain", "#c0392b", 0.5, Some(MOUNTAIN_DASH)),
            Some(MvLabel::Valley) => ("valley", "#2457a6", 0.5, Some(VALLEY_DASH)),
            None => ("unassigned", "#555555", 0.2, None),
        };
        let dash = dash
            .map(|d| {
                let scaled: Vec<String> = d
                    .split(' ')
                    .map(|x| num(x.parse::<f64>().unwrap() * unit))
                    .collect();
                format!(r#" stroke-dasharray="{}""#, scaled.join(" "))
            })
            .unwrap_or_default();
        writeln!(
            s,
            r#"  <line class="crease {style}" x1="{}" y1="{}" x2="{}" y2="{}" stroke="{colour}" stroke-width="{}"{dash}/>"#,
            num(pts[a].0),
            num(y(pts[a].1)),
            num(pts[b].0),
            num(y(pts[b].1)),
            num(width * unit)
        )
        .unwrap();
    }
    s.push_str("</svg>\n");
    s
}

pub fn emit_svg(p: &CreasePattern, out: &Path) -> std::io::Result<()> {
    std::fs::write(out, render_svg(p))
}

/// Fixed-precision number without trailing zeros.
fn num(v: f64) -> String {
    let t = format!("{v:.6}");
    let t = t.trim_end_matches('0').trim_end_matches('.');
    if t == "-0" {
        "0".into()
    } else {
        t.into()
    }
}
