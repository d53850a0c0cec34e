use std::fmt::Write;

use crate::gerschgorin::{Disc, RealInterval};

const PIXEL_WIDTH: f64 = 800.0;
const MAX_TICKS: f64 = 40.0;

const STYLE: &str = "\
.axis{stroke:#444444;stroke-width:1;vector-effect:non-scaling-stroke}\
.disc-a{fill:#1f77b4;fill-opacity:0.08;stroke:#1f77b4;stroke-width:1.5;vector-effect:non-scaling-stroke}\
.disc-b{fill:#d62728;fill-opacity:0.08;stroke:#d62728;stroke-width:1.5;vector-effect:non-scaling-stroke}\
.band{fill:#2ca02c;fill-opacity:0.25;stroke:none}\
.label{fill:#222222;font-family:sans-serif;text-anchor:middle}\
.legend-a{fill:#1f77b4;text-anchor:start}\
.legend-b{fill:#d62728;text-anchor:start}";

/// Prints `x` with exactly six decimals; negative zero prints as zero.
fn c(x: f64) -> String {
    let s = format!("{x:.6}");
    if s == "-0.000000" {
        "0.000000".to_owned()
    } else {
        s
    }
}

/// Disc diagram in the complex plane for two matrices.
///
/// User coordinates are the plane itself with the imaginary axis pointing
/// up, so every disc sits on `y = 0`. The view box spans all discs with a
/// 10% margin. Output depends only on the inputs.
pub fn render_svg(discs_a: &[Disc], discs_b: &[Disc], intersection: RealInterval) -> String {
    let all = discs_a.iter().chain(discs_b);
    let (mut x0, mut x1, mut r_max) = (f64::INFINITY, f64::NEG_INFINITY, 0.0f64);
    for d in all {
        x0 = x0.min(d.left());
        x1 = x1.max(d.right());
        r_max = r_max.max(d.radius);
    }
    if !x0.is_finite() {
        (x0, x1, r_max) = (-1.0, 1.0, 1.0);
    }
    let base = (x1 - x0).max(2.0 * r_max).max(1.0);
    let margin = 0.1 * base;
    let (vx, vy) = (x0 - margin, -r_max - margin);
    let (vw, vh) = (x1 - x0 + 2.0 * margin, 2.0 * (r_max + margin));
    let tick = 0.015 * base;
    let font = 0.03 * base;

    let mut s = String::new();
    let w = &mut s;
    let _ = writeln!(w, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        w,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="{} {} {} {}">"#,
        c(PIXEL_WIDTH),
        c(PIXEL_WIDTH * vh / vw),
        c(vx),
        c(vy),
        c(vw),
        c(vh)
    );
    let _ = writeln!(w, "<style>{STYLE}</style>");

    let _ = writeln!(w, r#"<g id="axes">"#);
    let _ = writeln!(
        w,
        r#"<line class="axis" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
        c(vx),
        c(0.0),
        c(vx + vw),
        c(0.0)
    );
    if vx <= 0.0 && 0.0 <= vx + vw {
        let _ = writeln!(
            w,
            r#"<line class="axis" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            c(0.0),
            c(vy),
            c(0.0),
            c(vy + vh)
        );
    }
    let ticks = tick_positions(vx, vx + vw);
    for &t in &ticks {
        let _ = writeln!(
            w,
            r#"<line class="axis" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            c(t as f64),
            c(-tick),
            c(t as f64),
            c(tick)
        );
    }
    let _ = writeln!(w, "</g>");

    for (class, discs) in [("disc-a", discs_a), ("disc-b", discs_b)] {
        let _ = writeln!(w, r#"<g id="{class}">"#);
        for d in discs {
            let _ = writeln!(
                w,
                r#"<circle class="{class}" cx="{}" cy="{}" r="{}"/>"#,
                c(d.center),
                c(0.0),
                c(d.radius)
            );
        }
        let _ = writeln!(w, "</g>");
    }

    if let Some((lo, hi)) = intersection.bounds() {
        let _ = writeln!(
            w,
            r#"<rect class="band" x="{}" y="{}" width="{}" height="{}"/>"#,
            c(lo),
            c(vy),
            c(hi - lo),
            c(vh)
        );
    }

    let _ = writeln!(w, r#"<g id="labels" font-size="{}">"#, c(font));
    for &t in &ticks {
        let _ = writeln!(
            w,
            r#"<text class="label" x="{}" y="{}">{}</text>"#,
            c(t as f64),
            c(tick + font),
            t
        );
    }
    let legend_x = vx + 0.5 * margin;
    for (i, (name, class, n)) in [
        ("A", "legend-a", discs_a.len()),
        ("B", "legend-b", discs_b.len()),
    ]
    .into_iter()
    .enumerate()
    {
        if n == 0 {
            continue;
        }
        let _ = writeln!(
            w,
            r#"<text class="label {class}" x="{}" y="{}">{name}</text>"#,
            c(legend_x),
            c(vy + font * (1.2 + 1.2 * i as f64))
        );
    }
    let _ = writeln!(w, "</g>");
    let _ = writeln!(w, "</svg>");
    s
}

/// Integer tick positions inside `[lo, hi]`, thinned to powers of ten when
/// there would be more than `MAX_TICKS`.
fn tick_positions(lo: f64, hi: f64) -> Vec<i64> {
    let mut spacing = 1.0f64;
    while (hi - lo) / spacing > MAX_TICKS {
        spacing *= 10.0;
    }
    let first = (lo / spacing).ceil() as i64;
    let last = (hi / spacing).floor() as i64;
    let spacing = spacing as i64;
    (first..=last).map(|k| k * spacing).collect()
}
