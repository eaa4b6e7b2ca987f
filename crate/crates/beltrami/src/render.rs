//! SVG output for scenes.
//!
//! The rendering is deterministic: fixed element order (boundary circle, then
//! scene objects in order), fixed six-decimal coordinate formatting, no
//! timestamps or ids, so identical scenes produce byte-identical files. The
//! `v` axis points up in the model and down in SVG; coordinates are flipped
//! at emission time only.

use std::fmt::Write;

use crate::curves::{equidistant_point, horocycle_point};
use crate::error::Result;
use crate::scene::{Scene, SceneObject};

/// Rendering knobs; `samples` is the polyline resolution per curve.
#[derive(Debug, Clone, Copy)]
pub struct RenderOptions {
    pub samples: usize,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions { samples: 256 }
    }
}

// Arc-position span (units of R) used when flattening equidistants and
// horocycles to polylines; matches curves::horocycle_locus.
const PARAM_SPAN: f64 = 5.0;

fn fmt(x: f64) -> String {
    // collapse sub-resolution values so "-0.000000" never appears
    let x = if x.abs() < 0.5e-6 { 0.0 } else { x };
    format!("{x:.6}")
}

/// Render a scene to SVG with default options.
pub fn render_svg(scene: &Scene) -> Result<String> {
    render_svg_with(scene, &RenderOptions::default())
}

/// Render a scene to SVG.
pub fn render_svg_with(scene: &Scene, opts: &RenderOptions) -> Result<String> {
    let params = &scene.params;
    let a = params.a;
    let mut out = String::new();
    let vb = format!(
        "{} {} {} {}",
        fmt(-1.05 * a),
        fmt(-1.05 * a),
        fmt(2.1 * a),
        fmt(2.1 * a)
    );
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{vb}\" width=\"512\" height=\"512\">"
    );
    let stroke = fmt(0.006 * a);
    let _ = writeln!(
        out,
        "<circle cx=\"0\" cy=\"0\" r=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"{stroke}\"/>",
        fmt(a)
    );

    let polyline = |pts: &[(f64, f64)], close: bool| -> String {
        let body: Vec<String> = pts
            .iter()
            .map(|(x, y)| format!("{},{}", fmt(*x), fmt(-y)))
            .collect();
        let tag = if close { "polygon" } else { "polyline" };
        format!(
            "<{tag} points=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"{stroke}\"/>",
            body.join(" ")
        )
    };

    let n = opts.samples.max(2);
    for obj in &scene.objects {
        match obj {
            SceneObject::Point { point, label } => {
                let (x, y) = (point.u(), -point.v());
                let _ = writeln!(
                    out,
                    "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"black\"/>",
                    fmt(x),
                    fmt(y),
                    fmt(0.012 * a)
                );
                let _ = writeln!(
                    out,
                    "<text x=\"{}\" y=\"{}\" font-size=\"{}\">{label}</text>",
                    fmt(x + 0.02 * a),
                    fmt(y - 0.02 * a),
                    fmt(0.07 * a)
                );
            }
            SceneObject::Geodesic(g) => {
                let [e0, e1] = g.endpoints();
                let (x0, y0) = e0.coords(params);
                let (x1, y1) = e1.coords(params);
                let _ = writeln!(
                    out,
                    "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\" stroke-width=\"{stroke}\"/>",
                    fmt(x0),
                    fmt(-y0),
                    fmt(x1),
                    fmt(-y1)
                );
            }
            SceneObject::Circle(c) => {
                let pts: Vec<(f64, f64)> = c.locus(n, params)?.iter().map(|p| p.coords()).collect();
                let _ = writeln!(out, "{}", polyline(&pts, true));
            }
            SceneObject::Equidistant(e) => {
                let span = PARAM_SPAN * params.r;
                let pts: Vec<(f64, f64)> = (0..n)
                    .map(|i| {
                        let eta = -span + 2.0 * span * i as f64 / (n - 1) as f64;
                        equidistant_point(eta, e.xi, params).coords()
                    })
                    .collect();
                let _ = writeln!(out, "{}", polyline(&pts, false));
            }
            SceneObject::Horocycle(h) => {
                let span = PARAM_SPAN * params.r;
                let pts: Vec<(f64, f64)> = (0..n)
                    .map(|i| {
                        let sigma = -span + 2.0 * span * i as f64 / (n - 1) as f64;
                        horocycle_point(&h.ideal_center, h.rho_offset, sigma, params).coords()
                    })
                    .collect();
                let _ = writeln!(out, "{}", polyline(&pts, false));
            }
            SceneObject::Triangle(t) => {
                let pts = t.vertex_coords(params);
                let _ = writeln!(out, "{}", polyline(&pts, true));
            }
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}
