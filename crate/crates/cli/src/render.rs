//! SVG drawings of a planar body and its inner parallel bodies.

use std::fmt::Write as _;
use std::path::Path;

use innerbody::metrics::{boundary_polygons, inradius};
use innerbody::parallel::{erode_ball, Erosion};
use innerbody::{ConvexBody, Vector};
use serde::Deserialize;

use crate::bodyfile::{self, BodyFile};
use crate::error::{CliError, CliResult};

/// A body given either as a path (relative to the spec file) or inline.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum BodyRef {
    Path(String),
    Inline(BodyFile),
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RenderSpec {
    pub body: BodyRef,
    pub t: Vec<f64>,
    #[serde(default = "default_size")]
    pub size: f64,
    #[serde(default = "default_margin")]
    pub margin: f64,
    #[serde(default = "default_stroke")]
    pub stroke_width: f64,
}

fn default_size() -> f64 {
    480.0
}

fn default_margin() -> f64 {
    24.0
}

fn default_stroke() -> f64 {
    1.5
}

pub fn read_spec(path: &Path) -> CliResult<RenderSpec> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let de = &mut serde_json::Deserializer::from_str(&text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        CliError::Usage(format!("{}: field {}: {}", path.display(), e.path(), e.inner()))
    })
}

/// Loads the referenced body, resolving paths against `base`.
pub fn spec_body(spec: &RenderSpec, base: &Path) -> CliResult<ConvexBody> {
    match &spec.body {
        BodyRef::Path(p) => Ok(bodyfile::load(&base.join(p))?.0),
        BodyRef::Inline(f) => f.to_body(),
    }
}

struct Viewport {
    scale: f64,
    x0: f64,
    y0: f64,
    size: f64,
}

impl Viewport {
    fn fit(body: &ConvexBody, size: f64, margin: f64) -> CliResult<Self> {
        let (mut lo, mut hi) = ([f64::INFINITY; 2], [f64::NEG_INFINITY; 2]);
        for v in body.vertices() {
            for k in 0..2 {
                lo[k] = lo[k].min(v[k]);
                hi[k] = hi[k].max(v[k]);
            }
        }
        let inner = size - 2.0 * margin;
        if !(inner > 0.0) {
            return Err(CliError::Usage("margin leaves no room to draw".into()));
        }
        let span = (hi[0] - lo[0]).max(hi[1] - lo[1]);
        let scale = inner / span;
        // Centre the drawing in the square viewport.
        let x0 = lo[0] - (size / scale - (hi[0] - lo[0])) / 2.0;
        let y0 = lo[1] - (size / scale - (hi[1] - lo[1])) / 2.0;
        Ok(Viewport { scale, x0, y0, size })
    }

    fn map(&self, p: &Vector) -> (f64, f64) {
        ((p[0] - self.x0) * self.scale, self.size - (p[1] - self.y0) * self.scale)
    }
}

fn path_data(poly: &[Vector], vp: &Viewport) -> String {
    let mut d = String::new();
    for (i, p) in poly.iter().enumerate() {
        let (x, y) = vp.map(p);
        let cmd = if i == 0 { "M" } else { " L" };
        write!(d, "{cmd} {x:.6} {y:.6}").unwrap();
    }
    d.push_str(" Z");
    d
}

/// Renders the body, each `Ω_t` (or its collapse point), the dashed inball
/// and the incenter.
pub fn render(body: &ConvexBody, spec: &RenderSpec) -> CliResult<String> {
    if body.dim() != 2 {
        return Err(CliError::Unsupported(body.dim()));
    }
    if spec.t.iter().any(|t| !(*t >= 0.0) || !t.is_finite()) {
        return Err(CliError::Usage("field t: values must be finite and >= 0".into()));
    }
    if spec.t.windows(2).any(|w| w[0] > w[1]) {
        return Err(CliError::Usage("field t: values must be sorted ascending".into()));
    }
    if !(spec.size > 0.0) || !(spec.margin >= 0.0) || !(spec.stroke_width > 0.0) {
        return Err(CliError::Usage("size, margin and stroke_width must be positive".into()));
    }
    let vp = Viewport::fit(body, spec.size, spec.margin)?;
    let ball = inradius(body)?;
    let sw = spec.stroke_width;
    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{s:.6}" height="{s:.6}" viewBox="0 0 {s:.6} {s:.6}">"#,
        s = spec.size
    )
    .unwrap();
    writeln!(out, r#"<g fill="none" stroke-linejoin="round">"#).unwrap();
    let outline = &boundary_polygons(body)[0];
    writeln!(
        out,
        r##"<path class="body" d="{}" stroke="#000000" stroke-width="{sw:.6}"/>"##,
        path_data(outline, &vp)
    )
    .unwrap();
    for &t in &spec.t {
        match erode_ball(body, t)? {
            Erosion::Body(e) => {
                let poly = &boundary_polygons(&e)[0];
                writeln!(
                    out,
                    r##"<path class="parallel" data-t="{t:.6}" d="{}" stroke="#1f5fa8" stroke-width="{sw:.6}"/>"##,
                    path_data(poly, &vp)
                )
                .unwrap();
            }
            Erosion::Collapsed { .. } => {
                let (x, y) = vp.map(&ball.center);
                writeln!(
                    out,
                    r##"<circle class="collapsed" data-t="{t:.6}" cx="{x:.6}" cy="{y:.6}" r="{:.6}" fill="#1f5fa8"/>"##,
                    1.5 * sw
                )
                .unwrap();
            }
        }
    }
    let (cx, cy) = vp.map(&ball.center);
    writeln!(
        out,
        r##"<circle class="inball" cx="{cx:.6}" cy="{cy:.6}" r="{:.6}" stroke="#a83232" stroke-width="{sw:.6}" stroke-dasharray="{:.6} {:.6}"/>"##,
        ball.radius * vp.scale,
        4.0 * sw,
        3.0 * sw
    )
    .unwrap();
    writeln!(
        out,
        r##"<circle class="incenter" cx="{cx:.6}" cy="{cy:.6}" r="{:.6}" fill="#a83232" stroke="none"/>"##,
        2.0 * sw
    )
    .unwrap();
    writeln!(out, "</g>").unwrap();
    writeln!(out, "</svg>").unwrap();
    // Tiny negative coordinates would otherwise print as "-0.000000".
    Ok(out.replace("-0.000000", "0.000000"))
}
