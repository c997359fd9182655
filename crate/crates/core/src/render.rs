//! SVG drawings of real line arrangements.
//!
//! The disk model sends a projective point to the upper unit hemisphere and then
//! stereographically to the unit disk, so every line becomes a circular arc or a
//! diameter and the line at infinity is the boundary circle. The affine model
//! clips lines to a rectangle in the chart `z = 1`.

use std::fmt::Write as _;

use crate::arith::Backend;
use crate::arrangement::LineArrangement;
use crate::error::{Error, Result};

const SIZE: f64 = 600.0;
const MARGIN: f64 = 20.0;
const ARC_SAMPLES: usize = 256;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Viewport {
    Disk,
    Affine { xmin: f64, xmax: f64, ymin: f64, ymax: f64 },
}

impl Default for Viewport {
    fn default() -> Self {
        Viewport::Disk
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RenderOptions {
    pub viewport: Viewport,
    /// Mark singular points of at least this multiplicity; `None` marks nothing.
    pub mark_multiplicity: Option<usize>,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            viewport: Viewport::Disk,
            mark_multiplicity: Some(3),
        }
    }
}

/// Real coordinates of the lines: exact for rational input, float hints otherwise.
pub fn real_lines(a: &LineArrangement) -> Result<Vec<[f64; 3]>> {
    match a.backend() {
        Backend::Rational => Ok(a.lines().iter().map(|l| l.to_f64().expect("rational")).collect()),
        Backend::Prime(p) => a.hints().map(<[_]>::to_vec).ok_or_else(|| {
            Error::Render(format!("lines over F_{p} carry no real coordinates to draw"))
        }),
    }
}

fn cross(u: [f64; 3], v: [f64; 3]) -> [f64; 3] {
    [
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    ]
}

fn normalize(v: [f64; 3]) -> Option<[f64; 3]> {
    let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
    (n > 1e-12).then(|| [v[0] / n, v[1] / n, v[2] / n])
}

/// Unit representative with `z >= 0`, stereographically projected into the disk.
fn disk_point(v: [f64; 3]) -> Option<(f64, f64)> {
    let mut u = normalize(v)?;
    if u[2] < 0.0 || (u[2] == 0.0 && (u[1] < 0.0 || (u[1] == 0.0 && u[0] < 0.0))) {
        u = [-u[0], -u[1], -u[2]];
    }
    Some((u[0] / (1.0 + u[2]), u[1] / (1.0 + u[2])))
}

fn to_screen_disk((x, y): (f64, f64)) -> (f64, f64) {
    let r = SIZE / 2.0 - MARGIN;
    (SIZE / 2.0 + r * x, SIZE / 2.0 - r * y)
}

fn disk_path(l: [f64; 3]) -> Option<String> {
    let n = normalize(l)?;
    if n[0].abs() < 1e-12 && n[1].abs() < 1e-12 {
        return None;
    }
    // orthonormal basis of the plane orthogonal to n, starting on the equator
    let u = normalize([-n[1], n[0], 0.0])?;
    let w = cross(n, u);
    let w = if w[2] < 0.0 { [-w[0], -w[1], -w[2]] } else { w };
    let mut d = String::new();
    for i in 0..=ARC_SAMPLES {
        let t = std::f64::consts::PI * i as f64 / ARC_SAMPLES as f64;
        let (c, s) = (t.cos(), t.sin());
        let v = [c * u[0] + s * w[0], c * u[1] + s * w[1], c * u[2] + s * w[2]];
        let (x, y) = to_screen_disk(disk_point(v)?);
        let _ = write!(d, "{}{:.3},{:.3}", if i == 0 { "M" } else { " L" }, x, y);
    }
    Some(d)
}

/// Liang-Barsky clip of `a x + b y + c = 0` to the box.
fn clip_affine(l: [f64; 3], xmin: f64, xmax: f64, ymin: f64, ymax: f64) -> Option<[(f64, f64); 2]> {
    let [a, b, c] = l;
    if a.abs() < 1e-12 && b.abs() < 1e-12 {
        return None;
    }
    // point on the line and direction
    let nn = a * a + b * b;
    let (px, py) = (-a * c / nn, -b * c / nn);
    let (dx, dy) = (-b, a);
    let mut t0 = f64::NEG_INFINITY;
    let mut t1 = f64::INFINITY;
    for (p, q) in [(-dx, px - xmin), (dx, xmax - px), (-dy, py - ymin), (dy, ymax - py)] {
        if p.abs() < 1e-15 {
            if q < 0.0 {
                return None;
            }
        } else {
            let r = q / p;
            if p < 0.0 {
                t0 = t0.max(r);
            } else {
                t1 = t1.min(r);
            }
        }
    }
    (t0 < t1).then(|| [(px + t0 * dx, py + t0 * dy), (px + t1 * dx, py + t1 * dy)])
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Render to an SVG document. Output is a pure function of the input.
pub fn render_svg(a: &LineArrangement, opts: &RenderOptions) -> Result<String> {
    let lines = real_lines(a)?;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    if let Some(l) = a.label() {
        let _ = writeln!(out, "  <title>{}</title>", escape(l));
    }
    let _ = writeln!(out, r#"  <rect width="{SIZE}" height="{SIZE}" fill="white"/>"#);
    let mut marks = Vec::new();
    if let Some(k) = opts.mark_multiplicity {
        for s in &a.singular_locus().entries {
            if s.multiplicity() >= k {
                let v = cross(lines[s.lines[0]], lines[s.lines[1]]);
                marks.push((v, s.multiplicity()));
            }
        }
    }
    match opts.viewport {
        Viewport::Disk => {
            let r = SIZE / 2.0 - MARGIN;
            for (i, l) in lines.iter().enumerate() {
                match disk_path(*l) {
                    Some(d) => {
                        let _ = writeln!(
                            out,
                            r#"  <path class="line" data-index="{i}" d="{d}" fill="none" stroke="black" stroke-width="1"/>"#
                        );
                    }
                    None => {
                        let _ = writeln!(
                            out,
                            r#"  <circle class="line infinity" data-index="{i}" cx="{:.3}" cy="{:.3}" r="{r:.3}" fill="none" stroke="black" stroke-width="1"/>"#,
                            SIZE / 2.0,
                            SIZE / 2.0
                        );
                    }
                }
            }
            for (v, m) in marks {
                if let Some(p) = disk_point(v) {
                    let (x, y) = to_screen_disk(p);
                    let _ = writeln!(
                        out,
                        r#"  <circle class="point" data-multiplicity="{m}" cx="{x:.3}" cy="{y:.3}" r="3" fill="red"/>"#
                    );
                }
            }
        }
        Viewport::Affine { xmin, xmax, ymin, ymax } => {
            if !(xmin < xmax && ymin < ymax) {
                return Err(Error::Render("empty viewport".into()));
            }
            let sx = (SIZE - 2.0 * MARGIN) / (xmax - xmin);
            let sy = (SIZE - 2.0 * MARGIN) / (ymax - ymin);
            let screen = |(x, y): (f64, f64)| (MARGIN + (x - xmin) * sx, SIZE - MARGIN - (y - ymin) * sy);
            for (i, l) in lines.iter().enumerate() {
                if let Some([p, q]) = clip_affine(*l, xmin, xmax, ymin, ymax) {
                    let (x1, y1) = screen(p);
                    let (x2, y2) = screen(q);
                    let _ = writeln!(
                        out,
                        r#"  <line class="line" data-index="{i}" x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}" stroke="black" stroke-width="1"/>"#
                    );
                }
            }
            for (v, m) in marks {
                if v[2].abs() < 1e-12 {
                    continue;
                }
                let (x, y) = (v[0] / v[2], v[1] / v[2]);
                if (xmin..=xmax).contains(&x) && (ymin..=ymax).contains(&y) {
                    let (x, y) = screen((x, y));
                    let _ = writeln!(
                        out,
                        r#"  <circle class="point" data-multiplicity="{m}" cx="{x:.3}" cy="{y:.3}" r="3" fill="red"/>"#
                    );
                }
            }
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}
