//! SVG pictures: plane polytopes clipped to a box, and interval polytopes
//! on number lines.

use std::fmt::Write;

use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::ParseError;
use crate::interval::IntervalPolytope;
use crate::numeric::{int, Point, Rational};
use crate::plane::{BasicPolytope, PlanePolytope};
use crate::text::Cursor;

const PALETTE: [&str; 6] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf",
];
const SIZE: f64 = 480.0;
const MARGIN: f64 = 20.0;

/// An axis-parallel viewing box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClipBox {
    pub xmin: Rational,
    pub ymin: Rational,
    pub xmax: Rational,
    pub ymax: Rational,
}

impl ClipBox {
    /// # Panics
    /// If the box is degenerate.
    pub fn new(xmin: Rational, ymin: Rational, xmax: Rational, ymax: Rational) -> Self {
        assert!(
            xmin < xmax && ymin < ymax,
            "clip box must have positive area"
        );
        ClipBox {
            xmin,
            ymin,
            xmax,
            ymax,
        }
    }

    /// `[-r, r]²`.
    pub fn square(r: i64) -> Self {
        ClipBox::new(int(-r), int(-r), int(r), int(r))
    }

    /// `xmin,ymin,xmax,ymax` with rational entries.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut cur = Cursor::new(text);
        let mut v = Vec::new();
        for k in 0..4 {
            if k > 0 {
                cur.expect(",")?;
            }
            v.push(cur.rational()?);
        }
        cur.finish()?;
        let [xmin, ymin, xmax, ymax]: [Rational; 4] = v.try_into().expect("four entries");
        if xmin >= xmax || ymin >= ymax {
            return Err(ParseError::new(
                0,
                "clip box must have xmin < xmax and ymin < ymax",
            ));
        }
        Ok(ClipBox {
            xmin,
            ymin,
            xmax,
            ymax,
        })
    }

    fn corners(&self) -> Vec<Point> {
        vec![
            Point::xy(self.xmin.clone(), self.ymin.clone()),
            Point::xy(self.xmax.clone(), self.ymin.clone()),
            Point::xy(self.xmax.clone(), self.ymax.clone()),
            Point::xy(self.xmin.clone(), self.ymax.clone()),
        ]
    }
}

fn f(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(0.0)
}

/// The vertices (counter-clockwise) of `part ∩ clip`, exactly. Empty when
/// the intersection has no interior.
pub fn clip_polygon(part: &BasicPolytope, clip: &ClipBox) -> Vec<Point> {
    let mut poly = clip.corners();
    for h in part.constraints() {
        if poly.is_empty() {
            break;
        }
        let mut next = Vec::with_capacity(poly.len() + 1);
        for i in 0..poly.len() {
            let p = &poly[i];
            let q = &poly[(i + 1) % poly.len()];
            let (ep, eq) = (h.eval(p), h.eval(q));
            if !ep.is_positive() {
                next.push(p.clone());
            }
            if (ep.is_negative() && eq.is_positive()) || (ep.is_positive() && eq.is_negative()) {
                let t = &ep / (&ep - &eq);
                let x = p.x() + (q.x() - p.x()) * &t;
                let y = p.y() + (q.y() - p.y()) * &t;
                next.push(Point::xy(x, y));
            }
        }
        next.dedup();
        if next.len() > 1 && next.first() == next.last() {
            next.pop();
        }
        poly = next;
    }
    if poly.len() < 3 || polygon_area2(&poly).is_zero() {
        Vec::new()
    } else {
        poly
    }
}

fn polygon_area2(poly: &[Point]) -> Rational {
    (0..poly.len()).fold(Rational::zero(), |acc, i| {
        let (p, q) = (&poly[i], &poly[(i + 1) % poly.len()]);
        acc + p.x() * q.y() - q.x() * p.y()
    })
}

struct Frame {
    x0: f64,
    y1: f64,
    scale: f64,
}

impl Frame {
    fn new(clip: &ClipBox) -> Self {
        let (w, h) = (f(&clip.xmax) - f(&clip.xmin), f(&clip.ymax) - f(&clip.ymin));
        Frame {
            x0: f(&clip.xmin),
            y1: f(&clip.ymax),
            scale: SIZE / w.max(h),
        }
    }

    fn px(&self, p: &Point) -> (f64, f64) {
        (
            MARGIN + (f(p.x()) - self.x0) * self.scale,
            MARGIN + (self.y1 - f(p.y())) * self.scale,
        )
    }
}

/// Plane polytopes (one colour each) clipped to `clip`, plus optional
/// witness disks `(centre, radius)` drawn as outlined circles.
pub fn render_plane(
    layers: &[(&str, &PlanePolytope)],
    clip: &ClipBox,
    disks: &[(Point, Rational)],
) -> String {
    let frame = Frame::new(clip);
    let (w, h) = (
        (f(&clip.xmax) - f(&clip.xmin)) * frame.scale,
        (f(&clip.ymax) - f(&clip.ymin)) * frame.scale,
    );
    let legend = 18.0 * layers.len() as f64;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{:.0}" height="{:.0}" viewBox="0 0 {:.0} {:.0}">"#,
        w + 2.0 * MARGIN,
        h + 2.0 * MARGIN + legend,
        w + 2.0 * MARGIN,
        h + 2.0 * MARGIN + legend
    );
    let _ = writeln!(
        out,
        r##"<rect x="{MARGIN}" y="{MARGIN}" width="{w:.2}" height="{h:.2}" fill="none" stroke="#999"/>"##
    );
    for (k, (label, poly)) in layers.iter().enumerate() {
        let colour = PALETTE[k % PALETTE.len()];
        let _ = writeln!(
            out,
            r#"<g fill="{colour}" fill-opacity="0.35" stroke="{colour}"><title>{label}</title>"#
        );
        for part in poly.parts() {
            let pts = clip_polygon(part, clip);
            if pts.is_empty() {
                continue;
            }
            let coords: Vec<String> = pts
                .iter()
                .map(|p| {
                    let (x, y) = frame.px(p);
                    format!("{x:.2},{y:.2}")
                })
                .collect();
            let _ = writeln!(out, r#"<polygon points="{}"/>"#, coords.join(" "));
        }
        let _ = writeln!(out, "</g>");
        let ly = h + 2.0 * MARGIN + 18.0 * k as f64 + 12.0;
        let _ = writeln!(
            out,
            r#"<rect x="{MARGIN}" y="{:.2}" width="12" height="12" fill="{colour}" fill-opacity="0.6"/><text x="{:.2}" y="{:.2}" font-size="12" font-family="monospace">{label}</text>"#,
            ly - 10.0,
            MARGIN + 18.0,
            ly
        );
    }
    for (centre, r) in disks {
        let (x, y) = frame.px(centre);
        let _ = writeln!(
            out,
            r#"<circle cx="{x:.2}" cy="{y:.2}" r="{:.2}" fill="none" stroke="black" stroke-dasharray="3 2"/>"#,
            f(r) * frame.scale
        );
    }
    out.push_str("</svg>\n");
    out
}

/// One number line per row over `[lo, hi]`. Rays run to the edge and end in
/// an arrow; closed endpoints are dots.
pub fn render_line(rows: &[(&str, &IntervalPolytope)], lo: &Rational, hi: &Rational) -> String {
    assert!(lo < hi, "empty viewing range");
    let (l, r) = (f(lo), f(hi));
    let label_w = 60.0;
    let scale = SIZE / (r - l);
    let px = |q: f64| label_w + MARGIN + (q - l) * scale;
    let height = MARGIN * 2.0 + 36.0 * rows.len() as f64 + 20.0;
    let width = label_w + SIZE + 2.0 * MARGIN;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}">"#
    );
    let axis_y = MARGIN + 36.0 * rows.len() as f64;
    let _ = writeln!(
        out,
        r##"<line x1="{:.2}" y1="{axis_y:.2}" x2="{:.2}" y2="{axis_y:.2}" stroke="#999"/>"##,
        px(l),
        px(r)
    );
    if r - l <= 40.0 {
        let mut t = l.ceil();
        while t <= r {
            let _ = writeln!(
                out,
                r##"<line x1="{x:.2}" y1="{axis_y:.2}" x2="{x:.2}" y2="{:.2}" stroke="#999"/><text x="{x:.2}" y="{:.2}" font-size="10" text-anchor="middle" font-family="monospace">{t}</text>"##,
                axis_y + 4.0,
                axis_y + 15.0,
                x = px(t)
            );
            t += 1.0;
        }
    }
    for (k, (label, poly)) in rows.iter().enumerate() {
        let colour = PALETTE[k % PALETTE.len()];
        let y = MARGIN + 36.0 * k as f64 + 12.0;
        let _ = writeln!(
            out,
            r#"<text x="{MARGIN}" y="{:.2}" font-size="12" font-family="monospace">{label}</text>"#,
            y + 4.0
        );
        for piece in poly.pieces() {
            let a = piece.lo().map_or(l, |q| f(q).max(l));
            let b = piece.hi().map_or(r, |q| f(q).min(r));
            if a > b {
                continue;
            }
            let _ = writeln!(
                out,
                r#"<line x1="{:.2}" y1="{y:.2}" x2="{:.2}" y2="{y:.2}" stroke="{colour}" stroke-width="5"/>"#,
                px(a),
                px(b)
            );
            for (end, open_ray, dir) in [
                (a, piece.lo().is_none(), -1.0),
                (b, piece.hi().is_none(), 1.0),
            ] {
                let x = px(end);
                if open_ray {
                    let _ = writeln!(
                        out,
                        r#"<polygon points="{:.2},{y:.2} {:.2},{:.2} {:.2},{:.2}" fill="{colour}"/>"#,
                        x + 8.0 * dir,
                        x,
                        y - 6.0,
                        x,
                        y + 6.0
                    );
                } else if end > l && end < r {
                    let _ = writeln!(
                        out,
                        r#"<circle cx="{x:.2}" cy="{y:.2}" r="4" fill="{colour}"/>"#
                    );
                }
            }
        }
    }
    out.push_str("</svg>\n");
    out
}

/// A viewing range covering every finite endpoint of `polys` with a margin
/// of one unit.
pub fn line_range<'a>(
    polys: impl IntoIterator<Item = &'a IntervalPolytope>,
) -> (Rational, Rational) {
    let pts: Vec<Rational> = polys
        .into_iter()
        .flat_map(|p| p.boundary_points())
        .collect();
    let lo = pts.iter().min().cloned().unwrap_or_else(|| int(0)) - int(1);
    let hi = pts.iter().max().cloned().unwrap_or_else(|| int(0)) + int(1);
    (lo, hi)
}
