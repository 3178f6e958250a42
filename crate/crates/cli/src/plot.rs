//! Static SVG picture of a two-variable Newton polygon.
//!
//! Geometry stays in exact rationals end to end; pixel coordinates are
//! fixed-point decimal strings (hundredths) computed with integer
//! arithmetic, so the renderer involves no floating point at all.

use newtide::{rat_from_u64, Exponent, MonomialIdeal, NewtonPolyhedron, PointClass, Rat, Result};
use num_traits::{Signed, Zero};
use std::fmt::Write;

/// Largest exponent that still yields a legible picture.
pub const MAX_EXTENT: u64 = 64;

const SCALE: u64 = 36;
const MARGIN: u64 = 42;

/// Pixel value of a rational, rounded to hundredths.
fn fixed(r: &Rat) -> String {
    let cents = (r * rat_from_u64(100)).round().to_integer();
    let hundred = rat_from_u64(100).to_integer();
    let whole = &cents / &hundred;
    let frac = (&cents % &hundred).abs();
    if frac.is_zero() {
        whole.to_string()
    } else if whole.is_zero() && cents.is_negative() {
        format!("-0.{frac:02}")
    } else {
        format!("{whole}.{frac:02}")
    }
}

struct Frame {
    width: u64,
    height: u64,
    view: [u64; 2],
}

impl Frame {
    fn new(ideal: &MonomialIdeal) -> Frame {
        let bounds = ideal.coordinate_maxima();
        let view = [bounds[0] + 2, bounds[1] + 2];
        Frame {
            width: 2 * MARGIN + view[0] * SCALE,
            height: 2 * MARGIN + view[1] * SCALE,
            view,
        }
    }

    fn px(&self, x: u64) -> u64 {
        MARGIN + x * SCALE
    }

    fn py(&self, y: u64) -> u64 {
        self.height - MARGIN - y * SCALE
    }

    fn px_rat(&self, x: &Rat) -> String {
        fixed(&(rat_from_u64(MARGIN) + x * rat_from_u64(SCALE)))
    }

    fn py_rat(&self, y: &Rat) -> String {
        fixed(&(rat_from_u64(self.height - MARGIN) - y * rat_from_u64(SCALE)))
    }
}

fn lattice_point(x: u64, y: u64) -> Exponent {
    Exponent::new(vec![x, y])
}

/// Boundary chain in pixel space: enters vertically from the top edge
/// above the leftmost vertex, runs through the vertices by increasing
/// first coordinate, and leaves horizontally through the right edge.
fn boundary_chain(frame: &Frame, poly: &NewtonPolyhedron) -> Vec<(String, String)> {
    let mut vertices: Vec<_> = poly.vertices().to_vec();
    vertices.reverse();
    let mut chain = Vec::with_capacity(vertices.len() + 2);
    let first = &vertices[0];
    chain.push((frame.px_rat(&first.coords()[0]), frame.py(frame.view[1]).to_string()));
    for v in &vertices {
        chain.push((frame.px_rat(&v.coords()[0]), frame.py_rat(&v.coords()[1])));
    }
    let last = vertices.last().expect("a nonzero ideal has a vertex");
    chain.push((frame.px(frame.view[0]).to_string(), frame.py_rat(&last.coords()[1])));
    chain
}

fn points_attr(chain: &[(String, String)]) -> String {
    chain
        .iter()
        .map(|(x, y)| format!("{x},{y}"))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn render_svg(ideal: &MonomialIdeal, poly: &NewtonPolyhedron) -> Result<String> {
    let frame = Frame::new(ideal);
    let (w, h) = (frame.width, frame.height);
    let mut svg = String::new();
    let out = &mut svg;
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    )
    .unwrap();
    writeln!(
        out,
        "<desc>Newton polygon: shaded region with dark boundary; gray dots mark lattice \
         points, red disks the generators, open rings the vertices, and blue squares the \
         exponents w with w + (1, 1) strictly inside the region.</desc>"
    )
    .unwrap();
    writeln!(out, r##"<rect width="{w}" height="{h}" fill="#ffffff"/>"##).unwrap();

    let chain = boundary_chain(&frame, poly);
    let mut region = chain.clone();
    region.push((
        frame.px(frame.view[0]).to_string(),
        frame.py(frame.view[1]).to_string(),
    ));
    writeln!(
        out,
        r##"<polygon points="{}" fill="#dde7f3" stroke="none"/>"##,
        points_attr(&region)
    )
    .unwrap();

    writeln!(out, r##"<g fill="#9aa3ad">"##).unwrap();
    for x in 0..=frame.view[0] {
        for y in 0..=frame.view[1] {
            writeln!(
                out,
                r#"<circle cx="{}" cy="{}" r="2"/>"#,
                frame.px(x),
                frame.py(y)
            )
            .unwrap();
        }
    }
    writeln!(out, "</g>").unwrap();

    writeln!(out, r##"<g fill="#2b6cb8">"##).unwrap();
    for x in 0..=frame.view[0] {
        for y in 0..=frame.view[1] {
            let shifted = lattice_point(x, y).to_rat_vec().plus_ones();
            if poly.classify(&shifted)? == PointClass::Interior {
                writeln!(
                    out,
                    r#"<rect x="{}" y="{}" width="8" height="8"/>"#,
                    frame.px(x) - 4,
                    frame.py(y) - 4
                )
                .unwrap();
            }
        }
    }
    writeln!(out, "</g>").unwrap();

    writeln!(
        out,
        r##"<polyline points="{}" fill="none" stroke="#1a1a1a" stroke-width="2"/>"##,
        points_attr(&chain)
    )
    .unwrap();

    // axes with tick marks and labels
    let step = {
        let widest = frame.view[0].max(frame.view[1]);
        if widest <= 20 {
            1
        } else {
            widest.div_ceil(10)
        }
    };
    writeln!(out, r##"<g stroke="#444444" stroke-width="1">"##).unwrap();
    writeln!(
        out,
        r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
        frame.px(0),
        frame.py(0),
        frame.px(frame.view[0]),
        frame.py(0)
    )
    .unwrap();
    writeln!(
        out,
        r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
        frame.px(0),
        frame.py(0),
        frame.px(0),
        frame.py(frame.view[1])
    )
    .unwrap();
    for x in (0..=frame.view[0]).step_by(step as usize) {
        writeln!(
            out,
            r#"<line x1="{0}" y1="{1}" x2="{0}" y2="{2}"/>"#,
            frame.px(x),
            frame.py(0),
            frame.py(0) + 5
        )
        .unwrap();
    }
    for y in (0..=frame.view[1]).step_by(step as usize) {
        writeln!(
            out,
            r#"<line x1="{1}" y1="{0}" x2="{2}" y2="{0}"/>"#,
            frame.py(y),
            frame.px(0) - 5,
            frame.px(0)
        )
        .unwrap();
    }
    writeln!(out, "</g>").unwrap();

    writeln!(
        out,
        r##"<g font-family="monospace" font-size="11" fill="#333333">"##
    )
    .unwrap();
    for x in (0..=frame.view[0]).step_by(step as usize) {
        writeln!(
            out,
            r#"<text x="{}" y="{}" text-anchor="middle">{x}</text>"#,
            frame.px(x),
            frame.py(0) + 18
        )
        .unwrap();
    }
    for y in (0..=frame.view[1]).step_by(step as usize) {
        writeln!(
            out,
            r#"<text x="{}" y="{}" text-anchor="end">{y}</text>"#,
            frame.px(0) - 9,
            frame.py(y) + 4
        )
        .unwrap();
    }
    writeln!(out, "</g>").unwrap();

    writeln!(out, r##"<g fill="#c4341f">"##).unwrap();
    for g in ideal.generators() {
        writeln!(
            out,
            r#"<circle cx="{}" cy="{}" r="4"/>"#,
            frame.px(g.coords()[0]),
            frame.py(g.coords()[1])
        )
        .unwrap();
    }
    writeln!(out, "</g>").unwrap();

    writeln!(
        out,
        r##"<g fill="none" stroke="#1a1a1a" stroke-width="2">"##
    )
    .unwrap();
    for v in poly.vertices() {
        writeln!(
            out,
            r#"<circle cx="{}" cy="{}" r="7"/>"#,
            frame.px_rat(&v.coords()[0]),
            frame.py_rat(&v.coords()[1])
        )
        .unwrap();
    }
    writeln!(out, "</g>").unwrap();
    writeln!(out, "</svg>").unwrap();
    Ok(svg)
}

/// Classification table over the plotted lattice box.
pub fn render_csv(ideal: &MonomialIdeal, poly: &NewtonPolyhedron) -> Result<String> {
    let frame = Frame::new(ideal);
    let mut csv = String::from("x,y,class,multiplier_member\n");
    for x in 0..=frame.view[0] {
        for y in 0..=frame.view[1] {
            let p = lattice_point(x, y).to_rat_vec();
            let class = match poly.classify(&p)? {
                PointClass::Interior => "interior",
                PointClass::Boundary => "boundary",
                PointClass::Exterior => "exterior",
            };
            let member = poly.classify(&p.plus_ones())? == PointClass::Interior;
            writeln!(csv, "{x},{y},{class},{member}").unwrap();
        }
    }
    Ok(csv)
}
