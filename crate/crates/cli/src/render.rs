//! Static SVG drawing of a face: the polygon on a circle, vertex labels and
//! one straight segment per drawn chord.

use std::f64::consts::PI;
use std::fmt::Write as _;

use dissect_core::{Diagonal, Face, Family, Label};

const SIZE: f64 = 640.0;
const RADIUS: f64 = 250.0;
const PALETTE: [&str; 8] = ["#1b6ca8", "#c0392b", "#27ae60", "#8e44ad", "#d35400", "#16a085", "#7f8c8d", "#2c3e50"];

fn point(position: u32, size: u32, radius: f64) -> (f64, f64) {
    // Label 1 at the top, anticlockwise on screen.
    let theta = PI / 2.0 + 2.0 * PI * position as f64 / size as f64;
    (SIZE / 2.0 + radius * theta.cos(), SIZE / 2.0 - radius * theta.sin())
}

/// Fixed precision keeps the output byte-identical across runs.
fn fmt(x: f64) -> String {
    let s = format!("{x:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}

fn label_markup(l: Label, face: &Face) -> String {
    let v = l.signed(face.params());
    if v < 0 {
        format!("<tspan text-decoration=\"overline\">{}</tspan>", -v)
    } else {
        v.to_string()
    }
}

pub fn render_svg(face: &Face) -> String {
    let p = face.params();
    let size = p.polygon_size();
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">"
    );
    let _ = writeln!(out, "<title>{} with {} diagonal(s)</title>", p, face.len());
    let _ = writeln!(out, "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>");

    let outline: Vec<String> = (0..size)
        .map(|k| {
            let (x, y) = point(k, size, RADIUS);
            format!("{},{}", fmt(x), fmt(y))
        })
        .collect();
    let _ = writeln!(
        out,
        "<polygon class=\"outline\" points=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>",
        outline.join(" ")
    );

    for (i, d) in face.diagonals().iter().enumerate() {
        let colour = PALETTE[i % PALETTE.len()];
        let dash = if d.is_diameter() { " stroke-dasharray=\"8 4\"" } else { "" };
        let _ = writeln!(out, "<g class=\"diagonal\" data-diagonal=\"{}\">", d.describe(p));
        for c in d.chords(p) {
            let (x1, y1) = point(c.lo().position(), size, RADIUS);
            let (x2, y2) = point(c.hi().position(), size, RADIUS);
            let _ = writeln!(
                out,
                "<line class=\"chord\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{colour}\" stroke-width=\"2\"{dash}/>",
                fmt(x1),
                fmt(y1),
                fmt(x2),
                fmt(y2)
            );
        }
        let _ = writeln!(out, "</g>");
    }

    let font = if size > 30 { 11 } else { 14 };
    for k in 0..size {
        let (x, y) = point(k, size, RADIUS);
        let _ = writeln!(out, "<circle cx=\"{}\" cy=\"{}\" r=\"3\" fill=\"black\"/>", fmt(x), fmt(y));
        let (tx, ty) = point(k, size, RADIUS + 22.0);
        let label = Label::new(k, p).expect("position in range");
        let _ = writeln!(
            out,
            "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"{font}\" text-anchor=\"middle\" dominant-baseline=\"middle\">{}</text>",
            fmt(tx),
            fmt(ty),
            label_markup(label, face)
        );
    }
    if p.family() == Family::B {
        let (cx, cy) = (SIZE / 2.0, SIZE / 2.0);
        let _ = writeln!(out, "<circle class=\"center\" cx=\"{}\" cy=\"{}\" r=\"2\" fill=\"gray\"/>", fmt(cx), fmt(cy));
    }
    out.push_str("</svg>\n");
    out
}

pub fn chord_count(face: &Face) -> usize {
    face.diagonals().iter().map(|d: &Diagonal| d.chords(face.params()).len()).sum()
}
