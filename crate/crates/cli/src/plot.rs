//! SVG figures of the gon: the circle, its accumulation points, the
//! embedded points of a window, chords for arcs and outer bands for
//! intervals.

use std::fmt::Write;

use zgon_core::rep::Interval;
use zgon_core::stable::{self, ArTriangle};
use zgon_core::zgon::{Angle, Embedding};
use zgon_core::{enumerate, Arc, GonConfig};

const SIZE: f64 = 520.0;
const CENTER: f64 = SIZE / 2.0;
const RADIUS: f64 = 200.0;
const PLUS: &str = "#2b6cb0";
const MINUS: &str = "#c05621";

#[derive(Debug, Clone, Copy)]
pub enum Object {
    Arc(Arc),
    Interval(Interval),
}

pub struct Figure<'a> {
    pub cfg: &'a GonConfig,
    pub window: i64,
    pub objects: &'a [Object],
    pub hammocks: bool,
    pub triangle: Option<ArTriangle>,
}

/// Position at `t` (units of π, counterclockwise from the positive x axis).
fn at(t: Angle, r: f64) -> (f64, f64) {
    let th = t.to_radians_f64();
    (CENTER + r * th.cos(), CENTER - r * th.sin())
}

fn at_f64(th: f64, r: f64) -> (f64, f64) {
    (CENTER + r * th.cos(), CENTER - r * th.sin())
}

impl Figure<'_> {
    pub fn render(&self) -> String {
        let emb = Embedding::standard(self.cfg);
        let mut s = String::new();
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
        );
        let _ = writeln!(
            s,
            r#"<defs><pattern id="hatch" width="6" height="6" patternUnits="userSpaceOnUse" patternTransform="rotate(45)"><line x1="0" y1="0" x2="0" y2="6" stroke="{MINUS}" stroke-width="1.5"/></pattern></defs>"#
        );
        let _ = writeln!(
            s,
            r#"<circle class="gon" cx="{CENTER}" cy="{CENTER}" r="{RADIUS}" fill="none" stroke="black"/>"#
        );
        if self.hammocks {
            for obj in self.objects {
                if let Object::Arc(a) = obj {
                    self.hammock_regions(&mut s, &emb, a);
                }
            }
        }
        for p in 1..=self.cfg.m() {
            let t = emb.accumulation(p);
            let (x1, y1) = at(t, RADIUS - 12.0);
            let (x2, y2) = at(t, RADIUS + 12.0);
            let (lx, ly) = at(t, RADIUS + 26.0);
            let _ = writeln!(
                s,
                r#"<line class="accumulation" x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="red" stroke-width="2"/>"#
            );
            let _ = writeln!(
                s,
                r#"<text x="{lx:.2}" y="{ly:.2}" font-size="12" text-anchor="middle">acc {p}</text>"#
            );
        }
        for z in self.cfg.window_points(self.window) {
            let (x, y) = at(emb.angle(z), RADIUS);
            let _ = writeln!(
                s,
                r#"<circle class="point" cx="{x:.2}" cy="{y:.2}" r="2.5"><title>{z}</title></circle>"#
            );
        }
        for obj in self.objects {
            match obj {
                Object::Arc(a) => chord(&mut s, &emb, a, "arc", "black", 2.0, None),
                Object::Interval(u) => band(&mut s, &emb, u),
            }
        }
        if let Some(t) = &self.triangle {
            chord(&mut s, &emb, &t.left, "triangle-end", "black", 2.0, None);
            chord(&mut s, &emb, &t.right, "triangle-end", "black", 2.0, None);
            for x in &t.middle {
                chord(
                    &mut s,
                    &emb,
                    x,
                    "triangle-middle",
                    "black",
                    2.0,
                    Some("2,4"),
                );
            }
        }
        s.push_str("</svg>\n");
        s
    }

    /// Shades the region swept by the members of `H⁺(a)` (solid) and of
    /// `H⁻(Σ⁻¹a)` (hatched) among the windowed arcs.
    fn hammock_regions(&self, s: &mut String, emb: &Embedding, a: &Arc) {
        let arcs = enumerate::windowed_arcs(self.cfg, self.window);
        let plus: Vec<Arc> = arcs
            .iter()
            .copied()
            .filter(|b| stable::in_plus(a, b))
            .collect();
        let minus: Vec<Arc> = arcs
            .iter()
            .copied()
            .filter(|b| stable::in_minus(a, b))
            .collect();
        region(s, emb, &plus, "hammock-plus", PLUS, 0.35);
        region(s, emb, &minus, "hammock-minus", "url(#hatch)", 1.0);
        for b in &plus {
            chord(s, emb, b, "member-plus", PLUS, 0.6, None);
        }
        for b in &minus {
            chord(s, emb, b, "member-minus", MINUS, 0.6, Some("3,3"));
        }
    }
}

fn chord(
    s: &mut String,
    emb: &Embedding,
    a: &Arc,
    class: &str,
    color: &str,
    width: f64,
    dash: Option<&str>,
) {
    let (x1, y1) = at(emb.angle(a.a1), RADIUS);
    let (x2, y2) = at(emb.angle(a.a2), RADIUS);
    let dash = dash
        .map(|d| format!(r#" stroke-dasharray="{d}""#))
        .unwrap_or_default();
    let _ = writeln!(
        s,
        r#"<line class="{class}" x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="{color}" stroke-width="{width}"{dash}><title>{a}</title></line>"#
    );
}

/// The convex hull of the members' endpoints; points on a circle are in
/// convex position, so sorting by angle gives the hull.
fn region(s: &mut String, emb: &Embedding, members: &[Arc], class: &str, fill: &str, opacity: f64) {
    let mut ends: Vec<Angle> = members
        .iter()
        .flat_map(|b| [emb.angle(b.a1), emb.angle(b.a2)])
        .collect();
    ends.sort();
    ends.dedup();
    if ends.len() < 3 {
        return;
    }
    let pts: Vec<String> = ends
        .iter()
        .map(|&t| {
            let (x, y) = at(t, RADIUS);
            format!("{x:.2},{y:.2}")
        })
        .collect();
    let _ = writeln!(
        s,
        r#"<polygon class="{class}" points="{}" fill="{fill}" fill-opacity="{opacity}" stroke="none"/>"#,
        pts.join(" ")
    );
}

/// The interval `(u1, u2 + 2hπ]` as a band just outside the circle,
/// spiralling outwards when it wraps more than once.
fn band(s: &mut String, emb: &Embedding, u: &Interval) {
    let start = emb.angle(u.u1).to_radians_f64();
    let end = (emb.angle(u.u2) + Angle::turns(u.h as i64)).to_radians_f64();
    let steps = ((end - start) / 0.02).ceil().max(1.0) as usize;
    let pts: Vec<String> = (0..=steps)
        .map(|k| {
            let th = start + (end - start) * k as f64 / steps as f64;
            let r = RADIUS + 14.0 + 8.0 * (th - start) / std::f64::consts::TAU;
            let (x, y) = at_f64(th, r);
            format!("{x:.2},{y:.2}")
        })
        .collect();
    let _ = writeln!(
        s,
        r#"<polyline class="interval" points="{}" fill="none" stroke="green" stroke-width="3"><title>{u}</title></polyline>"#,
        pts.join(" ")
    );
}
