//! SVG figures of instances and answers.
//!
//! Output depends only on the input, element order is fixed, and numbers
//! are printed with four decimals, so figures can be compared byte for byte.

use std::fmt::Write as _;

use crate::circle::envelope::{Element, Envelope};
use crate::circle::CircleSetup;
use crate::error::Result;
use crate::geometry::{smallest_enclosing_rect, Partition, Point, Rect, Region, UnitCircle};
use crate::outlier::{Composition, SideSupports};
use crate::staircase::build_staircases;

const CANVAS: f64 = 640.0;

const STYLE: &str = "\
.red{fill:#d62728}
.blue{fill:#1f77b4}
.disk{fill:#1f77b4;fill-opacity:0.15;stroke:#1f77b4}
.smin{fill:none;stroke:#d62728;stroke-dasharray:4 3}
.smax{fill:none;stroke:#7f7f7f;stroke-dasharray:8 4}
.frame{fill:none;stroke:#bbbbbb}
.stair{fill:none;stroke:#2ca02c}
.env{fill:none;stroke:#9467bd;stroke-width:2}
.answer{fill:#ff7f0e;fill-opacity:0.12;stroke:#ff7f0e;stroke-width:2}
";

/// World-space drawing surface.
struct Scene {
    view: Rect,
    scale: f64,
    body: String,
}

impl Scene {
    fn new(view: Rect) -> Self {
        let scale = CANVAS / view.width().max(view.height());
        Scene {
            view,
            scale,
            body: String::new(),
        }
    }

    /// Stroke widths and radii are given in pixels and divided by the scale.
    fn px(&self, v: f64) -> f64 {
        v / self.scale
    }

    fn clip(&self, r: &Rect) -> Rect {
        r.intersect(&self.view)
    }

    fn rect(&mut self, r: &Rect, class: &str) {
        let r = self.clip(r);
        if !r.is_valid() {
            return;
        }
        let sw = self.px(1.5);
        let _ = writeln!(
            self.body,
            r#"<rect class="{class}" x="{:.4}" y="{:.4}" width="{:.4}" height="{:.4}" stroke-width="{sw:.4}"/>"#,
            r.xmin,
            r.ymin,
            r.width(),
            r.height()
        );
    }

    fn dot(&mut self, p: Point, class: &str) {
        let r = self.px(3.0);
        let _ = writeln!(
            self.body,
            r#"<circle class="{class}" cx="{:.4}" cy="{:.4}" r="{r:.4}"/>"#,
            p.x, p.y
        );
    }

    fn disk(&mut self, c: Point) {
        let sw = self.px(1.0);
        let _ = writeln!(
            self.body,
            r#"<circle class="disk" cx="{:.4}" cy="{:.4}" r="1" stroke-width="{sw:.4}"/>"#,
            c.x, c.y
        );
    }

    fn polyline(&mut self, pts: &[Point], class: &str) {
        if pts.len() < 2 {
            return;
        }
        let sw = self.px(1.5);
        let mut d = String::new();
        for (i, p) in pts.iter().enumerate() {
            let _ = write!(d, "{}{:.4},{:.4}", if i == 0 { "" } else { " " }, p.x, p.y);
        }
        let _ = writeln!(
            self.body,
            r#"<polyline class="{class}" points="{d}" stroke-width="{sw:.4}"/>"#
        );
    }

    fn finish(self) -> String {
        let v = self.view;
        let (w, h) = (v.width() * self.scale, v.height() * self.scale);
        let mut out = String::new();
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.0}" height="{h:.0}" viewBox="0 0 {w:.4} {h:.4}">"#
        );
        let _ = writeln!(out, "<style>\n{STYLE}</style>");
        out.push_str(
            "<!-- y-up: scale(s -s) flips world y; translate puts (xmin, ymax) at the top-left -->\n",
        );
        let _ = writeln!(
            out,
            r#"<g transform="scale({s:.6} {ns:.6}) translate({tx:.4} {ty:.4})">"#,
            s = self.scale,
            ns = -self.scale,
            tx = -v.xmin,
            ty = -v.ymax
        );
        out.push_str(&self.body);
        out.push_str("</g>\n</svg>\n");
        out
    }
}

fn grow(r: Rect, p: Point) -> Rect {
    if !p.is_finite() {
        return r;
    }
    Rect::new(
        r.xmin.min(p.x),
        r.ymin.min(p.y),
        r.xmax.max(p.x),
        r.ymax.max(p.y),
    )
}

fn view_of(pts: impl Iterator<Item = Point>, pad: f64) -> Rect {
    let r = pts.fold(
        Rect::new(
            f64::INFINITY,
            f64::INFINITY,
            f64::NEG_INFINITY,
            f64::NEG_INFINITY,
        ),
        grow,
    );
    let m = pad + 0.05 * r.width().max(r.height());
    Rect::new(r.xmin - m, r.ymin - m, r.xmax + m, r.ymax + m)
}

fn rect_corners(r: &Rect) -> [Point; 2] {
    [Point::new(r.xmin, r.ymin), Point::new(r.xmax, r.ymax)]
}

/// Orthogonal chain of a staircase level, extended to the view edges.
fn stair_path(chain: &[(f64, f64)], q: Region, view: &Rect) -> Vec<Point> {
    let (sx, sy) = q.reflection();
    let far_u = (sx * view.xmin).max(sx * view.xmax);
    let far_v = (sy * view.ymin).max(sy * view.ymax);
    let mut local = Vec::with_capacity(2 * chain.len() + 2);
    let mut last_v = far_v;
    for &(u, v) in chain {
        local.push((u, last_v));
        local.push((u, v));
        last_v = v;
    }
    if let Some(&(_, v)) = chain.last() {
        local.push((far_u, v));
    }
    local
        .into_iter()
        .map(|(u, v)| Point::new(sx * u, sy * v).clamp_to(view))
        .collect()
}

trait Clamp {
    fn clamp_to(self, r: &Rect) -> Self;
}

impl Clamp for Point {
    fn clamp_to(self, r: &Rect) -> Point {
        Point::new(self.x.clamp(r.xmin, r.xmax), self.y.clamp(r.ymin, r.ymax))
    }
}

/// Point instance: S_min, the zero-outlier S_max, the `0..=k` staircases of
/// every quadrant and the answer.
pub fn points_figure(
    red: &[Point],
    blue: &[Point],
    k: usize,
    frame: Option<Rect>,
    answer: Option<&Rect>,
) -> Result<String> {
    let smin = smallest_enclosing_rect(red)?;
    let part = Partition::of_points(blue, &smin);
    let mut smax = SideSupports::new(&part).smax(&Composition::default());
    if let Some(f) = frame {
        smax = smax.intersect(&f);
    }
    let extra = frame
        .iter()
        .chain(answer)
        .flat_map(rect_corners)
        .collect::<Vec<_>>();
    let view = view_of(red.iter().chain(blue).chain(extra.iter()).copied(), 1.0);
    let mut scene = Scene::new(view);
    if let Some(f) = frame {
        scene.rect(&f, "frame");
    }
    if let Some(a) = answer {
        scene.rect(a, "answer");
    }
    scene.rect(&smax, "smax");
    scene.rect(&smin, "smin");
    for q in Region::QUADRANTS {
        let set = build_staircases(part.get(q), q, k);
        for t in 0..=set.k() {
            let path = stair_path(&set.local_chain(t), q, &view);
            scene.polyline(&path, "stair");
        }
    }
    for &p in blue {
        scene.dot(p, "blue");
    }
    for &p in red {
        scene.dot(p, "red");
    }
    Ok(scene.finish())
}

fn envelope_path(env: &Envelope) -> Vec<Vec<Point>> {
    env.elements
        .iter()
        .map(|e| {
            let n = match e {
                Element::Arc { .. } => 24,
                Element::Segment { .. } => 1,
            };
            (0..=n)
                .map(|j| env.element_point(e, j as f64 / n as f64))
                .collect()
        })
        .collect()
}

/// Circle instance: the disks, S_min, S_max, the four envelopes and the
/// answer.
pub fn circles_figure(
    red: &[Point],
    circles: &[UnitCircle],
    frame: Option<Rect>,
    answer: Option<&Rect>,
) -> Result<String> {
    let setup = CircleSetup::new(red, circles, frame)?;
    let extra = frame
        .iter()
        .chain(answer)
        .chain(std::iter::once(&setup.smax))
        .flat_map(rect_corners)
        .collect::<Vec<_>>();
    let view = view_of(
        red.iter()
            .chain(circles.iter().map(|c| &c.center))
            .chain(extra.iter())
            .copied(),
        1.5,
    );
    let mut scene = Scene::new(view);
    if let Some(f) = frame {
        scene.rect(&f, "frame");
    }
    if let Some(a) = answer {
        scene.rect(a, "answer");
    }
    for c in circles {
        scene.disk(c.center);
    }
    scene.rect(&setup.smax, "smax");
    scene.rect(&setup.smin, "smin");
    for env in &setup.envelopes {
        for part in envelope_path(env) {
            scene.polyline(&part, "env");
        }
    }
    for &p in red {
        scene.dot(p, "red");
    }
    Ok(scene.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figures_are_deterministic() {
        let red = [Point::new(0.0, 0.0), Point::new(2.0, 1.0)];
        let blue = [
            Point::new(4.0, 3.0),
            Point::new(-1.0, 0.5),
            Point::new(3.0, -2.0),
        ];
        let a = points_figure(&red, &blue, 1, None, None).unwrap();
        let b = points_figure(&red, &blue, 1, None, None).unwrap();
        assert_eq!(a, b);
        assert!(a.contains("y-up"));
        assert_eq!(a.matches("class=\"stair\"").count(), 2);

        let disks = [
            UnitCircle::new(4.0, 0.5),
            UnitCircle::new(-2.0, 0.5),
            UnitCircle::new(1.0, 3.0),
            UnitCircle::new(1.0, -2.0),
            UnitCircle::new(3.5, 2.5),
        ];
        let c = circles_figure(&red, &disks, None, None).unwrap();
        assert_eq!(c, circles_figure(&red, &disks, None, None).unwrap());
        assert_eq!(c.matches("class=\"disk\"").count(), 5);
        assert!(c.contains("class=\"env\""));
    }
}
