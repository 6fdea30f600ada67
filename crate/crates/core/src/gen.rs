//! Seeded random instances.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Point, Rect};
use crate::io::InstanceFile;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Points,
    Circles,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Layout {
    Uniform,
    Clustered,
    StaircaseAdversarial,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenParams {
    pub kind: Kind,
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub seed: u64,
    pub layout: Layout,
    /// Sampling box and instance frame. `None` picks a default box from
    /// `m` and writes it as the frame.
    pub frame: Option<Rect>,
    /// Omit the frame from the written instance.
    pub unframed: bool,
}

impl GenParams {
    pub fn points(n: usize, m: usize, k: usize, seed: u64, layout: Layout) -> Self {
        GenParams {
            kind: Kind::Points,
            n,
            m,
            k,
            seed,
            layout,
            frame: None,
            unframed: false,
        }
    }

    pub fn circles(n: usize, m: usize, seed: u64, layout: Layout) -> Self {
        GenParams {
            kind: Kind::Circles,
            n,
            m,
            k: 0,
            seed,
            layout,
            frame: None,
            unframed: false,
        }
    }

    fn canvas(&self) -> Rect {
        if let Some(f) = self.frame {
            return f;
        }
        match self.kind {
            Kind::Points => Rect::new(0.0, 0.0, 100.0, 100.0),
            Kind::Circles => {
                let side = (6.0 + 3.0 * (self.m as f64).sqrt()).round();
                Rect::new(0.0, 0.0, side, side)
            }
        }
    }
}

const MAX_ATTEMPTS: usize = 10_000;

/// Deterministic instance for the given parameters.
///
/// Red points fill the middle fifth of the canvas. Point instances use an
/// integer grid so that shared coordinates occur often; the blue antichain
/// keeps full precision, since snapping would collapse it. Circle centers are
/// rejected while their disk would cut the red bounding box.
pub fn generate(p: &GenParams) -> Result<InstanceFile> {
    let canvas = p.canvas();
    if !canvas.is_finite() || canvas.width() <= 0.0 || canvas.height() <= 0.0 {
        return Err(Error::InvalidInstance(format!(
            "unusable canvas {canvas:?}"
        )));
    }
    if p.n == 0 {
        return Err(Error::InvalidInstance("n must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let (w, h) = (canvas.width(), canvas.height());
    let core = Rect::new(
        canvas.xmin + 0.4 * w,
        canvas.ymin + 0.4 * h,
        canvas.xmin + 0.6 * w,
        canvas.ymin + 0.6 * h,
    );
    let snap = |v: f64| if p.kind == Kind::Points { v.round() } else { v };
    let red: Vec<Point> = (0..p.n)
        .map(|_| {
            Point::new(
                snap(rng.gen_range(core.xmin..=core.xmax)),
                snap(rng.gen_range(core.ymin..=core.ymax)),
            )
        })
        .collect();
    let smin = bbox(&red);

    let sample = |rng: &mut ChaCha8Rng, i: usize| -> Point {
        match (p.kind, p.layout) {
            (Kind::Circles, Layout::Clustered) => {
                // a ring hugging the red box, so corners interact
                let gap: f64 = rng.gen_range(1.0..3.5);
                let a: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
                let (hx, hy) = (0.5 * smin.width() + gap, 0.5 * smin.height() + gap);
                let cx = 0.5 * (smin.xmin + smin.xmax);
                let cy = 0.5 * (smin.ymin + smin.ymax);
                Point::new(
                    (cx + hx * a.cos() * std::f64::consts::SQRT_2).clamp(canvas.xmin, canvas.xmax),
                    (cy + hy * a.sin() * std::f64::consts::SQRT_2).clamp(canvas.ymin, canvas.ymax),
                )
            }
            (Kind::Circles, Layout::StaircaseAdversarial) => {
                // an anti-diagonal chain per corner; every circle reaches the envelope
                let corner = [
                    (smin.xmax, smin.ymax, 1.0, 1.0),
                    (smin.xmin, smin.ymax, -1.0, 1.0),
                    (smin.xmin, smin.ymin, -1.0, -1.0),
                    (smin.xmax, smin.ymin, 1.0, -1.0),
                ][i % 4];
                let reach = 0.35 * w.min(h);
                let a: f64 = rng.gen_range(0.0..=reach);
                let jitter: f64 = rng.gen_range(-0.05..0.05);
                Point::new(
                    corner.0 + corner.2 * (a + jitter),
                    corner.1 + corner.3 * (reach - a + jitter),
                )
            }
            (_, layout) => match layout {
                Layout::Uniform => Point::new(
                    rng.gen_range(canvas.xmin..=canvas.xmax),
                    rng.gen_range(canvas.ymin..=canvas.ymax),
                ),
                Layout::Clustered => {
                    // a handful of hot spots, fixed by the first draws of the stream
                    let c = i % 4;
                    let (cx, cy) = [(0.2, 0.3), (0.75, 0.2), (0.8, 0.8), (0.25, 0.7)][c];
                    let r: f64 = rng.gen_range(0.0..0.15);
                    let a: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
                    Point::new(
                        (canvas.xmin + w * (cx + r * a.cos())).clamp(canvas.xmin, canvas.xmax),
                        (canvas.ymin + h * (cy + r * a.sin())).clamp(canvas.ymin, canvas.ymax),
                    )
                }
                Layout::StaircaseAdversarial => {
                    // anti-diagonal of one quadrant, rotating through the four
                    let q = i % 4;
                    let s: f64 = rng.gen_range(0.0..1.0);
                    let (ux, uy) = (0.6 + 0.4 * s, 1.0 - 0.4 * s);
                    let (x, y) = match q {
                        0 => (ux, uy),
                        1 => (1.0 - ux, uy),
                        2 => (1.0 - ux, 1.0 - uy),
                        _ => (ux, 1.0 - uy),
                    };
                    Point::new(canvas.xmin + w * x, canvas.ymin + h * y)
                }
            },
        }
    };

    let mut blue = Vec::with_capacity(p.m);
    let mut attempts = 0;
    while blue.len() < p.m {
        attempts += 1;
        if attempts > MAX_ATTEMPTS + p.m * 100 {
            return Err(Error::InvalidInstance(
                "could not place the requested circles outside the red bounding box".into(),
            ));
        }
        let q = sample(&mut rng, blue.len());
        let q = match p.kind {
            Kind::Points => {
                if p.layout == Layout::StaircaseAdversarial {
                    if smin.contains_closed(q) {
                        continue;
                    }
                    q
                } else {
                    Point::new(snap(q.x), snap(q.y))
                }
            }
            Kind::Circles => {
                if smin.dist2_to(q) < 1.0 {
                    continue;
                }
                q
            }
        };
        blue.push(q);
    }

    let pairs = |v: &[Point]| v.iter().map(|p| [p.x, p.y]).collect::<Vec<_>>();
    let mut inst = InstanceFile {
        red: pairs(&red),
        frame: (!p.unframed).then(|| canvas.corners()),
        ..Default::default()
    };
    match p.kind {
        Kind::Points => {
            inst.blue_points = Some(pairs(&blue));
            inst.k = Some(p.k);
        }
        Kind::Circles => inst.blue_circles = Some(pairs(&blue)),
    }
    Ok(inst)
}

fn bbox(v: &[Point]) -> Rect {
    v.iter().fold(
        Rect::new(
            f64::INFINITY,
            f64::INFINITY,
            f64::NEG_INFINITY,
            f64::NEG_INFINITY,
        ),
        |r, p| {
            Rect::new(
                r.xmin.min(p.x),
                r.ymin.min(p.y),
                r.xmax.max(p.x),
                r.ymax.max(p.y),
            )
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_bytes() {
        for layout in [
            Layout::Uniform,
            Layout::Clustered,
            Layout::StaircaseAdversarial,
        ] {
            let p = GenParams::points(5, 30, 2, 7, layout);
            assert_eq!(
                generate(&p).unwrap().render(),
                generate(&p).unwrap().render()
            );
            let c = GenParams::circles(4, 8, 7, layout);
            assert_eq!(
                generate(&c).unwrap().render(),
                generate(&c).unwrap().render()
            );
        }
        let a = generate(&GenParams::points(5, 30, 2, 7, Layout::Uniform)).unwrap();
        let b = generate(&GenParams::points(5, 30, 2, 8, Layout::Uniform)).unwrap();
        assert_ne!(a, b);
    }

    #[test]
    fn circles_stay_clear_of_red_box() {
        for seed in 0..50 {
            let inst = generate(&GenParams::circles(5, 10, seed, Layout::Uniform)).unwrap();
            let smin = bbox(&inst.red_points());
            for c in inst.circles() {
                assert!(smin.dist2_to(c.center) >= 1.0);
            }
        }
    }
}
