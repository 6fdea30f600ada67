//! Planar primitives, the minimum red-enclosing rectangle and the
//! eight-region partition around it.
//!
//! Point-based code paths compare raw input coordinates only. The one place
//! where circle geometry needs a tolerance is [`CIRCLE_EPS`] /
//! [`CIRCLE_EPS_SQ`]; every circle routine in the crate uses these two.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Absolute tolerance on coordinates for circle geometry.
pub const CIRCLE_EPS: f64 = 1e-9;
/// Absolute tolerance on squared distances for circle geometry.
pub const CIRCLE_EPS_SQ: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn dist2(&self, other: Point) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        dx * dx + dy * dy
    }
}

/// Axis-aligned rectangle. Edges may be infinite while an instance is being
/// bounded (S_max without a frame); every rectangle returned to callers is
/// finite.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Rect {
    pub xmin: f64,
    pub ymin: f64,
    pub xmax: f64,
    pub ymax: f64,
}

impl Rect {
    pub const fn new(xmin: f64, ymin: f64, xmax: f64, ymax: f64) -> Self {
        Rect {
            xmin,
            ymin,
            xmax,
            ymax,
        }
    }

    pub fn everything() -> Self {
        Rect::new(
            f64::NEG_INFINITY,
            f64::NEG_INFINITY,
            f64::INFINITY,
            f64::INFINITY,
        )
    }

    pub fn width(&self) -> f64 {
        self.xmax - self.xmin
    }

    pub fn height(&self) -> f64 {
        self.ymax - self.ymin
    }

    pub fn area(&self) -> f64 {
        (self.xmax - self.xmin) * (self.ymax - self.ymin)
    }

    pub fn is_valid(&self) -> bool {
        self.xmin <= self.xmax && self.ymin <= self.ymax
    }

    pub fn is_finite(&self) -> bool {
        self.xmin.is_finite()
            && self.ymin.is_finite()
            && self.xmax.is_finite()
            && self.ymax.is_finite()
    }

    pub fn contains_rect(&self, other: &Rect) -> bool {
        self.xmin <= other.xmin
            && self.ymin <= other.ymin
            && self.xmax >= other.xmax
            && self.ymax >= other.ymax
    }

    pub fn intersect(&self, other: &Rect) -> Rect {
        Rect::new(
            self.xmin.max(other.xmin),
            self.ymin.max(other.ymin),
            self.xmax.min(other.xmax),
            self.ymax.min(other.ymax),
        )
    }

    /// Closed containment, used for red points.
    pub fn contains_closed(&self, p: Point) -> bool {
        self.xmin <= p.x && p.x <= self.xmax && self.ymin <= p.y && p.y <= self.ymax
    }

    /// Open-interior containment, used for blue points. A blue point on the
    /// boundary supports the rectangle and is not counted.
    pub fn contains_open(&self, p: Point) -> bool {
        self.xmin < p.x && p.x < self.xmax && self.ymin < p.y && p.y < self.ymax
    }

    /// Squared distance from `p` to the closed rectangle (0 inside).
    pub fn dist2_to(&self, p: Point) -> f64 {
        let dx = if p.x < self.xmin {
            self.xmin - p.x
        } else if p.x > self.xmax {
            p.x - self.xmax
        } else {
            0.0
        };
        let dy = if p.y < self.ymin {
            self.ymin - p.y
        } else if p.y > self.ymax {
            p.y - self.ymax
        } else {
            0.0
        };
        dx * dx + dy * dy
    }

    pub fn corners(&self) -> [f64; 4] {
        [self.xmin, self.ymin, self.xmax, self.ymax]
    }
}

/// Total order used to pick one representative among equal-area optima:
/// larger area first, then lexicographically smaller (xmin, ymin, xmax, ymax).
pub fn better_rect(candidate: &Rect, incumbent: &Rect) -> bool {
    let (ca, ia) = (candidate.area(), incumbent.area());
    if ca != ia {
        return ca > ia;
    }
    candidate.corners() < incumbent.corners()
}

/// Blue obstacle of radius exactly 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UnitCircle {
    pub center: Point,
}

impl UnitCircle {
    pub const RADIUS: f64 = 1.0;

    pub const fn new(x: f64, y: f64) -> Self {
        UnitCircle {
            center: Point::new(x, y),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Region {
    E,
    N,
    W,
    S,
    NE,
    NW,
    SW,
    SE,
    Inside,
}

impl Region {
    pub const SIDES: [Region; 4] = [Region::E, Region::N, Region::W, Region::S];
    pub const QUADRANTS: [Region; 4] = [Region::NE, Region::NW, Region::SW, Region::SE];

    pub fn is_side(self) -> bool {
        matches!(self, Region::E | Region::N | Region::W | Region::S)
    }

    pub fn is_quadrant(self) -> bool {
        matches!(self, Region::NE | Region::NW | Region::SW | Region::SE)
    }

    /// Reflection signs that map this quadrant onto NE: local = (sx * x, sy * y).
    pub fn reflection(self) -> (f64, f64) {
        match self {
            Region::NE => (1.0, 1.0),
            Region::NW => (-1.0, 1.0),
            Region::SW => (-1.0, -1.0),
            Region::SE => (1.0, -1.0),
            other => panic!("{other:?} is not a quadrant"),
        }
    }

    /// Tag of the mirror image across the x-axis.
    pub fn mirror_x_axis(self) -> Region {
        match self {
            Region::N => Region::S,
            Region::S => Region::N,
            Region::NE => Region::SE,
            Region::SE => Region::NE,
            Region::NW => Region::SW,
            Region::SW => Region::NW,
            r => r,
        }
    }

    /// Tag of the mirror image across the y-axis.
    pub fn mirror_y_axis(self) -> Region {
        match self {
            Region::E => Region::W,
            Region::W => Region::E,
            Region::NE => Region::NW,
            Region::NW => Region::NE,
            Region::SE => Region::SW,
            Region::SW => Region::SE,
            r => r,
        }
    }
}

/// Bounding box of the red points.
pub fn smallest_enclosing_rect(red: &[Point]) -> Result<Rect> {
    let first = red
        .first()
        .ok_or_else(|| Error::InvalidInstance("red point set is empty".into()))?;
    let mut r = Rect::new(first.x, first.y, first.x, first.y);
    for p in red {
        if !p.is_finite() {
            return Err(Error::InvalidInstance(format!(
                "non-finite red point {p:?}"
            )));
        }
        r.xmin = r.xmin.min(p.x);
        r.ymin = r.ymin.min(p.y);
        r.xmax = r.xmax.max(p.x);
        r.ymax = r.ymax.max(p.y);
    }
    Ok(r)
}

#[derive(Clone, Copy, PartialEq)]
enum Band {
    Low,
    Mid,
    High,
}

fn band(v: f64, lo: f64, hi: f64) -> Band {
    if v >= hi && v > lo {
        Band::High
    } else if v <= lo && v < hi {
        Band::Low
    } else if v > lo && v < hi {
        Band::Mid
    } else {
        // lo == hi == v: zero-extent S_min, break toward High.
        Band::High
    }
}

/// Region of a blue point relative to `smin`.
///
/// Points strictly outside S_min's lines get the obvious tag. A point lying
/// on one of S_min's lines is tagged by the region whose counting rule
/// matches it (on the east line with y strictly inside the band: `E`; at a
/// corner: the corner quadrant). Points in the open interior are `Inside`.
pub fn classify_point(p: Point, smin: &Rect) -> Region {
    let bx = band(p.x, smin.xmin, smin.xmax);
    let by = band(p.y, smin.ymin, smin.ymax);
    match (bx, by) {
        (Band::Mid, Band::Mid) => Region::Inside,
        (Band::High, Band::Mid) => Region::E,
        (Band::Low, Band::Mid) => Region::W,
        (Band::Mid, Band::High) => Region::N,
        (Band::Mid, Band::Low) => Region::S,
        (Band::High, Band::High) => Region::NE,
        (Band::Low, Band::High) => Region::NW,
        (Band::Low, Band::Low) => Region::SW,
        (Band::High, Band::Low) => Region::SE,
    }
}

/// Region of a unit circle: `Inside` when its disk properly intersects
/// `smin` (such circles are discarded), otherwise the region of its center.
/// A circle tangent to `smin` is kept.
pub fn classify_circle(c: &UnitCircle, smin: &Rect) -> Region {
    if smin.dist2_to(c.center) < 1.0 - CIRCLE_EPS_SQ {
        return Region::Inside;
    }
    let p = c.center;
    let bx = if p.x > smin.xmax {
        Band::High
    } else if p.x < smin.xmin {
        Band::Low
    } else {
        Band::Mid
    };
    let by = if p.y > smin.ymax {
        Band::High
    } else if p.y < smin.ymin {
        Band::Low
    } else {
        Band::Mid
    };
    match (bx, by) {
        (Band::High, Band::Mid) => Region::E,
        (Band::Low, Band::Mid) => Region::W,
        (Band::Mid, Band::High) => Region::N,
        (Band::Mid, Band::Low) => Region::S,
        (Band::High, Band::High) => Region::NE,
        (Band::Low, Band::High) => Region::NW,
        (Band::Low, Band::Low) => Region::SW,
        (Band::High, Band::Low) => Region::SE,
        (Band::Mid, Band::Mid) => Region::Inside,
    }
}

pub fn rect_contains(r: &Rect, p: Point) -> bool {
    r.contains_closed(p)
}

/// True iff the closed rectangle and the closed unit disk share at most
/// boundary points (tangency allowed).
pub fn rect_avoids_circle(r: &Rect, c: &UnitCircle) -> bool {
    r.dist2_to(c.center) >= 1.0 - CIRCLE_EPS_SQ
}

/// Blue points split by region; `Inside` points are dropped.
#[derive(Debug, Clone, Default)]
pub struct Partition {
    pub e: Vec<Point>,
    pub n: Vec<Point>,
    pub w: Vec<Point>,
    pub s: Vec<Point>,
    pub ne: Vec<Point>,
    pub nw: Vec<Point>,
    pub sw: Vec<Point>,
    pub se: Vec<Point>,
    pub discarded: usize,
}

impl Partition {
    pub fn of_points(blue: &[Point], smin: &Rect) -> Self {
        let mut part = Partition::default();
        for &p in blue {
            match classify_point(p, smin) {
                Region::Inside => part.discarded += 1,
                r => part.get_mut(r).push(p),
            }
        }
        part
    }

    pub fn get(&self, r: Region) -> &[Point] {
        match r {
            Region::E => &self.e,
            Region::N => &self.n,
            Region::W => &self.w,
            Region::S => &self.s,
            Region::NE => &self.ne,
            Region::NW => &self.nw,
            Region::SW => &self.sw,
            Region::SE => &self.se,
            Region::Inside => &[],
        }
    }

    fn get_mut(&mut self, r: Region) -> &mut Vec<Point> {
        match r {
            Region::E => &mut self.e,
            Region::N => &mut self.n,
            Region::W => &mut self.w,
            Region::S => &mut self.s,
            Region::NE => &mut self.ne,
            Region::NW => &mut self.nw,
            Region::SW => &mut self.sw,
            Region::SE => &mut self.se,
            Region::Inside => unreachable!(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SMIN: Rect = Rect::new(0.0, 0.0, 2.0, 1.0);

    #[test]
    fn enclosing_rect_examples() {
        let r = smallest_enclosing_rect(&[Point::new(0.0, 0.0), Point::new(2.0, 1.0)]).unwrap();
        assert_eq!(r, Rect::new(0.0, 0.0, 2.0, 1.0));
        let r = smallest_enclosing_rect(&[Point::new(5.0, 5.0)]).unwrap();
        assert_eq!(r, Rect::new(5.0, 5.0, 5.0, 5.0));
        assert_eq!(r.area(), 0.0);
        assert!(matches!(
            smallest_enclosing_rect(&[]),
            Err(Error::InvalidInstance(_))
        ));
    }

    #[test]
    fn region_examples() {
        assert_eq!(classify_point(Point::new(3.0, 0.5), &SMIN), Region::E);
        assert_eq!(classify_point(Point::new(3.0, 2.0), &SMIN), Region::NE);
        assert_eq!(classify_point(Point::new(1.0, 0.5), &SMIN), Region::Inside);
        assert_eq!(classify_point(Point::new(-1.0, -1.0), &SMIN), Region::SW);
        // boundary points: east line inside the band counts as E, corner as NE
        assert_eq!(classify_point(Point::new(2.0, 0.5), &SMIN), Region::E);
        assert_eq!(classify_point(Point::new(2.0, 1.0), &SMIN), Region::NE);
        assert_eq!(classify_point(Point::new(1.0, 1.0), &SMIN), Region::N);
        assert_eq!(
            classify_circle(&UnitCircle::new(2.5, 0.5), &SMIN),
            Region::Inside
        );
        assert_eq!(
            classify_circle(&UnitCircle::new(3.0, 0.5), &SMIN),
            Region::E
        );
        assert_eq!(
            classify_circle(&UnitCircle::new(4.0, 3.0), &SMIN),
            Region::NE
        );
    }

    #[test]
    fn containment_semantics() {
        assert!(rect_contains(&SMIN, Point::new(2.0, 1.0)));
        assert!(!SMIN.contains_open(Point::new(2.0, 0.5)));
        assert!(rect_avoids_circle(&SMIN, &UnitCircle::new(3.0, 0.5)));
        assert!(!rect_avoids_circle(&SMIN, &UnitCircle::new(2.9, 0.5)));
    }

    #[test]
    fn tie_break_prefers_lexicographically_smaller() {
        let a = Rect::new(0.0, 0.0, 3.0, 4.0);
        let b = Rect::new(0.0, 0.0, 4.0, 3.0);
        assert!(better_rect(&a, &b));
        assert!(!better_rect(&b, &a));
    }
}
