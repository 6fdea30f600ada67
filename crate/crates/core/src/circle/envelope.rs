//! Dominating envelopes: per quadrant, the outermost positions a rectangle
//! corner can reach without entering a circle.
//!
//! Everything is computed in the quadrant's local frame (reflected onto NE,
//! see [`Region::reflection`]), where a circle centered at `(cu, cv)` caps
//! the corner height at
//!
//! ```text
//! φ(u) = +inf                         u <= cu - 1
//!        cv - sqrt(1 - (cu - u)²)     cu - 1 < u < cu
//!        cv - 1                       u >= cu
//! ```
//!
//! The envelope is the lower envelope of these caps and of the S_max top,
//! restricted to the abscissae where it stays above S_min's corner.

use serde::Serialize;

use crate::geometry::{Point, Rect, Region, UnitCircle};

/// Height function of one envelope piece.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum Func {
    /// Horizontal segment. `circle` is the circle whose bottom it is, or
    /// `None` for the S_max top.
    Flat { v: f64, circle: Option<usize> },
    /// Lower-left quarter of circle `circle` (index into [`Envelope::circles`]).
    Arc { circle: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Piece {
    pub lo: f64,
    pub hi: f64,
    pub func: Func,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BreakKind {
    Plain,
    /// A corner placed here cannot move outward in any direction.
    Corner,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Breakpoint {
    /// World coordinates.
    pub at: Point,
    pub kind: BreakKind,
}

/// Envelope element in world coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum Element {
    /// Arc of circle `circle` between two angles, measured as in
    /// [`crate::circle::arc`]: the point is `center + R(-sin θ, -cos θ)`
    /// with `R` the quadrant reflection.
    Arc {
        circle: usize,
        theta: (f64, f64),
    },
    Segment {
        from: Point,
        to: Point,
    },
}

/// How two consecutive envelope circles meet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EnvelopeCase {
    /// The arcs cross.
    A,
    /// Bottom of the first, then a horizontal segment onto the second.
    B,
    /// A vertical drop from the first onto the left end of the second.
    C,
    /// Bottom of the first, horizontal segment, vertical drop onto the
    /// left end of the second.
    D,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Transition {
    pub first: usize,
    pub second: usize,
    pub case: EnvelopeCase,
    /// The corner breakpoint created by the pair, world coordinates.
    pub corner: Point,
}

#[derive(Debug, Clone, Serialize)]
pub struct Envelope {
    pub quadrant: Region,
    /// Circles of the quadrant, world coordinates, sorted by local abscissa.
    pub circles: Vec<UnitCircle>,
    /// S_min corner, local.
    pub origin: (f64, f64),
    /// S_max corner, local.
    pub limit: (f64, f64),
    pub pieces: Vec<Piece>,
    pub elements: Vec<Element>,
    pub breakpoints: Vec<Breakpoint>,
    pub transitions: Vec<Transition>,
    #[serde(skip)]
    local: Vec<(f64, f64)>,
}

fn quadrant_corner(r: &Rect, q: Region) -> Point {
    match q {
        Region::NE => Point::new(r.xmax, r.ymax),
        Region::NW => Point::new(r.xmin, r.ymax),
        Region::SW => Point::new(r.xmin, r.ymin),
        Region::SE => Point::new(r.xmax, r.ymin),
        other => panic!("{other:?} is not a quadrant"),
    }
}

fn arc_height(c: (f64, f64), u: f64) -> f64 {
    let d = c.0 - u;
    c.1 - (1.0 - d * d).max(0.0).sqrt()
}

/// Abscissae in `(lo, hi)` where two lower-left arcs cross.
fn arc_crossings(a: (f64, f64), b: (f64, f64), lo: f64, hi: f64) -> Vec<f64> {
    let (dx, dy) = (b.0 - a.0, b.1 - a.1);
    let d2 = dx * dx + dy * dy;
    if d2 == 0.0 || d2 > 4.0 {
        return Vec::new();
    }
    let half = 0.5;
    let h2 = 1.0 - d2 / 4.0;
    let h = h2.max(0.0).sqrt();
    let d = d2.sqrt();
    let (mx, my) = (a.0 + half * dx, a.1 + half * dy);
    let mut out = Vec::new();
    for s in [-1.0, 1.0] {
        let (x, y) = (mx + s * h * (-dy) / d, my + s * h * dx / d);
        if x > lo && x < hi && y <= a.1 && y <= b.1 && x <= a.0 && x <= b.0 {
            out.push(x);
        }
    }
    out
}

impl Envelope {
    /// Height of `func` at local abscissa `u`.
    pub fn eval(&self, func: Func, u: f64) -> f64 {
        match func {
            Func::Flat { v, .. } => v,
            Func::Arc { circle } => arc_height(self.local[circle], u),
        }
    }

    /// Local center of circle `i`.
    pub fn local_center(&self, i: usize) -> (f64, f64) {
        self.local[i]
    }

    pub fn to_world(&self, u: f64, v: f64) -> Point {
        let (sx, sy) = self.quadrant.reflection();
        Point::new(sx * u, sy * v)
    }

    pub fn to_local(&self, p: Point) -> (f64, f64) {
        let (sx, sy) = self.quadrant.reflection();
        (sx * p.x, sy * p.y)
    }

    /// Range of corner abscissae that keep the corner outside every circle
    /// and not below S_min.
    pub fn domain(&self) -> (f64, f64) {
        (self.pieces[0].lo, self.pieces[self.pieces.len() - 1].hi)
    }

    /// Highest feasible corner ordinate at `u`, or `None` outside the domain.
    pub fn height(&self, u: f64) -> Option<f64> {
        let (lo, hi) = self.domain();
        if u < lo || u > hi {
            return None;
        }
        let i = self
            .pieces
            .partition_point(|p| p.hi < u)
            .min(self.pieces.len() - 1);
        Some(self.eval(self.pieces[i].func, u))
    }

    /// Piece index covering `u` (the left one at a shared end).
    pub fn piece_at(&self, u: f64) -> usize {
        self.pieces
            .partition_point(|p| p.hi < u)
            .min(self.pieces.len() - 1)
    }

    /// World rectangle spanned by S_min's corner and the local point `(u, v)`.
    pub fn corner_rect(&self, u: f64, v: f64) -> Rect {
        let a = self.to_world(self.origin.0, self.origin.1);
        let b = self.to_world(u, v);
        Rect::new(a.x.min(b.x), a.y.min(b.y), a.x.max(b.x), a.y.max(b.y))
    }

    /// The rectangle between S_min's corner and the world point `p` avoids
    /// every circle in `circles`.
    pub fn corner_is_empty(&self, p: Point, circles: &[UnitCircle]) -> bool {
        let (u, v) = self.to_local(p);
        let r = self.corner_rect(u, v);
        circles.iter().all(|c| r.dist2_to(c.center) >= 1.0 - 1e-9)
    }

    /// Moving the world point `p` outward by `eps` along both axes makes
    /// its corner rectangle hit a circle or leave S_max.
    pub fn corner_is_maximal(&self, p: Point, circles: &[UnitCircle], eps: f64) -> bool {
        let (u, v) = self.to_local(p);
        let (u, v) = (u + eps, v + eps);
        if u > self.limit.0 || v > self.limit.1 {
            return true;
        }
        let r = self.corner_rect(u, v);
        circles.iter().any(|c| r.dist2_to(c.center) < 1.0 - 1e-12)
    }

    /// Point at parameter `t` in `[0, 1]` along an element, world coordinates.
    pub fn element_point(&self, e: &Element, t: f64) -> Point {
        match *e {
            Element::Arc { circle, theta } => {
                let th = theta.0 + t * (theta.1 - theta.0);
                let c = self.local[circle];
                self.to_world(c.0 - th.sin(), c.1 - th.cos())
            }
            Element::Segment { from, to } => {
                Point::new(from.x + t * (to.x - from.x), from.y + t * (to.y - from.y))
            }
        }
    }

    /// `n` points spread over all elements, world coordinates.
    pub fn sample(&self, n: usize) -> Vec<Point> {
        if self.elements.is_empty() || n == 0 {
            return Vec::new();
        }
        let per = n.div_ceil(self.elements.len()).max(1);
        let mut out = Vec::with_capacity(per * self.elements.len());
        for e in &self.elements {
            for j in 0..per {
                let t = if per == 1 {
                    0.5
                } else {
                    j as f64 / (per - 1) as f64
                };
                out.push(self.element_point(e, t));
            }
        }
        out.truncate(n.max(1));
        out
    }
}

fn same_func(a: Func, b: Func) -> bool {
    match (a, b) {
        (Func::Arc { circle: x }, Func::Arc { circle: y }) => x == y,
        (Func::Flat { v: x, circle: cx }, Func::Flat { v: y, circle: cy }) => x == y && cx == cy,
        _ => false,
    }
}

/// Lower envelope of the circles' caps and the S_max top, clipped to the
/// S_max corner and to S_min's corner height.
///
/// Circles are merged one at a time in order of their local abscissa; each
/// merge walks the current pieces once, splitting them where the new cap
/// crosses them.
pub fn build_envelope(
    circles: &[UnitCircle],
    quadrant: Region,
    smin: &Rect,
    smax: &Rect,
) -> Envelope {
    let (sx, sy) = quadrant.reflection();
    let o = quadrant_corner(smin, quadrant);
    let l = quadrant_corner(smax, quadrant);
    let origin = (sx * o.x, sy * o.y);
    let limit = (sx * l.x, sy * l.y);

    let mut order: Vec<UnitCircle> = circles.to_vec();
    order.sort_by(|a, b| {
        (sx * a.center.x)
            .total_cmp(&(sx * b.center.x))
            .then((sy * a.center.y).total_cmp(&(sy * b.center.y)))
    });
    let local: Vec<(f64, f64)> = order
        .iter()
        .map(|c| (sx * c.center.x, sy * c.center.y))
        .collect();

    let mut env = Envelope {
        quadrant,
        circles: order,
        origin,
        limit,
        pieces: vec![Piece {
            lo: origin.0,
            hi: limit.0,
            func: Func::Flat {
                v: limit.1,
                circle: None,
            },
        }],
        elements: Vec::new(),
        breakpoints: Vec::new(),
        transitions: Vec::new(),
        local,
    };
    for i in 0..env.local.len() {
        merge_circle(&mut env, i);
    }
    clip_below(&mut env);
    describe(&mut env);
    env
}

fn crossings(env: &Envelope, a: Func, b: Func, lo: f64, hi: f64) -> Vec<f64> {
    match (a, b) {
        (Func::Flat { .. }, Func::Flat { .. }) => Vec::new(),
        (Func::Flat { v, .. }, Func::Arc { circle })
        | (Func::Arc { circle }, Func::Flat { v, .. }) => {
            let c = env.local[circle];
            let dv = c.1 - v;
            if (0.0..=1.0).contains(&dv) {
                let u = c.0 - (1.0 - dv * dv).sqrt();
                if u > lo && u < hi {
                    return vec![u];
                }
            }
            Vec::new()
        }
        (Func::Arc { circle: x }, Func::Arc { circle: y }) => {
            arc_crossings(env.local[x], env.local[y], lo, hi)
        }
    }
}

fn merge_circle(env: &mut Envelope, i: usize) {
    let (cu, cv) = env.local[i];
    let news = [
        (cu - 1.0, cu, Func::Arc { circle: i }),
        (
            cu,
            f64::INFINITY,
            Func::Flat {
                v: cv - 1.0,
                circle: Some(i),
            },
        ),
    ];
    let mut out: Vec<Piece> = Vec::with_capacity(env.pieces.len() + 4);
    for p in &env.pieces {
        // cut points of p from the new functions' domains
        let mut cuts = vec![p.lo, p.hi];
        for &(lo, hi, _) in &news {
            for x in [lo, hi] {
                if x > p.lo && x < p.hi {
                    cuts.push(x);
                }
            }
        }
        cuts.sort_by(f64::total_cmp);
        for w in cuts.windows(2) {
            let (s, e) = (w[0], w[1]);
            let mid = 0.5 * (s + e);
            let Some(&(_, _, nf)) = news.iter().find(|(lo, hi, _)| mid > *lo && mid < *hi) else {
                out.push(Piece {
                    lo: s,
                    hi: e,
                    func: p.func,
                });
                continue;
            };
            if s == e {
                out.push(Piece {
                    lo: s,
                    hi: e,
                    func: p.func,
                });
                continue;
            }
            let mut pts = vec![s];
            pts.extend(crossings(env, p.func, nf, s, e));
            pts.push(e);
            pts.sort_by(f64::total_cmp);
            for q in pts.windows(2) {
                let m = 0.5 * (q[0] + q[1]);
                let func = if env.eval(nf, m) < env.eval(p.func, m) {
                    nf
                } else {
                    p.func
                };
                out.push(Piece {
                    lo: q[0],
                    hi: q[1],
                    func,
                });
            }
        }
    }
    env.pieces = coalesce(out);
}

fn coalesce(pieces: Vec<Piece>) -> Vec<Piece> {
    let mut out: Vec<Piece> = Vec::with_capacity(pieces.len());
    for p in pieces {
        if let Some(last) = out.last_mut() {
            if same_func(last.func, p.func) || p.lo == p.hi && last.hi == p.lo {
                last.hi = last.hi.max(p.hi);
                continue;
            }
            if last.lo == last.hi {
                *last = p;
                continue;
            }
        }
        out.push(p);
    }
    out
}

/// Drops the part of the envelope below S_min's corner height. A cap that
/// reaches the corner only within rounding still counts as touching.
fn clip_below(env: &mut Envelope) {
    let v0 = env.origin.1;
    let tol = 1e-12 * (1.0 + v0.abs());
    let mut keep = Vec::with_capacity(env.pieces.len());
    for p in &env.pieces {
        let at_lo = env.eval(p.func, p.lo);
        if at_lo < v0 - tol {
            break;
        }
        let at_hi = env.eval(p.func, p.hi);
        if at_hi >= v0 - tol {
            keep.push(*p);
            continue;
        }
        let hi = match p.func {
            Func::Arc { circle } => {
                let (cu, cv) = env.local[circle];
                let dv = (cv - v0).clamp(0.0, 1.0);
                (cu - (1.0 - dv * dv).sqrt()).clamp(p.lo, p.hi)
            }
            Func::Flat { .. } => p.lo,
        };
        keep.push(Piece { hi, ..*p });
        break;
    }
    if keep.is_empty() {
        let first = env.pieces[0];
        keep.push(Piece {
            lo: first.lo,
            hi: first.lo,
            func: first.func,
        });
    }
    env.pieces = keep;
}

fn describe(env: &mut Envelope) {
    let v0 = env.origin.1;
    let mut elements = Vec::new();
    let mut breaks = Vec::new();
    let w = |env: &Envelope, u: f64, v: f64| env.to_world(u, v);

    let first = env.pieces[0];
    let top = env.eval(first.func, first.lo);
    if top < env.limit.1 {
        elements.push(Element::Segment {
            from: w(env, first.lo, env.limit.1),
            to: w(env, first.lo, top),
        });
        breaks.push(Breakpoint {
            at: w(env, first.lo, env.limit.1),
            kind: BreakKind::Plain,
        });
    }
    breaks.push(Breakpoint {
        at: w(env, first.lo, top),
        kind: BreakKind::Plain,
    });

    for (idx, p) in env.pieces.iter().enumerate() {
        elements.push(match p.func {
            Func::Arc { circle } => {
                let cu = env.local[circle].0;
                Element::Arc {
                    circle,
                    theta: (
                        (cu - p.lo).clamp(0.0, 1.0).asin(),
                        (cu - p.hi).clamp(0.0, 1.0).asin(),
                    ),
                }
            }
            Func::Flat { v, .. } => Element::Segment {
                from: w(env, p.lo, v),
                to: w(env, p.hi, v),
            },
        });
        let Some(next) = env.pieces.get(idx + 1) else {
            break;
        };
        let u = p.hi;
        let (a, b) = (env.eval(p.func, u), env.eval(next.func, u));
        if a > b + 1e-12 {
            elements.push(Element::Segment {
                from: w(env, u, a),
                to: w(env, u, b),
            });
            breaks.push(Breakpoint {
                at: w(env, u, a),
                kind: BreakKind::Corner,
            });
            breaks.push(Breakpoint {
                at: w(env, u, b),
                kind: BreakKind::Plain,
            });
        } else {
            let kind = match (p.func, next.func) {
                (Func::Arc { .. }, Func::Flat { .. }) => BreakKind::Plain,
                (_, Func::Arc { .. }) => BreakKind::Corner,
                _ => BreakKind::Plain,
            };
            breaks.push(Breakpoint {
                at: w(env, u, a),
                kind,
            });
        }
    }

    let last = env.pieces[env.pieces.len() - 1];
    let bottom = env.eval(last.func, last.hi);
    breaks.push(Breakpoint {
        at: w(env, last.hi, bottom),
        kind: BreakKind::Plain,
    });
    if bottom > v0 {
        elements.push(Element::Segment {
            from: w(env, last.hi, bottom),
            to: w(env, last.hi, v0),
        });
        breaks.push(Breakpoint {
            at: w(env, last.hi, v0),
            kind: BreakKind::Plain,
        });
    }
    breaks.dedup_by(|b, a| {
        a.at == b.at && {
            if b.kind == BreakKind::Corner {
                a.kind = BreakKind::Corner;
            }
            true
        }
    });

    env.transitions = transitions(env);
    env.elements = elements;
    env.breakpoints = breaks;
}

/// Classifies each pair of consecutive envelope circles by the elements
/// joining their arcs.
fn transitions(env: &Envelope) -> Vec<Transition> {
    let mut out = Vec::new();
    let pieces = &env.pieces;
    for (i, p) in pieces.iter().enumerate() {
        let Func::Arc { circle: first } = p.func else {
            continue;
        };
        let Some(next) = pieces.get(i + 1) else {
            continue;
        };
        let jump = |a: &Piece, b: &Piece| env.eval(a.func, a.hi) > env.eval(b.func, a.hi) + 1e-12;
        let (case, second, corner) = match next.func {
            Func::Arc { circle } => {
                let case = if jump(p, next) {
                    EnvelopeCase::C
                } else {
                    EnvelopeCase::A
                };
                (case, circle, (p.hi, env.eval(p.func, p.hi)))
            }
            Func::Flat { circle: Some(c), v } if c == first => {
                let Some(after) = pieces.get(i + 2) else {
                    continue;
                };
                let Func::Arc { circle } = after.func else {
                    continue;
                };
                let case = if jump(next, after) {
                    EnvelopeCase::D
                } else {
                    EnvelopeCase::B
                };
                (case, circle, (next.hi, v))
            }
            _ => continue,
        };
        out.push(Transition {
            first,
            second,
            case,
            corner: env.to_world(corner.0, corner.1),
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ne(circles: &[(f64, f64)], smax: Rect) -> Envelope {
        let cs: Vec<UnitCircle> = circles
            .iter()
            .map(|&(x, y)| UnitCircle::new(x, y))
            .collect();
        build_envelope(&cs, Region::NE, &Rect::new(-1.0, -1.0, 0.0, 0.0), &smax)
    }

    #[test]
    fn no_circles_is_smax_corner_path() {
        let env = ne(&[], Rect::new(-5.0, -5.0, 4.0, 3.0));
        assert_eq!(env.pieces.len(), 1);
        assert_eq!(env.height(2.0), Some(3.0));
        assert_eq!(env.domain(), (0.0, 4.0));
    }

    #[test]
    fn one_circle_quarter_arc() {
        let env = ne(&[(3.0, 3.0)], Rect::new(-9.0, -9.0, 9.0, 9.0));
        assert_eq!(env.height(1.0), Some(9.0));
        assert!((env.height(2.5).unwrap() - (3.0 - 0.75f64.sqrt())).abs() < 1e-15);
        assert_eq!(env.height(5.0), Some(2.0));
        let arcs = env
            .elements
            .iter()
            .filter(|e| matches!(e, Element::Arc { .. }))
            .count();
        assert_eq!(arcs, 1);
    }

    #[test]
    fn overlapping_circles_meet_at_lower_intersection() {
        let env = ne(&[(3.0, 3.0), (3.5, 2.6)], Rect::new(-9.0, -9.0, 9.0, 9.0));
        assert_eq!(env.transitions.len(), 1);
        assert_eq!(env.transitions[0].case, EnvelopeCase::A);
        let q = env.transitions[0].corner;
        for c in &env.circles {
            assert!((q.dist2(c.center) - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn separated_circles_case_d() {
        let env = ne(&[(2.0, 6.0), (5.0, 3.0)], Rect::new(-9.0, -9.0, 9.0, 9.0));
        assert_eq!(env.transitions[0].case, EnvelopeCase::D);
        assert_eq!(env.transitions[0].corner, Point::new(4.0, 5.0));
        assert!(env.breakpoints.iter().any(|b| b.at == Point::new(2.0, 5.0)));
        assert!(env.breakpoints.iter().any(|b| b.at == Point::new(4.0, 3.0)));
    }
}
