//! Largest rectangle containing the red points and avoiding blue unit
//! circles.
//!
//! Given the S_min bounding box, only the circles near its four corners
//! couple the edge positions: side circles just bound S_max, while each
//! quadrant's circles cap how far that corner reaches (its
//! [`envelope::Envelope`]). With `b` the east edge and `a' = -a` the
//! reflected west edge, the area is
//!
//! ```text
//! F(b, a') = (b + a') * (min(NE(b), NW(a')) + min(SE(b), SW(a')))
//! ```
//!
//! [`search`] maximizes `F` cell by cell over the envelope pieces, and
//! [`cases`] sorts the resulting rectangles by how circles pin them.

pub mod arc;
pub mod cases;
pub mod envelope;
pub mod search;

use std::fmt;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{
    better_rect, classify_circle, smallest_enclosing_rect, Point, Rect, Region, UnitCircle,
    CIRCLE_EPS_SQ,
};
use crate::outlier::{Algorithm, SolveReport};

pub use arc::{
    optimize_arc, optimize_arc_pair, ArcOptimum, ArcPairOptimum, ArcPairProblem, ArcProblem,
};
pub use cases::{enumerate_candidates, solve_case1, solve_case2, solve_case3, solve_case4};
pub use envelope::{build_envelope, Envelope};

/// Growth used to test that an edge cannot move outward.
pub const EXTENSION_PROBE: f64 = 1e-6;
/// Distance slack when deciding that a circle touches an edge or corner.
const CONTACT_TOL: f64 = 1e-7;

/// Distance of a coordinate to an interval.
fn gap(v: f64, lo: f64, hi: f64) -> f64 {
    if v < lo {
        lo - v
    } else if v > hi {
        v - hi
    } else {
        0.0
    }
}

/// How far each edge of `r` can slide outward before touching a circle,
/// ignoring any frame. Edges that never touch stay infinite.
pub fn slide_edges(r: &Rect, circles: &[UnitCircle]) -> Rect {
    let mut out = Rect::everything();
    for c in circles {
        let p = c.center;
        let dy = gap(p.y, r.ymin, r.ymax);
        let dx = gap(p.x, r.xmin, r.xmax);
        if dy * dy < 1.0 - CIRCLE_EPS_SQ {
            let reach = (1.0 - dy * dy).sqrt();
            if p.x > r.xmax {
                out.xmax = out.xmax.min((p.x - reach).max(r.xmax));
            }
            if p.x < r.xmin {
                out.xmin = out.xmin.max((p.x + reach).min(r.xmin));
            }
        }
        if dx * dx < 1.0 - CIRCLE_EPS_SQ {
            let reach = (1.0 - dx * dx).sqrt();
            if p.y > r.ymax {
                out.ymax = out.ymax.min((p.y - reach).max(r.ymax));
            }
            if p.y < r.ymin {
                out.ymin = out.ymin.max((p.y + reach).min(r.ymin));
            }
        }
    }
    out
}

/// S_max: every edge of `smin` slid outward to its first circle.
pub fn compute_smax_circles(smin: &Rect, circles: &[UnitCircle]) -> Result<Rect> {
    let s = slide_edges(smin, circles);
    if !s.is_finite() {
        return Err(Error::Unbounded(format!(
            "an edge of {smin:?} never meets a circle"
        )));
    }
    Ok(s)
}

/// Validated circle instance with its S_max and the four envelopes.
#[derive(Debug, Clone, Serialize)]
pub struct CircleSetup {
    pub red: Vec<Point>,
    pub circles: Vec<UnitCircle>,
    pub frame: Option<Rect>,
    pub smin: Rect,
    pub smax: Rect,
    /// NE, NW, SW, SE.
    pub envelopes: [Envelope; 4],
}

impl CircleSetup {
    pub fn new(red: &[Point], circles: &[UnitCircle], frame: Option<Rect>) -> Result<Self> {
        let smin = smallest_enclosing_rect(red)?;
        if let Some(c) = circles.iter().find(|c| !c.center.is_finite()) {
            return Err(Error::InvalidInstance(format!("non-finite circle {c:?}")));
        }
        if let Some(c) = circles
            .iter()
            .find(|c| classify_circle(c, &smin) == Region::Inside)
        {
            return Err(Error::InvalidInstance(format!(
                "circle at {:?} cuts the red bounding box, no rectangle can avoid it",
                c.center
            )));
        }
        if let Some(f) = frame {
            if !f.is_valid() || !f.is_finite() || !f.contains_rect(&smin) {
                return Err(Error::InvalidInstance(format!(
                    "frame {f:?} does not contain S_min {smin:?}"
                )));
            }
        }
        let slid = slide_edges(&smin, circles);
        let smax = match frame {
            Some(f) => slid.intersect(&f),
            None => slid,
        };
        if !smax.is_finite() {
            return Err(Error::Unbounded(format!(
                "an edge of {smin:?} never meets a circle"
            )));
        }
        let envelopes = Region::QUADRANTS.map(|q| {
            let own: Vec<UnitCircle> = circles
                .iter()
                .copied()
                .filter(|c| classify_circle(c, &smin) == q)
                .collect();
            build_envelope(&own, q, &smin, &smax)
        });
        Ok(CircleSetup {
            red: red.to_vec(),
            circles: circles.to_vec(),
            frame,
            smin,
            smax,
            envelopes,
        })
    }

    pub fn ne(&self) -> &Envelope {
        &self.envelopes[0]
    }
    pub fn nw(&self) -> &Envelope {
        &self.envelopes[1]
    }
    pub fn sw(&self) -> &Envelope {
        &self.envelopes[2]
    }
    pub fn se(&self) -> &Envelope {
        &self.envelopes[3]
    }

    fn frame_or_open(&self) -> Rect {
        self.frame.unwrap_or_else(Rect::everything)
    }

    /// Pushes the edges of `r` outward (north, south, east, west in turn)
    /// as far as the circles and the frame allow.
    pub fn extend(&self, r: Rect) -> Rect {
        let f = self.frame_or_open();
        let mut r = r;
        let limit = |v: f64, lo: f64, hi: f64| -> Option<f64> {
            let d = gap(v, lo, hi);
            (d * d < 1.0 - CIRCLE_EPS_SQ).then(|| (1.0 - d * d).sqrt())
        };
        let mut top = f.ymax;
        for c in &self.circles {
            if c.center.y > r.ymax {
                if let Some(reach) = limit(c.center.x, r.xmin, r.xmax) {
                    top = top.min(c.center.y - reach);
                }
            }
        }
        r.ymax = r.ymax.max(top);
        let mut bottom = f.ymin;
        for c in &self.circles {
            if c.center.y < r.ymin {
                if let Some(reach) = limit(c.center.x, r.xmin, r.xmax) {
                    bottom = bottom.max(c.center.y + reach);
                }
            }
        }
        r.ymin = r.ymin.min(bottom);
        let mut east = f.xmax;
        for c in &self.circles {
            if c.center.x > r.xmax {
                if let Some(reach) = limit(c.center.y, r.ymin, r.ymax) {
                    east = east.min(c.center.x - reach);
                }
            }
        }
        r.xmax = r.xmax.max(east);
        let mut west = f.xmin;
        for c in &self.circles {
            if c.center.x < r.xmin {
                if let Some(reach) = limit(c.center.y, r.ymin, r.ymax) {
                    west = west.max(c.center.x + reach);
                }
            }
        }
        r.xmin = r.xmin.min(west);
        r
    }

    pub fn check(&self, r: &Rect) -> CsrCheck {
        check_csr(r, &self.red, &self.circles, self.frame)
    }

    /// Circles and frame sides touching `r`, by edge and corner.
    pub fn contacts(&self, r: &Rect) -> Vec<Contact> {
        let mut out = Vec::new();
        if let Some(f) = self.frame {
            for (place, hit) in [
                (Place::N, r.ymax >= f.ymax),
                (Place::S, r.ymin <= f.ymin),
                (Place::E, r.xmax >= f.xmax),
                (Place::W, r.xmin <= f.xmin),
            ] {
                if hit {
                    out.push(Contact {
                        place,
                        by: Blocker::Frame,
                    });
                }
            }
        }
        for (i, c) in self.circles.iter().enumerate() {
            let p = c.center;
            let d = r.dist2_to(p).sqrt();
            if (d - 1.0).abs() > CONTACT_TOL {
                continue;
            }
            let inx = p.x > r.xmin && p.x < r.xmax;
            let iny = p.y > r.ymin && p.y < r.ymax;
            let place = match (inx, iny, p.x >= r.xmax, p.y >= r.ymax) {
                (true, _, _, true) => Place::N,
                (true, _, _, false) => Place::S,
                (false, true, true, _) => Place::E,
                (false, true, false, _) => Place::W,
                (false, false, true, true) => Place::NE,
                (false, false, false, true) => Place::NW,
                (false, false, false, false) => Place::SW,
                (false, false, true, false) => Place::SE,
            };
            out.push(Contact {
                place,
                by: Blocker::Circle(i),
            });
        }
        out
    }

    /// Extends `r` to a CSR and labels it.
    pub fn finish(&self, r: Rect, stratum: Stratum) -> CsrCandidate {
        let rect = self.extend(r);
        let contacts = self.contacts(&rect);
        let case = CaseLabel::classify(&contacts, stratum);
        CsrCandidate {
            rect,
            case,
            stratum,
            contacts,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Place {
    N,
    E,
    S,
    W,
    NE,
    NW,
    SW,
    SE,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Blocker {
    /// Index into [`CircleSetup::circles`].
    Circle(usize),
    Frame,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Contact {
    pub place: Place,
    pub by: Blocker,
}

/// How the optimizer reached a candidate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Stratum {
    /// Every edge position fixed by piece ends or tangencies.
    Vertex,
    /// One corner sliding on one arc, solved by the quartic.
    Arc,
    /// One free coordinate with two arcs active, solved numerically.
    Line,
    /// Two opposite corners sliding on two arcs.
    ArcPair,
    /// One edge whose two ends slide on two arcs.
    Tie,
    /// Point-obstacle reduction.
    PointReduction,
}

impl Stratum {
    fn slides(self) -> bool {
        matches!(
            self,
            Stratum::Arc | Stratum::Line | Stratum::Tie | Stratum::ArcPair
        )
    }
}

/// Configuration classes of candidate rectangles by pinned edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum CaseLabel {
    /// Three or four pinned edges.
    One,
    /// Two adjacent pinned edges, the rest fixed by stopping.
    TwoOne,
    /// Two adjacent pinned edges, the far corner sliding.
    TwoTwo,
    /// Two opposite pinned edges.
    TwoThree,
    /// One pinned edge, the rest fixed by stopping.
    ThreeOne,
    /// One pinned edge, a corner sliding.
    ThreeTwo,
    /// No pinned edge, corners stopped.
    FourOne,
    /// No pinned edge, two opposite corners sliding.
    FourTwo,
}

impl CaseLabel {
    pub fn family(self) -> u8 {
        match self {
            CaseLabel::One => 1,
            CaseLabel::TwoOne | CaseLabel::TwoTwo | CaseLabel::TwoThree => 2,
            CaseLabel::ThreeOne | CaseLabel::ThreeTwo => 3,
            CaseLabel::FourOne | CaseLabel::FourTwo => 4,
        }
    }

    pub fn classify(contacts: &[Contact], stratum: Stratum) -> CaseLabel {
        let pinned = |p: Place| contacts.iter().any(|c| c.place == p);
        let [n, e, s, w] = [Place::N, Place::E, Place::S, Place::W].map(pinned);
        let count = [n, e, s, w].iter().filter(|&&b| b).count();
        match count {
            3 | 4 => CaseLabel::One,
            2 if (n && s) || (e && w) => CaseLabel::TwoThree,
            2 if stratum.slides() => CaseLabel::TwoTwo,
            2 => CaseLabel::TwoOne,
            1 if stratum.slides() => CaseLabel::ThreeTwo,
            1 => CaseLabel::ThreeOne,
            _ if stratum == Stratum::ArcPair => CaseLabel::FourTwo,
            _ => CaseLabel::FourOne,
        }
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseLabel::One => "1",
            CaseLabel::TwoOne => "2.1",
            CaseLabel::TwoTwo => "2.2",
            CaseLabel::TwoThree => "2.3",
            CaseLabel::ThreeOne => "3.1",
            CaseLabel::ThreeTwo => "3.2",
            CaseLabel::FourOne => "4.1",
            CaseLabel::FourTwo => "4.2",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CsrCandidate {
    pub rect: Rect,
    pub case: CaseLabel,
    pub stratum: Stratum,
    pub contacts: Vec<Contact>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CsrCheck {
    pub contains_red: bool,
    pub avoids_circles: bool,
    /// North, east, south, west.
    pub inextensible: [bool; 4],
}

impl CsrCheck {
    pub fn ok(&self) -> bool {
        self.contains_red && self.avoids_circles && self.inextensible.iter().all(|&b| b)
    }
}

/// Red containment, circle avoidance, and that each edge grown by
/// [`EXTENSION_PROBE`] enters a circle or leaves the frame.
pub fn check_csr(r: &Rect, red: &[Point], circles: &[UnitCircle], frame: Option<Rect>) -> CsrCheck {
    let hits = |q: &Rect| {
        circles
            .iter()
            .any(|c| q.dist2_to(c.center) < 1.0 - CIRCLE_EPS_SQ)
    };
    let leaves = |q: &Rect| frame.is_some_and(|f| !f.contains_rect(q));
    let d = EXTENSION_PROBE;
    let grown = [
        Rect {
            ymax: r.ymax + d,
            ..*r
        },
        Rect {
            xmax: r.xmax + d,
            ..*r
        },
        Rect {
            ymin: r.ymin - d,
            ..*r
        },
        Rect {
            xmin: r.xmin - d,
            ..*r
        },
    ];
    CsrCheck {
        contains_red: red.iter().all(|p| r.contains_closed(*p)),
        avoids_circles: !hits(r),
        inextensible: grown.map(|g| hits(&g) || leaves(&g)),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CircleSolution {
    pub best: CsrCandidate,
    pub smax: Rect,
    pub cells: usize,
}

/// Solves the circle problem and reports the winning candidate with its
/// configuration label.
pub fn solve_mbsr_c_detailed(
    red: &[Point],
    circles: &[UnitCircle],
    frame: Option<Rect>,
) -> Result<CircleSolution> {
    let setup = CircleSetup::new(red, circles, frame)?;
    let found = search::maximize(&setup);
    let mut best = setup.finish(found.rect, found.stratum);
    if let Some(alt) = solve_case1(&setup) {
        if better_rect(&alt.rect, &best.rect) && setup.check(&alt.rect).avoids_circles {
            best = alt;
        }
    }
    Ok(CircleSolution {
        best,
        smax: setup.smax,
        cells: found.cells,
    })
}

pub fn solve_mbsr_c(
    red: &[Point],
    circles: &[UnitCircle],
    frame: Option<Rect>,
) -> Result<SolveReport> {
    let start = Instant::now();
    let sol = solve_mbsr_c_detailed(red, circles, frame)?;
    Ok(SolveReport {
        best: sol.best.rect,
        outliers_used: 0,
        compositions_tried: sol.cells,
        elapsed: start.elapsed(),
        algorithm: Algorithm::Circles,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn circles(v: &[(f64, f64)]) -> Vec<UnitCircle> {
        v.iter().map(|&(x, y)| UnitCircle::new(x, y)).collect()
    }

    #[test]
    fn smax_examples() {
        let smin = Rect::new(0.0, 0.0, 2.0, 1.0);
        let one = circles(&[(4.0, 0.5)]);
        assert_eq!(slide_edges(&smin, &one).xmax, 3.0);
        assert!(matches!(
            compute_smax_circles(&smin, &one),
            Err(Error::Unbounded(_))
        ));
        let four = circles(&[(4.0, 0.5), (-2.0, 0.5), (1.0, 3.0), (1.0, -2.0)]);
        assert_eq!(
            compute_smax_circles(&smin, &four).unwrap(),
            Rect::new(-1.0, -1.0, 3.0, 2.0)
        );
    }

    #[test]
    fn no_circles_gives_frame() {
        let red = [Point::new(0.0, 0.0), Point::new(1.0, 1.0)];
        let f = Rect::new(-3.0, -2.0, 4.0, 5.0);
        let r = solve_mbsr_c(&red, &[], Some(f)).unwrap();
        assert_eq!(r.best, f);
    }

    #[test]
    fn single_east_circle_binds() {
        let red = [Point::new(0.0, 0.0), Point::new(1.0, 1.0)];
        let f = Rect::new(-3.0, -2.0, 4.0, 5.0);
        let r = solve_mbsr_c(&red, &circles(&[(2.5, 0.5)]), Some(f)).unwrap();
        assert!((r.best.xmax - 1.5).abs() < 1e-12);
        let far = solve_mbsr_c(&red, &circles(&[(5.5, 0.5)]), Some(f)).unwrap();
        assert_eq!(far.best, f);
    }

    #[test]
    fn cutting_circle_is_rejected() {
        let red = [Point::new(0.0, 0.0), Point::new(1.0, 1.0)];
        let r = solve_mbsr_c(&red, &circles(&[(1.5, 0.5)]), None);
        assert!(matches!(r, Err(Error::InvalidInstance(_))));
    }

    #[test]
    fn cross_of_side_circles() {
        let red = [Point::new(0.0, 0.0), Point::new(2.0, 1.0)];
        let cs = circles(&[(4.0, 0.5), (-2.0, 0.5), (1.0, 3.0), (1.0, -2.0)]);
        let sol = solve_mbsr_c_detailed(&red, &cs, None).unwrap();
        assert_eq!(sol.best.rect, Rect::new(-1.0, -1.0, 3.0, 2.0));
        assert_eq!(sol.best.case, CaseLabel::One);
    }
}
