//! Largest separating rectangle with at most `k` blue outliers.
//!
//! Two pipelines share the same preprocessing and the same staircase
//! problem:
//!
//! * [`solve_mbsr_o_baseline`] enumerates every split of the outlier budget
//!   over the eight regions around S_min, bounding each split by S_max (from
//!   the side regions) and by the precomputed quadrant staircases.
//! * [`solve_mbsr_o_pairset`] merges each side region with the quadrant
//!   clockwise of it, so only the budgets of four region pairs are split
//!   and three of them determine the fourth.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{better_rect, smallest_enclosing_rect, Partition, Point, Rect, Region};
use crate::staircase::{build_staircases, solve_staircase_problem, CornerBound, StaircaseSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Algorithm {
    #[serde(rename = "baseline_k7")]
    BaselineK7,
    #[serde(rename = "pairset_k3")]
    PairsetK3,
    #[serde(rename = "oracle")]
    Oracle,
    #[serde(rename = "circles")]
    Circles,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::BaselineK7 => "baseline_k7",
            Algorithm::PairsetK3 => "pairset_k3",
            Algorithm::Oracle => "oracle",
            Algorithm::Circles => "circles",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolveReport {
    pub best: Rect,
    pub outliers_used: usize,
    pub compositions_tried: usize,
    pub elapsed: Duration,
    pub algorithm: Algorithm,
}

/// Split of the outlier budget over the eight regions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, PartialOrd, Ord, Hash)]
pub struct Composition {
    pub e: usize,
    pub n: usize,
    pub w: usize,
    pub s: usize,
    pub ne: usize,
    pub nw: usize,
    pub sw: usize,
    pub se: usize,
}

impl Composition {
    fn from_parts(p: &[usize; 8]) -> Self {
        Composition {
            e: p[0],
            n: p[1],
            w: p[2],
            s: p[3],
            ne: p[4],
            nw: p[5],
            sw: p[6],
            se: p[7],
        }
    }

    pub fn total(&self) -> usize {
        self.e + self.n + self.w + self.s + self.ne + self.nw + self.sw + self.se
    }

    /// All compositions with total at most `k`, in lexicographic order of
    /// (E, N, W, S, NE, NW, SW, SE).
    pub fn all_up_to(k: usize) -> Vec<Composition> {
        fn rec(i: usize, left: usize, cur: &mut [usize; 8], out: &mut Vec<Composition>) {
            if i == 8 {
                out.push(Composition::from_parts(cur));
                return;
            }
            for v in 0..=left {
                cur[i] = v;
                rec(i + 1, left - v, cur, out);
            }
            cur[i] = 0;
        }
        let mut out = Vec::new();
        rec(0, k, &mut [0; 8], &mut out);
        out
    }
}

/// Distances of side-region points from S_min, as the coordinate of the
/// edge they stop. Sorted nearest first.
#[derive(Debug, Clone, Default)]
pub struct SideSupports {
    pub e: Vec<f64>,
    pub n: Vec<f64>,
    pub w: Vec<f64>,
    pub s: Vec<f64>,
}

impl SideSupports {
    pub fn new(part: &Partition) -> Self {
        let mut e: Vec<f64> = part.e.iter().map(|p| p.x).collect();
        let mut n: Vec<f64> = part.n.iter().map(|p| p.y).collect();
        let mut w: Vec<f64> = part.w.iter().map(|p| p.x).collect();
        let mut s: Vec<f64> = part.s.iter().map(|p| p.y).collect();
        e.sort_by(f64::total_cmp);
        n.sort_by(f64::total_cmp);
        w.sort_by(|a, b| b.total_cmp(a));
        s.sort_by(|a, b| b.total_cmp(a));
        SideSupports { e, n, w, s }
    }

    /// S_max when side `q` may contain `k_q` of its points: the edge stops
    /// at the `(k_q + 1)`-th closest point, or stays open.
    pub fn smax(&self, c: &Composition) -> Rect {
        Rect::new(
            self.w.get(c.w).copied().unwrap_or(f64::NEG_INFINITY),
            self.s.get(c.s).copied().unwrap_or(f64::NEG_INFINITY),
            self.e.get(c.e).copied().unwrap_or(f64::INFINITY),
            self.n.get(c.n).copied().unwrap_or(f64::INFINITY),
        )
    }
}

/// Validated point instance with its region partition.
#[derive(Debug, Clone)]
pub struct Prepared {
    pub smin: Rect,
    pub frame: Rect,
    pub part: Partition,
    pub blue: Vec<Point>,
    pub red: Vec<Point>,
}

impl Prepared {
    pub fn new(red: &[Point], blue: &[Point], k: usize, frame: Option<Rect>) -> Result<Self> {
        let smin = smallest_enclosing_rect(red)?;
        if let Some(p) = blue.iter().find(|p| !p.is_finite()) {
            return Err(Error::InvalidInstance(format!(
                "non-finite blue point {p:?}"
            )));
        }
        let part = Partition::of_points(blue, &smin);
        let frame = match frame {
            Some(f) => {
                if !f.is_valid() || !f.is_finite() || !f.contains_rect(&smin) {
                    return Err(Error::InvalidInstance(format!(
                        "frame {f:?} does not contain S_min {smin:?}"
                    )));
                }
                f
            }
            None => {
                for side in Region::SIDES {
                    if part.get(side).len() <= k {
                        return Err(Error::Unbounded(format!(
                            "side region {side:?} has {} blue points, at most k = {k}",
                            part.get(side).len()
                        )));
                    }
                }
                Rect::everything()
            }
        };
        Ok(Prepared {
            smin,
            frame,
            part,
            blue: blue.to_vec(),
            red: red.to_vec(),
        })
    }

    /// Blue points outside S_min lying in the open interior of `r`.
    pub fn outliers_in(&self, r: &Rect) -> usize {
        Region::SIDES
            .iter()
            .chain(Region::QUADRANTS.iter())
            .map(|&q| {
                self.part
                    .get(q)
                    .iter()
                    .filter(|p| r.contains_open(**p))
                    .count()
            })
            .sum()
    }
}

fn keep_best(best: &mut Option<Rect>, r: Rect) {
    match best {
        Some(cur) if !better_rect(&r, cur) => {}
        _ => *best = Some(r),
    }
}

fn finish(
    prep: &Prepared,
    best: Option<Rect>,
    tried: usize,
    start: Instant,
    algorithm: Algorithm,
) -> Result<SolveReport> {
    let best = best.ok_or_else(|| Error::InvalidInstance("no feasible rectangle".into()))?;
    Ok(SolveReport {
        best,
        outliers_used: prep.outliers_in(&best),
        compositions_tried: tried,
        elapsed: start.elapsed(),
        algorithm,
    })
}

/// Precomputes every quadrant staircase once, then solves one staircase
/// problem per composition of `k`.
pub fn solve_mbsr_o_baseline(
    red: &[Point],
    blue: &[Point],
    k: usize,
    frame: Option<Rect>,
) -> Result<SolveReport> {
    let start = Instant::now();
    let prep = Prepared::new(red, blue, k, frame)?;
    let stairs: Vec<StaircaseSet> = Region::QUADRANTS
        .iter()
        .map(|&q| build_staircases(prep.part.get(q), q, k))
        .collect();
    let bounds: Vec<Vec<CornerBound>> = stairs
        .iter()
        .map(|s| (0..=k).map(|t| s.corner_bound(t)).collect())
        .collect();
    let sides = SideSupports::new(&prep.part);

    let mut best = None;
    let mut tried = 0;
    for c in Composition::all_up_to(k) {
        tried += 1;
        let smax = sides.smax(&c).intersect(&prep.frame);
        let quads = [
            &bounds[0][c.ne],
            &bounds[1][c.nw],
            &bounds[2][c.sw],
            &bounds[3][c.se],
        ];
        match solve_staircase_problem(&prep.smin, &smax, quads) {
            Ok(sol) => keep_best(&mut best, sol.rect),
            Err(Error::InvalidComposition) => {}
            Err(e) => return Err(e),
        }
    }
    finish(&prep, best, tried, start, Algorithm::BaselineK7)
}

/// Plain MBSR: no blue point outside S_min may lie inside the answer.
pub fn solve_mbsr(red: &[Point], blue: &[Point], frame: Option<Rect>) -> Result<SolveReport> {
    solve_mbsr_o_baseline(red, blue, 0, frame)
}

/// A side region together with the quadrant clockwise of it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RegionPair {
    /// N and NE: supports of the top edge and the east edge.
    Nne,
    /// E and SE: east edge and bottom edge.
    Ese,
    /// S and SW: bottom edge and west edge.
    Ssw,
    /// W and NW: west edge and top edge.
    Wnw,
}

impl RegionPair {
    pub const ALL: [RegionPair; 4] = [
        RegionPair::Nne,
        RegionPair::Ese,
        RegionPair::Ssw,
        RegionPair::Wnw,
    ];

    pub fn side(self) -> Region {
        match self {
            RegionPair::Nne => Region::N,
            RegionPair::Ese => Region::E,
            RegionPair::Ssw => Region::S,
            RegionPair::Wnw => Region::W,
        }
    }

    pub fn quadrant(self) -> Region {
        match self {
            RegionPair::Nne => Region::NE,
            RegionPair::Ese => Region::SE,
            RegionPair::Ssw => Region::SW,
            RegionPair::Wnw => Region::NW,
        }
    }

    /// Local coordinates of a point of this pair. The side region's points
    /// are counted by one edge only, so their other coordinate is `-inf`.
    fn local(self, p: Point, from_side: bool) -> (f64, f64) {
        let (sx, sy) = self.quadrant().reflection();
        let (u, v) = (sx * p.x, sy * p.y);
        if !from_side {
            return (u, v);
        }
        match self {
            RegionPair::Nne | RegionPair::Ssw => (f64::NEG_INFINITY, v),
            RegionPair::Ese | RegionPair::Wnw => (u, f64::NEG_INFINITY),
        }
    }
}

/// One support of a candidate corner: a blue point, or nothing (the edge
/// is only stopped by S_max / the frame).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum Support {
    Blue(Point),
    Open,
}

/// Candidate corner: `top` fixes the corner's local y (the edge orthogonal
/// to the side region's direction), `right` fixes its local x.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SupportPair {
    pub top: Support,
    pub right: Support,
    /// Corner position in the pair's local coordinates.
    pub corner: (f64, f64),
}

/// The maximal corners admitting at most `t` blue points of a region pair.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PairSet {
    pub pair: RegionPair,
    pub t: usize,
    pub pairs: Vec<SupportPair>,
}

impl PairSet {
    pub fn corner_bound(&self) -> CornerBound {
        CornerBound::from_outer_corners(self.pairs.iter().map(|p| p.corner).collect())
    }
}

/// Upward horizontal sweep over the pair's points, producing `S_t` for
/// every `t <= k` at once.
///
/// When the sweep line reaches a point `p` (as top support) the points
/// already swept are exactly those below it. The corner at `p`'s height
/// holding `t` of them extends right until the `(t + 1)`-th of them in x
/// order, which is therefore the unique right support paired with `p` at
/// level `t` (provided it lies right of `p`). Those order statistics are
/// kept in a sorted buffer of the `k + 1` smallest x values. Corners open
/// at the top (right support only) or at the right (top support only)
/// are added from the x order and the y order respectively.
pub fn build_pair_sets(
    pair: RegionPair,
    side: &[Point],
    quadrant: &[Point],
    k: usize,
) -> Vec<PairSet> {
    let pts: Vec<(f64, f64, Point)> = side
        .iter()
        .map(|&p| {
            let (u, v) = pair.local(p, true);
            (u, v, p)
        })
        .chain(quadrant.iter().map(|&p| {
            let (u, v) = pair.local(p, false);
            (u, v, p)
        }))
        .collect();
    let mut sets: Vec<PairSet> = (0..=k)
        .map(|t| PairSet {
            pair,
            t,
            pairs: Vec::new(),
        })
        .collect();

    let mut by_v: Vec<usize> = (0..pts.len()).collect();
    by_v.sort_by(|&a, &b| {
        pts[a]
            .1
            .total_cmp(&pts[b].1)
            .then(pts[a].0.total_cmp(&pts[b].0))
    });

    // (u, index) of the k + 1 leftmost points below the sweep line
    let mut leftmost: Vec<(f64, usize)> = Vec::with_capacity(k + 2);
    let mut below = 0usize;
    let mut i = 0;
    while i < by_v.len() {
        let v = pts[by_v[i]].1;
        let mut j = i;
        while j < by_v.len() && pts[by_v[j]].1 == v {
            j += 1;
        }
        if v > f64::NEG_INFINITY {
            for &pi in &by_v[i..j] {
                let (pu, pv, p) = pts[pi];
                for (t, set) in sets.iter_mut().enumerate() {
                    let Some(&(qu, qi)) = leftmost.get(t) else {
                        break;
                    };
                    if qu > pu {
                        set.pairs.push(SupportPair {
                            top: Support::Blue(p),
                            right: Support::Blue(pts[qi].2),
                            corner: (qu, pv),
                        });
                    }
                }
                for set in sets.iter_mut().skip(below) {
                    set.pairs.push(SupportPair {
                        top: Support::Blue(p),
                        right: Support::Open,
                        corner: (f64::INFINITY, pv),
                    });
                }
            }
        }
        for &pi in &by_v[i..j] {
            let u = pts[pi].0;
            let pos = leftmost.partition_point(|e| e.0 <= u);
            if pos <= k {
                leftmost.insert(pos, (u, pi));
                leftmost.truncate(k + 1);
            }
        }
        below += j - i;
        i = j;
    }

    let mut by_u: Vec<usize> = (0..pts.len()).collect();
    by_u.sort_by(|&a, &b| pts[a].0.total_cmp(&pts[b].0));
    for (t, set) in sets.iter_mut().enumerate() {
        if let Some(&qi) = by_u.get(t) {
            let qu = pts[qi].0;
            if qu.is_finite() {
                set.pairs.push(SupportPair {
                    top: Support::Open,
                    right: Support::Blue(pts[qi].2),
                    corner: (qu, f64::INFINITY),
                });
            }
        }
        if pts.len() <= t {
            set.pairs.push(SupportPair {
                top: Support::Open,
                right: Support::Open,
                corner: (f64::INFINITY, f64::INFINITY),
            });
        }
        keep_maximal(&mut set.pairs);
    }
    sets
}

/// Drops corners dominated by another corner of the same set.
fn keep_maximal(pairs: &mut Vec<SupportPair>) {
    pairs.sort_by(|a, b| {
        b.corner
            .0
            .total_cmp(&a.corner.0)
            .then(b.corner.1.total_cmp(&a.corner.1))
    });
    let mut top = f64::NEG_INFINITY;
    pairs.retain(|p| {
        let keep = p.corner.1 > top;
        top = top.max(p.corner.1);
        keep
    });
    pairs.reverse();
}

/// Pair-set pipeline: `S_t` for every region pair and `t <= k`, then one
/// staircase problem per `(k_WNW, k_ESE, k_SSW)` with `k_NNE` taking the
/// rest of the budget.
pub fn solve_mbsr_o_pairset(
    red: &[Point],
    blue: &[Point],
    k: usize,
    frame: Option<Rect>,
) -> Result<SolveReport> {
    let start = Instant::now();
    let prep = Prepared::new(red, blue, k, frame)?;
    let bounds: Vec<Vec<CornerBound>> = RegionPair::ALL
        .iter()
        .map(|&pair| {
            build_pair_sets(
                pair,
                prep.part.get(pair.side()),
                prep.part.get(pair.quadrant()),
                k,
            )
            .iter()
            .map(PairSet::corner_bound)
            .collect()
        })
        .collect();
    let [nne, ese, ssw, wnw] = [&bounds[0], &bounds[1], &bounds[2], &bounds[3]];

    let mut best = None;
    let mut tried = 0;
    #[allow(clippy::needless_range_loop)]
    for k_wnw in 0..=k {
        for k_ese in 0..=k - k_wnw {
            for k_ssw in 0..=k - k_wnw - k_ese {
                let k_nne = k - k_wnw - k_ese - k_ssw;
                tried += 1;
                let quads = [&nne[k_nne], &wnw[k_wnw], &ssw[k_ssw], &ese[k_ese]];
                match solve_staircase_problem(&prep.smin, &prep.frame, quads) {
                    Ok(sol) => keep_best(&mut best, sol.rect),
                    Err(Error::InvalidComposition) => {}
                    Err(e) => return Err(e),
                }
            }
        }
    }
    finish(&prep, best, tried, start, Algorithm::PairsetK3)
}
