//! t-level staircases of each quadrant and the staircase problem.
//!
//! All quadrants are handled in NE orientation after an exact reflection
//! (`local = (sx * x, sy * y)`, see [`Region::reflection`]), so a corner of
//! the answer rectangle is feasible for level `t` iff it strictly dominates
//! no vertex of the level-`t` chain.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{better_rect, Point, Rect, Region};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum VertexKind {
    /// The vertex is a blue point of the quadrant.
    BluePoint,
    /// Projection of a lower-level blue point onto the sweep line at an
    /// event point.
    Projection,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StairVertex {
    pub point: Point,
    pub kind: VertexKind,
}

/// Staircases of one quadrant for every level `0..=k`, in world coordinates.
#[derive(Debug, Clone, Serialize)]
pub struct StaircaseSet {
    pub quadrant: Region,
    pub levels: Vec<Vec<StairVertex>>,
}

impl StaircaseSet {
    pub fn k(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    /// Level-`t` chain as local (NE-oriented) coordinates.
    pub fn local_chain(&self, t: usize) -> Vec<(f64, f64)> {
        let (sx, sy) = self.quadrant.reflection();
        self.levels[t]
            .iter()
            .map(|v| (sx * v.point.x, sy * v.point.y))
            .collect()
    }

    pub fn corner_bound(&self, t: usize) -> CornerBound {
        CornerBound::from_inner_corners(&self.local_chain(t))
    }
}

/// Sweep a vertical line over the quadrant's points in increasing (local) x,
/// keeping the `k + 1` lowest y values seen so far. Level `t` sits at the
/// `(t + 1)`-th lowest; inserting an event point shifts every level at or
/// above its rank down by one slot, and each level that moves records the
/// point where the sweep line meets its new height.
pub fn build_staircases(blue_quadrant: &[Point], quadrant: Region, k: usize) -> StaircaseSet {
    let (sx, sy) = quadrant.reflection();
    let mut pts: Vec<(f64, f64, usize)> = blue_quadrant
        .iter()
        .enumerate()
        .map(|(i, p)| (sx * p.x, sy * p.y, i))
        .collect();
    pts.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));

    // (local y, index of the blue point, local x of that point)
    let mut lowest: Vec<(f64, usize, f64)> = Vec::with_capacity(k + 2);
    let mut levels: Vec<Vec<StairVertex>> = vec![Vec::new(); k + 1];
    let mut before: Vec<Option<f64>> = vec![None; k + 1];

    let mut i = 0;
    while i < pts.len() {
        let x = pts[i].0;
        let mut j = i;
        while j < pts.len() && pts[j].0 == x {
            let (_, y, idx) = pts[j];
            let pos = lowest.partition_point(|e| e.0 <= y);
            if pos <= k {
                lowest.insert(pos, (y, idx, x));
                lowest.truncate(k + 1);
            }
            j += 1;
        }
        for (t, prev) in before.iter_mut().enumerate() {
            let Some(&(y, _, _)) = lowest.get(t) else {
                break;
            };
            if prev.is_none_or(|old| y < old) {
                let on_point = pts[i..j].iter().any(|p| p.1 == y);
                let kind = if on_point {
                    VertexKind::BluePoint
                } else {
                    VertexKind::Projection
                };
                levels[t].push(StairVertex {
                    point: Point::new(sx * x, sy * y),
                    kind,
                });
                *prev = Some(y);
            }
        }
        i = j;
    }
    StaircaseSet { quadrant, levels }
}

/// Upper bound on a corner's local height as a step function of its local
/// x, stored as the maximal feasible corners ("outer corners") sorted by
/// increasing x / decreasing y. Coordinates may be `+inf`; a bound past the
/// last outer corner is `-inf` (no feasible corner).
#[derive(Debug, Clone, PartialEq)]
pub struct CornerBound {
    outer: Vec<(f64, f64)>,
}

impl CornerBound {
    pub fn unconstrained() -> Self {
        CornerBound {
            outer: vec![(f64::INFINITY, f64::INFINITY)],
        }
    }

    /// From a chain of obstacle vertices (x increasing, y decreasing).
    pub fn from_inner_corners(inner: &[(f64, f64)]) -> Self {
        if inner.is_empty() {
            return Self::unconstrained();
        }
        let mut outer = Vec::with_capacity(inner.len() + 1);
        outer.push((inner[0].0, f64::INFINITY));
        for w in inner.windows(2) {
            outer.push((w[1].0, w[0].1));
        }
        outer.push((f64::INFINITY, inner[inner.len() - 1].1));
        CornerBound { outer }
    }

    /// From maximal feasible corners in any order. Corners with `-inf`
    /// height are infeasible and dropped.
    pub fn from_outer_corners(mut outer: Vec<(f64, f64)>) -> Self {
        outer.retain(|c| c.1 > f64::NEG_INFINITY);
        outer.sort_by(|a, b| a.0.total_cmp(&b.0).then(b.1.total_cmp(&a.1)));
        // keep the maximal corners only, so heights strictly decrease
        let mut kept: Vec<(f64, f64)> = Vec::with_capacity(outer.len());
        for c in outer.into_iter().rev() {
            if kept.last().is_none_or(|l| c.1 > l.1) {
                kept.push(c);
            }
        }
        kept.reverse();
        CornerBound { outer: kept }
    }

    pub fn outer_corners(&self) -> &[(f64, f64)] {
        &self.outer
    }

    /// Largest local y a corner at local x `u` may take.
    pub fn height_at(&self, u: f64) -> f64 {
        let i = self.outer.partition_point(|c| c.0 < u);
        self.outer.get(i).map_or(f64::NEG_INFINITY, |c| c.1)
    }

    /// Finite x coordinates at which the bound steps down.
    pub fn steps(&self) -> impl Iterator<Item = f64> + '_ {
        self.outer.iter().map(|c| c.0).filter(|u| u.is_finite())
    }
}

/// Result of one staircase problem.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StaircaseSolution {
    pub rect: Rect,
    /// Number of distinct maximal rectangles reaching the optimum area.
    pub optima: usize,
}

/// Largest rectangle with `smin ⊆ r ⊆ smax` whose corners respect the
/// four corner bounds, given in quadrant order NE, NW, SW, SE.
///
/// Every maximal candidate has its east edge at a step of the NE or SE
/// bound (or at `smax`), likewise for the west edge; the other two edges
/// then follow from the bounds. The candidate pairs are enumerated
/// directly.
pub fn solve_staircase_problem(
    smin: &Rect,
    smax: &Rect,
    bounds: [&CornerBound; 4],
) -> Result<StaircaseSolution> {
    if !smax.contains_rect(smin) {
        return Err(Error::InvalidComposition);
    }
    let [ne, nw, sw, se] = bounds;

    let mut east: Vec<f64> = ne
        .steps()
        .chain(se.steps())
        .filter(|&x| x >= smin.xmax && x < smax.xmax)
        .chain(std::iter::once(smax.xmax))
        .collect();
    east.sort_by(f64::total_cmp);
    east.dedup();
    // local x of the west edge is -a
    let mut west: Vec<f64> = nw
        .steps()
        .chain(sw.steps())
        .filter(|&u| u >= -smin.xmin && u < -smax.xmin)
        .chain(std::iter::once(-smax.xmin))
        .collect();
    west.sort_by(f64::total_cmp);
    west.dedup();

    let east: Vec<(f64, f64, f64)> = east
        .into_iter()
        .map(|b| (b, ne.height_at(b), -se.height_at(b)))
        .filter(|&(_, top, bottom)| top >= smin.ymax && bottom <= smin.ymin)
        .collect();
    let west: Vec<(f64, f64, f64)> = west
        .into_iter()
        .map(|u| (-u, nw.height_at(u), -sw.height_at(u)))
        .filter(|&(_, top, bottom)| top >= smin.ymax && bottom <= smin.ymin)
        .collect();

    let mut best: Option<Rect> = None;
    let mut optima = 0;
    for &(a, top_w, bottom_w) in &west {
        for &(b, top_e, bottom_e) in &east {
            let d = smax.ymax.min(top_e).min(top_w);
            let c = smax.ymin.max(bottom_e).max(bottom_w);
            if d < smin.ymax || c > smin.ymin {
                continue;
            }
            let r = Rect::new(a, c, b, d);
            if !r.is_finite() {
                return Err(Error::Unbounded(
                    "a side of the staircase problem is open".into(),
                ));
            }
            match best {
                None => {
                    best = Some(r);
                    optima = 1;
                }
                Some(cur) => {
                    if r.area() == cur.area() {
                        optima += 1;
                    }
                    if better_rect(&r, &cur) {
                        if r.area() != cur.area() {
                            optima = 1;
                        }
                        best = Some(r);
                    }
                }
            }
        }
    }
    best.map(|rect| StaircaseSolution { rect, optima })
        .ok_or(Error::InvalidComposition)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[(f64, f64)]) -> Vec<Point> {
        v.iter().map(|&(x, y)| Point::new(x, y)).collect()
    }

    #[test]
    fn single_point_level_zero() {
        let s = build_staircases(&pts(&[(1.0, 1.0)]), Region::NE, 0);
        assert_eq!(
            s.levels[0],
            vec![StairVertex {
                point: Point::new(1.0, 1.0),
                kind: VertexKind::BluePoint
            }]
        );
    }

    #[test]
    fn two_point_antichain() {
        let s = build_staircases(&pts(&[(1.0, 2.0), (2.0, 1.0)]), Region::NE, 1);
        let l0: Vec<_> = s.levels[0]
            .iter()
            .map(|v| (v.point.x, v.point.y, v.kind))
            .collect();
        assert_eq!(
            l0,
            vec![
                (1.0, 2.0, VertexKind::BluePoint),
                (2.0, 1.0, VertexKind::BluePoint)
            ]
        );
        let l1: Vec<_> = s.levels[1]
            .iter()
            .map(|v| (v.point.x, v.point.y, v.kind))
            .collect();
        assert_eq!(l1, vec![(2.0, 2.0, VertexKind::Projection)]);
    }

    #[test]
    fn empty_quadrant_is_unconstrained() {
        let s = build_staircases(&[], Region::SW, 3);
        assert!(s.levels.iter().all(Vec::is_empty));
        assert_eq!(s.corner_bound(2), CornerBound::unconstrained());
    }

    #[test]
    fn reflected_quadrant_keeps_world_coordinates() {
        let s = build_staircases(&pts(&[(-1.0, -2.0), (-3.0, -1.0)]), Region::SW, 0);
        let l0: Vec<_> = s.levels[0].iter().map(|v| (v.point.x, v.point.y)).collect();
        assert_eq!(l0, vec![(-1.0, -2.0), (-3.0, -1.0)]);
    }

    #[test]
    fn unconstrained_problem_returns_smax() {
        let smin = Rect::new(1.0, 1.0, 2.0, 2.0);
        let smax = Rect::new(0.0, 0.0, 4.0, 4.0);
        let u = CornerBound::unconstrained();
        let sol = solve_staircase_problem(&smin, &smax, [&u, &u, &u, &u]).unwrap();
        assert_eq!(sol.rect, smax);
    }

    #[test]
    fn single_ne_vertex_tie_break() {
        let smin = Rect::new(1.0, 1.0, 2.0, 2.0);
        let smax = Rect::new(0.0, 0.0, 4.0, 4.0);
        let u = CornerBound::unconstrained();
        let ne = CornerBound::from_inner_corners(&[(3.0, 3.0)]);
        let sol = solve_staircase_problem(&smin, &smax, [&ne, &u, &u, &u]).unwrap();
        // Rect(0,0,4,3) and Rect(0,0,3,4) both have area 12
        assert_eq!(sol.rect, Rect::new(0.0, 0.0, 3.0, 4.0));
        assert_eq!(sol.optima, 2);
    }

    #[test]
    fn smin_outside_smax_is_invalid() {
        let u = CornerBound::unconstrained();
        let r = solve_staircase_problem(
            &Rect::new(0.0, 0.0, 5.0, 1.0),
            &Rect::new(0.0, 0.0, 4.0, 4.0),
            [&u, &u, &u, &u],
        );
        assert_eq!(r, Err(Error::InvalidComposition));
    }

    #[test]
    fn corner_bound_lookup() {
        let b = CornerBound::from_inner_corners(&[(1.0, 3.0), (2.0, 1.0)]);
        assert_eq!(b.height_at(0.5), f64::INFINITY);
        assert_eq!(b.height_at(1.0), f64::INFINITY);
        assert_eq!(b.height_at(1.5), 3.0);
        assert_eq!(b.height_at(2.0), 3.0);
        assert_eq!(b.height_at(7.0), 1.0);
    }
}
