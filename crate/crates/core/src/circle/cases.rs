//! Candidates grouped by how circles pin them, and the point-obstacle
//! reduction for rectangles pinned on three edges.

use super::envelope::{EnvelopeCase, Func};
use super::search::for_each_cell;
use super::{CaseLabel, CircleSetup, CsrCandidate, Stratum};
use crate::geometry::{better_rect, Point, Rect};
use crate::outlier::solve_mbsr;

/// One labelled CSR per sub-cell of the search.
pub fn enumerate_candidates(setup: &CircleSetup) -> Vec<CsrCandidate> {
    let mut out = Vec::new();
    for_each_cell(setup, |r, _, s| {
        let start = Rect::new(r.xmin, setup.smin.ymin, r.xmax, setup.smin.ymax);
        out.push(setup.finish(start, s));
    });
    out
}

fn best_of(cands: impl Iterator<Item = CsrCandidate>) -> Option<CsrCandidate> {
    cands.fold(None, |acc, c| match acc {
        Some(b) if !better_rect(&c.rect, &b.rect) => Some(b),
        _ => Some(c),
    })
}

fn best_in_family(setup: &CircleSetup, family: u8) -> Option<CsrCandidate> {
    best_of(
        enumerate_candidates(setup)
            .into_iter()
            .filter(|c| c.case.family() == family && setup.check(&c.rect).avoids_circles),
    )
}

/// Obstacle points standing in for the circles of separated envelope
/// pairs: each such pair's corner breakpoint, and for each arc of those
/// circles the point below its start and left of its end.
pub fn reduction_points(setup: &CircleSetup) -> Vec<Point> {
    let mut pts = Vec::new();
    for env in &setup.envelopes {
        for t in env.transitions.iter().filter(|t| t.case == EnvelopeCase::D) {
            pts.push(t.corner);
            for p in &env.pieces {
                if let Func::Arc { circle } = p.func {
                    if circle == t.first || circle == t.second {
                        let q = env.eval(p.func, p.hi);
                        pts.push(env.to_world(p.lo, q));
                    }
                }
            }
        }
    }
    pts.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
    pts.dedup();
    pts
}

/// Three pinned edges: the largest rectangle avoiding the reduction
/// points inside S_max, kept only when it avoids every circle and ends up
/// pinned on three edges.
pub fn solve_case1(setup: &CircleSetup) -> Option<CsrCandidate> {
    let pts = reduction_points(setup);
    let r = solve_mbsr(&setup.red, &pts, Some(setup.smax)).ok()?.best;
    let cand = setup.finish(r, Stratum::PointReduction);
    (cand.case == CaseLabel::One && setup.check(&cand.rect).avoids_circles).then_some(cand)
}

/// Two pinned edges (adjacent or opposite).
pub fn solve_case2(setup: &CircleSetup) -> Option<CsrCandidate> {
    best_in_family(setup, 2)
}

/// One pinned edge.
pub fn solve_case3(setup: &CircleSetup) -> Option<CsrCandidate> {
    best_in_family(setup, 3)
}

/// No pinned edge.
pub fn solve_case4(setup: &CircleSetup) -> Option<CsrCandidate> {
    best_in_family(setup, 4)
}
