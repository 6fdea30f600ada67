//! Maximization of the area over `(b, a')`, cell by cell.
//!
//! Cell boundaries are the piece ends of the NE and SE envelopes along `b`
//! and of the NW and SW envelopes along `a'`, so every envelope is a single
//! flat or arc inside a cell. Cells are further cut where a flat cap of one
//! corner equals an arc cap of the adjacent corner. Within a sub-cell the
//! maximum lies at a vertex, on an edge (a one-variable problem), on a
//! curve where two arcs tie for the same edge, or at an interior point
//! where two opposite corners slide on arcs; all four are searched.

use super::arc::{
    angle_at, maximize_1d, optimize_arc, optimize_arc_pair, ArcPairProblem, ArcProblem,
};
use super::envelope::{Envelope, Func};
use super::{CircleSetup, Stratum};
use crate::geometry::{better_rect, Rect};

/// Best point of the search.
#[derive(Debug, Clone, Copy)]
pub struct Found {
    pub rect: Rect,
    pub area: f64,
    pub stratum: Stratum,
    pub cells: usize,
}

/// Cap of one corner: an envelope piece function.
#[derive(Clone, Copy)]
struct Cap<'a> {
    env: &'a Envelope,
    func: Func,
}

impl Cap<'_> {
    fn at(&self, u: f64) -> f64 {
        self.env.eval(self.func, u)
    }

    fn arc(&self) -> Option<(f64, f64)> {
        match self.func {
            Func::Arc { circle } => Some(self.env.local_center(circle)),
            Func::Flat { .. } => None,
        }
    }

    /// Abscissa where the (decreasing) cap takes value `v`, clamped to its
    /// arc; `None` for flats.
    fn inverse(&self, v: f64) -> Option<f64> {
        let (cu, cv) = self.arc()?;
        let d = (cv - v).clamp(0.0, 1.0);
        Some(cu - (1.0 - d * d).sqrt())
    }
}

/// The objective restricted to one sub-cell.
struct Cell<'a> {
    ne: Cap<'a>,
    se: Cap<'a>,
    nw: Cap<'a>,
    sw: Cap<'a>,
    b: (f64, f64),
    a: (f64, f64),
}

impl Cell<'_> {
    fn area(&self, b: f64, a: f64) -> f64 {
        let b = b.clamp(self.b.0, self.b.1);
        let a = a.clamp(self.a.0, self.a.1);
        (b + a) * (self.ne.at(b).min(self.nw.at(a)) + self.se.at(b).min(self.sw.at(a)))
    }
}

struct Tracker {
    best: Option<(f64, f64, f64, Stratum)>,
}

impl Tracker {
    fn offer(&mut self, cell: &Cell, b: f64, a: f64, stratum: Stratum) {
        let b = b.clamp(cell.b.0, cell.b.1);
        let a = a.clamp(cell.a.0, cell.a.1);
        let v = cell.area(b, a);
        if !v.is_finite() {
            return;
        }
        match self.best {
            Some((_, _, bv, _)) if bv >= v => {}
            _ => self.best = Some((b, a, v, stratum)),
        }
    }
}

/// One free coordinate `x` over `range` with the other fixed at `fixed`.
/// Each of the two edges (top, bottom) is capped by a constant from the
/// fixed side and by a cap varying with `x`.
fn line(
    fixed: f64,
    range: (f64, f64),
    slots: [(f64, Cap); 2],
    eval: impl Fn(f64) -> f64,
) -> Vec<(f64, Stratum)> {
    let mut cuts = vec![range.0, range.1];
    for (k, cap) in slots {
        if let Some(x) = cap.inverse(k) {
            if x > range.0 && x < range.1 {
                cuts.push(x);
            }
        }
    }
    cuts.sort_by(f64::total_cmp);
    let mut out = vec![(range.0, Stratum::Vertex), (range.1, Stratum::Vertex)];
    for w in cuts.windows(2) {
        let (x0, x1) = (w[0], w[1]);
        if x1 <= x0 {
            continue;
        }
        out.push((x0, Stratum::Vertex));
        out.push((x1, Stratum::Vertex));
        let mid = 0.5 * (x0 + x1);
        let active: Vec<(bool, f64, Cap)> = slots
            .iter()
            .map(|&(k, cap)| (cap.at(mid) < k, k, cap))
            .collect();
        let arcs: Vec<(f64, f64)> = active
            .iter()
            .filter(|(var, _, _)| *var)
            .filter_map(|(_, _, cap)| cap.arc())
            .collect();
        match arcs.len() {
            0 => {}
            1 => {
                let (cu, cv) = arcs[0];
                let other = active
                    .iter()
                    .find(|(var, _, cap)| !(*var && cap.arc() == Some((cu, cv))))
                    .map(|&(var, k, cap)| if var { cap.at(mid) } else { k })
                    .unwrap_or(0.0);
                let prob =
                    ArcProblem::new(fixed + cu, cv + other, angle_at(cu, x1), angle_at(cu, x0));
                let t = optimize_arc(&prob).theta;
                out.push((cu - t.sin(), Stratum::Arc));
            }
            _ => out.push((maximize_1d(&eval, x0, x1).0, Stratum::Line)),
        }
    }
    out
}

fn sub_cell(cell: &Cell, t: &mut Tracker) {
    let (b0, b1) = cell.b;
    let (a0, a1) = cell.a;
    for (b, a) in [(b0, a0), (b0, a1), (b1, a0), (b1, a1)] {
        t.offer(cell, b, a, Stratum::Vertex);
    }

    // edges with b fixed: a' free
    for b in [b0, b1] {
        let slots = [(cell.ne.at(b), cell.nw), (cell.se.at(b), cell.sw)];
        for (a, s) in line(b, cell.a, slots, |a| cell.area(b, a)) {
            t.offer(cell, b, a, s);
        }
    }
    // edges with a' fixed: b free
    for a in [a0, a1] {
        let slots = [(cell.nw.at(a), cell.ne), (cell.sw.at(a), cell.se)];
        for (b, s) in line(a, cell.b, slots, |b| cell.area(b, a)) {
            t.offer(cell, b, a, s);
        }
    }

    // opposite corners sliding together
    for (bcap, acap) in [(cell.ne, cell.sw), (cell.se, cell.nw)] {
        if let (Some(p), Some(q)) = (bcap.arc(), acap.arc()) {
            let prob = ArcPairProblem {
                w: p.0 + q.0,
                h: p.1 + q.1,
                theta: (angle_at(p.0, b1), angle_at(p.0, b0)),
                phi: (angle_at(q.0, a1), angle_at(q.0, a0)),
            };
            let r = optimize_arc_pair(&prob);
            for (th, ph) in r.candidates {
                t.offer(cell, p.0 - th.sin(), q.0 - ph.sin(), Stratum::ArcPair);
            }
        }
    }

    // one edge held by two arcs at its ends
    for (bcap, acap) in [(cell.ne, cell.nw), (cell.se, cell.sw)] {
        if bcap.arc().is_none() || acap.arc().is_none() {
            continue;
        }
        // b values whose cap matches some a' in range: acap(a1) <= bcap(b) <= acap(a0)
        let lo = bcap.inverse(acap.at(a0)).unwrap_or(b0).max(b0);
        let hi = bcap.inverse(acap.at(a1)).unwrap_or(b1).min(b1);
        if hi < lo {
            continue;
        }
        let partner = |b: f64| acap.inverse(bcap.at(b)).unwrap_or(a0).clamp(a0, a1);
        let (b, _) = maximize_1d(|b| cell.area(b, partner(b)), lo, hi);
        t.offer(cell, b, partner(b), Stratum::Tie);
    }
}

/// Cuts of `[lo, hi]` at the piece ends of two envelopes.
fn axis_cuts(x: &Envelope, y: &Envelope, lo: f64, hi: f64) -> Vec<f64> {
    let mut cuts: Vec<f64> = x
        .pieces
        .iter()
        .chain(y.pieces.iter())
        .flat_map(|p| [p.lo, p.hi])
        .filter(|&u| u > lo && u < hi)
        .collect();
    cuts.push(lo);
    cuts.push(hi);
    cuts.sort_by(f64::total_cmp);
    cuts.dedup();
    cuts
}

fn intervals(cuts: &[f64]) -> Vec<(f64, f64)> {
    if cuts.len() == 1 {
        return vec![(cuts[0], cuts[0])];
    }
    cuts.windows(2).map(|w| (w[0], w[1])).collect()
}

/// Extra cuts inside one interval where a flat cap of the other axis
/// equals an arc cap of this axis.
fn tie_cuts(range: (f64, f64), pairs: [(Cap, Cap); 2]) -> Vec<f64> {
    let mut cuts = vec![range.0, range.1];
    for (here, there) in pairs {
        if let (Some(_), Func::Flat { v, .. }) = (here.arc(), there.func) {
            if let Some(x) = here.inverse(v) {
                if x > range.0 && x < range.1 {
                    cuts.push(x);
                }
            }
        }
    }
    cuts.sort_by(f64::total_cmp);
    cuts.dedup();
    cuts
}

fn cap(env: &Envelope, lo: f64, hi: f64) -> Cap<'_> {
    let i = env.piece_at(0.5 * (lo + hi));
    Cap {
        env,
        func: env.pieces[i].func,
    }
}

/// Visits every sub-cell, calling `visit` with the cell's best point.
pub fn for_each_cell(setup: &CircleSetup, mut visit: impl FnMut(Rect, f64, Stratum)) -> usize {
    let (ne, nw, sw, se) = (setup.ne(), setup.nw(), setup.sw(), setup.se());
    let b_lo = setup.smin.xmax;
    let b_hi = ne.domain().1.min(se.domain().1).max(b_lo);
    let a_lo = -setup.smin.xmin;
    let a_hi = nw.domain().1.min(sw.domain().1).max(a_lo);
    let bcuts = axis_cuts(ne, se, b_lo, b_hi);
    let acuts = axis_cuts(nw, sw, a_lo, a_hi);

    let mut cells = 0;
    for &(b0, b1) in &intervals(&bcuts) {
        let (cne, cse) = (cap(ne, b0, b1), cap(se, b0, b1));
        for &(a0, a1) in &intervals(&acuts) {
            let (cnw, csw) = (cap(nw, a0, a1), cap(sw, a0, a1));
            let bs = tie_cuts((b0, b1), [(cne, cnw), (cse, csw)]);
            let as_ = tie_cuts((a0, a1), [(cnw, cne), (csw, cse)]);
            for &b in &intervals(&bs) {
                for &a in &intervals(&as_) {
                    cells += 1;
                    let cell = Cell {
                        ne: cne,
                        se: cse,
                        nw: cnw,
                        sw: csw,
                        b,
                        a,
                    };
                    let mut t = Tracker { best: None };
                    sub_cell(&cell, &mut t);
                    if let Some((bb, aa, v, s)) = t.best {
                        let top = cne.at(bb).min(cnw.at(aa));
                        let bottom = cse.at(bb).min(csw.at(aa));
                        visit(Rect::new(-aa, -bottom, bb, top), v, s);
                    }
                }
            }
        }
    }
    cells
}

/// Global maximum over all sub-cells. The returned rectangle's top and
/// bottom come from the envelopes and are refined by
/// [`CircleSetup::extend`] afterwards.
pub fn maximize(setup: &CircleSetup) -> Found {
    let mut best: Option<(Rect, f64, Stratum)> = None;
    let cells = for_each_cell(setup, |r, v, s| {
        let take = match &best {
            None => true,
            Some((br, bv, _)) => v > *bv || (v == *bv && better_rect(&r, br)),
        };
        if take {
            best = Some((r, v, s));
        }
    });
    let (r, v, s) = best.unwrap_or((setup.smin, setup.smin.area(), Stratum::Vertex));
    // keep only the horizontal extent; the vertical one is recomputed exactly
    let rect = Rect::new(r.xmin, setup.smin.ymin, r.xmax, setup.smin.ymax);
    Found {
        rect,
        area: v,
        stratum: s,
        cells,
    }
}
