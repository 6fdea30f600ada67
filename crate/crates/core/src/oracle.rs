//! Brute-force references. Nothing here calls into the solvers.

use crate::error::{Error, Result};
use crate::geometry::{Point, Rect, Region};
use crate::staircase::{StairVertex, VertexKind};

/// Largest point count accepted by [`oracle_mbsr_o`].
pub const MBSR_O_GUARD: usize = 40;

fn bbox(red: &[Point]) -> Result<Rect> {
    let first = red
        .first()
        .ok_or_else(|| Error::InvalidInstance("no red points".into()))?;
    let mut r = Rect::new(first.x, first.y, first.x, first.y);
    for p in red {
        if !p.is_finite() {
            return Err(Error::InvalidInstance(format!(
                "non-finite red point {p:?}"
            )));
        }
        r = Rect::new(
            r.xmin.min(p.x),
            r.ymin.min(p.y),
            r.xmax.max(p.x),
            r.ymax.max(p.y),
        );
    }
    Ok(r)
}

fn lex_key(r: &Rect) -> [f64; 4] {
    [r.xmin, r.ymin, r.xmax, r.ymax]
}

fn lex_less(a: &Rect, b: &Rect) -> bool {
    lex_key(a)
        .iter()
        .zip(lex_key(b).iter())
        .map(|(x, y)| x.total_cmp(y))
        .find(|o| o.is_ne())
        .is_some_and(|o| o.is_lt())
}

/// Tries every rectangle whose edges sit on blue coordinates or on the
/// frame, counting enclosed blue points directly.
pub fn oracle_mbsr_o(red: &[Point], blue: &[Point], k: usize, frame: Option<Rect>) -> Result<Rect> {
    if red.len() + blue.len() > MBSR_O_GUARD {
        return Err(Error::GuardExceeded(format!(
            "oracle limited to {MBSR_O_GUARD} points, got {}",
            red.len() + blue.len()
        )));
    }
    let s = bbox(red)?;
    let f = frame.unwrap_or(Rect::new(
        f64::NEG_INFINITY,
        f64::NEG_INFINITY,
        f64::INFINITY,
        f64::INFINITY,
    ));
    // blue points strictly inside the red box never matter
    let obstacles: Vec<Point> = blue
        .iter()
        .copied()
        .filter(|p| !(p.x > s.xmin && p.x < s.xmax && p.y > s.ymin && p.y < s.ymax))
        .collect();

    let lows = |coord: fn(&Point) -> f64, lo: f64, bound: f64| -> Vec<f64> {
        let mut v: Vec<f64> = obstacles
            .iter()
            .map(coord)
            .filter(|&c| c <= lo && c >= bound)
            .collect();
        v.push(bound);
        v
    };
    let highs = |coord: fn(&Point) -> f64, hi: f64, bound: f64| -> Vec<f64> {
        let mut v: Vec<f64> = obstacles
            .iter()
            .map(coord)
            .filter(|&c| c >= hi && c <= bound)
            .collect();
        v.push(bound);
        v
    };
    let xmins = lows(|p| p.x, s.xmin, f.xmin);
    let xmaxs = highs(|p| p.x, s.xmax, f.xmax);
    let ymins = lows(|p| p.y, s.ymin, f.ymin);
    let mut ymaxs = highs(|p| p.y, s.ymax, f.ymax);
    ymaxs.sort_by(f64::total_cmp);

    let mut best: Option<Rect> = None;
    for &x0 in &xmins {
        for &x1 in &xmaxs {
            let mut ys: Vec<f64> = obstacles
                .iter()
                .filter(|p| p.x > x0 && p.x < x1)
                .map(|p| p.y)
                .collect();
            ys.sort_by(f64::total_cmp);
            for &y0 in &ymins {
                let above = ys.partition_point(|&y| y <= y0);
                for &y1 in &ymaxs {
                    let inside = ys.partition_point(|&y| y < y1).saturating_sub(above);
                    if inside > k {
                        break;
                    }
                    let r = Rect::new(x0, y0, x1, y1);
                    let area = (x1 - x0) * (y1 - y0);
                    let take = match &best {
                        None => true,
                        Some(b) => {
                            let ba = (b.xmax - b.xmin) * (b.ymax - b.ymin);
                            area > ba || (area == ba && lex_less(&r, b))
                        }
                    };
                    if take {
                        best = Some(r);
                    }
                }
            }
        }
    }
    let best = best.ok_or_else(|| Error::InvalidInstance("no feasible rectangle".into()))?;
    if !(best.xmin.is_finite()
        && best.xmax.is_finite()
        && best.ymin.is_finite()
        && best.ymax.is_finite())
    {
        return Err(Error::Unbounded(
            "an unbounded rectangle is feasible".into(),
        ));
    }
    Ok(best)
}

/// Level-`t` staircase vertices found by counting: a local point `(X, Y)`
/// is a vertex when its closed lower-left quadrant holds more than `t`
/// points while shrinking it in either direction leaves at most `t`.
pub fn oracle_staircase_levels(
    points: &[Point],
    quadrant: Region,
    k: usize,
) -> Vec<Vec<StairVertex>> {
    let (sx, sy) = quadrant.reflection();
    let local: Vec<(f64, f64)> = points.iter().map(|p| (sx * p.x, sy * p.y)).collect();
    let mut xs: Vec<f64> = local.iter().map(|p| p.0).collect();
    let mut ys: Vec<f64> = local.iter().map(|p| p.1).collect();
    xs.sort_by(f64::total_cmp);
    xs.dedup();
    ys.sort_by(f64::total_cmp);
    ys.dedup();
    let count = |f: &dyn Fn(&(f64, f64)) -> bool| local.iter().filter(|p| f(p)).count();

    (0..=k)
        .map(|t| {
            let mut level = Vec::new();
            for &x in &xs {
                for &y in &ys {
                    let closed = count(&|p| p.0 <= x && p.1 <= y);
                    let lower = count(&|p| p.0 <= x && p.1 < y);
                    let left = count(&|p| p.0 < x && p.1 <= y);
                    if closed > t && lower <= t && left <= t {
                        let kind = if local.iter().any(|p| p.0 == x && p.1 == y) {
                            VertexKind::BluePoint
                        } else {
                            VertexKind::Projection
                        };
                        level.push(StairVertex {
                            point: Point::new(sx * x, sy * y),
                            kind,
                        });
                    }
                }
            }
            level
        })
        .collect()
}

const INV_PHI: f64 = 0.618_033_988_749_894_9;

fn golden_max(f: &dyn Fn(f64) -> f64, mut a: f64, mut b: f64) -> (f64, f64) {
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..200 {
        if b - a <= 1e-15 * (1.0 + a.abs().max(b.abs())) {
            break;
        }
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    if fc >= fd {
        (c, fc)
    } else {
        (d, fd)
    }
}

/// Dense scan plus golden-section refinement of every sampled local
/// maximum of a one-variable function.
fn scan_max(f: &dyn Fn(f64) -> f64, lo: f64, hi: f64, samples: usize) -> (f64, f64) {
    if !(hi > lo) {
        return (lo, f(lo));
    }
    let xs: Vec<f64> = (0..=samples)
        .map(|i| lo + (hi - lo) * i as f64 / samples as f64)
        .collect();
    let ys: Vec<f64> = xs.iter().map(|&x| f(x)).collect();
    let mut best = (lo, ys[0]);
    for i in 0..=samples {
        if ys[i] > best.1 {
            best = (xs[i], ys[i]);
        }
        let l = if i > 0 { ys[i - 1] } else { f64::NEG_INFINITY };
        let r = if i < samples {
            ys[i + 1]
        } else {
            f64::NEG_INFINITY
        };
        if ys[i] >= l && ys[i] >= r {
            let (x, y) = golden_max(f, xs[i.saturating_sub(1)], xs[(i + 1).min(samples)]);
            if y > best.1 {
                best = (x, y);
            }
        }
    }
    best
}

/// Maximum of `(w - sin θ)(h - cos θ)` over `θ ∈ [lo, hi]` by dense
/// sampling and golden-section search.
pub fn oracle_arc_max_1d(w: f64, h: f64, lo: f64, hi: f64) -> (f64, f64) {
    let f = |t: f64| (w - t.sin()) * (h - t.cos());
    scan_max(&f, lo.min(hi), lo.max(hi), 2000)
}

/// Maximum of `(w - sin θ - sin φ)(h - cos θ - cos φ)` over a box of
/// angles: a dense grid, then pattern search from the best grid points.
pub fn oracle_arc_max_2d(w: f64, h: f64, theta: (f64, f64), phi: (f64, f64)) -> (f64, f64, f64) {
    let f = |t: f64, p: f64| (w - t.sin() - p.sin()) * (h - t.cos() - p.cos());
    let (t0, t1) = (theta.0.min(theta.1), theta.0.max(theta.1));
    let (p0, p1) = (phi.0.min(phi.1), phi.0.max(phi.1));
    const N: usize = 200;
    let at = |lo: f64, hi: f64, i: usize| lo + (hi - lo) * i as f64 / N as f64;
    let mut grid: Vec<(f64, f64, f64)> = Vec::with_capacity((N + 1) * (N + 1));
    for i in 0..=N {
        for j in 0..=N {
            let (t, p) = (at(t0, t1, i), at(p0, p1, j));
            grid.push((t, p, f(t, p)));
        }
    }
    grid.sort_by(|a, b| b.2.total_cmp(&a.2));
    let mut best = grid[0];
    for &(t, p, v) in grid.iter().take(8) {
        let (mut t, mut p, mut v) = (t, p, v);
        let mut step = ((t1 - t0).max(p1 - p0) / N as f64).max(1e-3);
        while step > 1e-14 {
            let mut moved = false;
            for (dt, dp) in [
                (step, 0.0),
                (-step, 0.0),
                (0.0, step),
                (0.0, -step),
                (step, step),
                (-step, -step),
                (step, -step),
                (-step, step),
            ] {
                let (nt, np) = ((t + dt).clamp(t0, t1), (p + dp).clamp(p0, p1));
                let nv = f(nt, np);
                if nv > v {
                    (t, p, v) = (nt, np, nv);
                    moved = true;
                }
            }
            if !moved {
                step *= 0.5;
            }
        }
        if v > best.2 {
            best = (t, p, v);
        }
    }
    best
}

/// Largest instance accepted by [`oracle_mbsr_c`].
pub const MBSR_C_GUARD: usize = 10;

/// Result of the circle oracle: the best rectangle found and a bracket on
/// the optimal area.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircleBracket {
    pub rect: Rect,
    pub best: f64,
    /// Certified upper bound from the branch and bound.
    pub upper: f64,
    /// `2 * grid_step * (frame width + frame height)`.
    pub slack: f64,
}

/// Vertical extent available to a rectangle spanning `[a, b]` horizontally
/// and containing `s`, or `None` if no such rectangle avoids the circles.
fn vertical_room(s: &Rect, frame: &Rect, centers: &[Point], a: f64, b: f64) -> Option<(f64, f64)> {
    let dist = |v: f64, lo: f64, hi: f64| {
        if v < lo {
            lo - v
        } else if v > hi {
            v - hi
        } else {
            0.0
        }
    };
    let (mut lo, mut hi) = (frame.ymin, frame.ymax);
    for c in centers {
        let dx = dist(c.x, a, b);
        if dx * dx >= 1.0 - 1e-12 {
            continue;
        }
        let reach = (1.0 - dx * dx).sqrt();
        if c.y > s.ymax {
            hi = hi.min(c.y - reach);
        } else if c.y < s.ymin {
            lo = lo.max(c.y + reach);
        } else {
            return None;
        }
    }
    (hi >= s.ymax && lo <= s.ymin).then_some((lo, hi))
}

/// Reference for the circle problem.
///
/// Searches west/east edge pairs `(a, b)` by branch and bound, with the
/// vertical extent computed exactly for each pair. Shrinking `[a, b]`
/// never reduces the vertical room, so `(b_hi - a_lo) * room(a_hi, b_lo)`
/// bounds a cell. Cells are split down to `grid_step`; the best point is
/// then polished by coordinate-wise golden-section search.
pub fn oracle_mbsr_c(
    red: &[Point],
    circles: &[Point],
    frame: Rect,
    grid_step: f64,
) -> Result<CircleBracket> {
    if circles.len() > MBSR_C_GUARD {
        return Err(Error::GuardExceeded(format!(
            "oracle limited to {MBSR_C_GUARD} circles, got {}",
            circles.len()
        )));
    }
    if !(grid_step > 0.0) {
        return Err(Error::InvalidInstance("grid_step must be positive".into()));
    }
    let s = bbox(red)?;
    if !(frame.xmin <= s.xmin
        && frame.ymin <= s.ymin
        && frame.xmax >= s.xmax
        && frame.ymax >= s.ymax)
    {
        return Err(Error::InvalidInstance(
            "frame must contain the red points".into(),
        ));
    }
    for c in circles {
        let dx = if c.x < s.xmin {
            s.xmin - c.x
        } else if c.x > s.xmax {
            c.x - s.xmax
        } else {
            0.0
        };
        let dy = if c.y < s.ymin {
            s.ymin - c.y
        } else if c.y > s.ymax {
            c.y - s.ymax
        } else {
            0.0
        };
        if dx * dx + dy * dy < 1.0 - 1e-12 {
            return Err(Error::InvalidInstance(
                "a circle cuts the red bounding box".into(),
            ));
        }
    }
    let value = |a: f64, b: f64| -> f64 {
        match vertical_room(&s, &frame, circles, a, b) {
            Some((lo, hi)) => (b - a) * (hi - lo),
            None => f64::NEG_INFINITY,
        }
    };

    #[derive(PartialEq)]
    struct Cell {
        ub: f64,
        a: (f64, f64),
        b: (f64, f64),
    }
    impl Eq for Cell {}
    impl PartialOrd for Cell {
        fn partial_cmp(&self, o: &Self) -> Option<std::cmp::Ordering> {
            Some(self.cmp(o))
        }
    }
    impl Ord for Cell {
        fn cmp(&self, o: &Self) -> std::cmp::Ordering {
            self.ub.total_cmp(&o.ub)
        }
    }
    let bound = |a: (f64, f64), b: (f64, f64)| -> f64 {
        match vertical_room(&s, &frame, circles, a.1, b.0) {
            Some((lo, hi)) => (b.1 - a.0) * (hi - lo),
            None => f64::NEG_INFINITY,
        }
    };

    let mut best = (s.xmin, s.xmax, value(s.xmin, s.xmax));
    let consider = |a: f64, b: f64, best: &mut (f64, f64, f64)| {
        let v = value(a, b);
        if v > best.2 {
            *best = (a, b, v);
        }
    };
    let root = Cell {
        ub: bound((frame.xmin, s.xmin), (s.xmax, frame.xmax)),
        a: (frame.xmin, s.xmin),
        b: (s.xmax, frame.xmax),
    };
    let mut heap = std::collections::BinaryHeap::new();
    heap.push(root);
    let mut leaf_upper = f64::NEG_INFINITY;
    let mut budget = 4_000_000usize;
    while let Some(cell) = heap.pop() {
        let tol = 1e-12 * (1.0 + best.2.abs());
        if cell.ub <= best.2 + tol {
            heap.push(cell);
            break;
        }
        for (a, b) in [
            (cell.a.1, cell.b.0),
            (cell.a.0, cell.b.1),
            (cell.a.0, cell.b.0),
            (cell.a.1, cell.b.1),
        ] {
            consider(a, b, &mut best);
        }
        let (wa, wb) = (cell.a.1 - cell.a.0, cell.b.1 - cell.b.0);
        if (wa <= grid_step && wb <= grid_step) || budget == 0 {
            leaf_upper = leaf_upper.max(cell.ub);
            continue;
        }
        budget -= 1;
        let halves = if wa >= wb {
            let m = 0.5 * (cell.a.0 + cell.a.1);
            [((cell.a.0, m), cell.b), ((m, cell.a.1), cell.b)]
        } else {
            let m = 0.5 * (cell.b.0 + cell.b.1);
            [(cell.a, (cell.b.0, m)), (cell.a, (m, cell.b.1))]
        };
        for (a, b) in halves {
            let ub = bound(a, b);
            if ub > best.2 {
                heap.push(Cell { ub, a, b });
            }
        }
    }
    let open_upper = heap.peek().map_or(f64::NEG_INFINITY, |c| c.ub);

    // polish the incumbent along each coordinate
    let (mut a, mut b, mut v) = best;
    let mut span = grid_step.max(1e-9) * 4.0;
    for _ in 0..60 {
        let fa = |x: f64| value(x, b);
        let (na, va) = scan_max(&fa, (a - span).max(frame.xmin), (a + span).min(s.xmin), 16);
        if va > v {
            a = na;
            v = va;
        }
        let fb = |x: f64| value(a, x);
        let (nb, vb) = scan_max(&fb, (b - span).max(s.xmax), (b + span).min(frame.xmax), 16);
        if vb > v {
            b = nb;
            v = vb;
        }
        span *= 0.7;
    }
    let (lo, hi) = vertical_room(&s, &frame, circles, a, b).unwrap_or((s.ymin, s.ymax));
    let upper = leaf_upper.max(open_upper).max(v);
    Ok(CircleBracket {
        rect: Rect::new(a, lo, b, hi),
        best: v,
        upper,
        slack: 2.0 * grid_step * (frame.width() + frame.height()),
    })
}
