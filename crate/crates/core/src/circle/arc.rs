//! Area of a rectangle whose corner slides along a unit-circle arc.
//!
//! With the corner at `c + (-sin θ, -cos θ)` for the circle center `c`, and
//! the opposite edges fixed, the area is `f(θ) = (w - sin θ)(h - cos θ)`
//! where `w`, `h` are the distances from `c` to the fixed edges. Critical
//! points satisfy `w sin θ - h cos θ + cos²θ - sin²θ = 0`; substituting
//! `x = tan θ` and squaring gives the quartic
//! `(w²-1)x⁴ - 2whx³ + (w²+h²+2)x² - 2whx + (h²-1) = 0`.
//! Squaring admits spurious roots, so every root is polished and checked
//! against the unsquared derivative, and `f` itself picks the maximum.

use std::f64::consts::FRAC_PI_2;

/// One free corner. `lo..=hi` is a sub-interval of `[0, π/2]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArcProblem {
    pub w: f64,
    pub h: f64,
    pub lo: f64,
    pub hi: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ArcOptimum {
    pub theta: f64,
    pub area: f64,
    /// Interior critical points found (validated), ascending.
    pub critical: Vec<f64>,
}

impl ArcProblem {
    pub fn new(w: f64, h: f64, lo: f64, hi: f64) -> Self {
        ArcProblem { w, h, lo, hi }
    }

    pub fn area(&self, theta: f64) -> f64 {
        (self.w - theta.sin()) * (self.h - theta.cos())
    }

    pub fn derivative(&self, theta: f64) -> f64 {
        let (s, c) = theta.sin_cos();
        self.w * s - self.h * c + c * c - s * s
    }

    fn second_derivative(&self, theta: f64) -> f64 {
        let (s, c) = theta.sin_cos();
        self.w * c + self.h * s - 4.0 * s * c
    }
}

/// Coefficients, constant term first, of the quartic in `x = tan θ`.
pub fn quartic(w: f64, h: f64) -> [f64; 5] {
    [
        h * h - 1.0,
        -2.0 * w * h,
        w * w + h * h + 2.0,
        -2.0 * w * h,
        w * w - 1.0,
    ]
}

pub fn eval_poly(p: &[f64], x: f64) -> f64 {
    p.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

fn derive(p: &[f64]) -> Vec<f64> {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| c * i as f64)
        .collect()
}

/// Real roots of `p` in `[lo, hi]` where `p` changes sign, ascending.
///
/// The roots of `p'` cut the interval into pieces on which `p` is monotone;
/// each piece with a sign change holds exactly one root, found by bisection.
pub fn real_roots(p: &[f64], lo: f64, hi: f64) -> Vec<f64> {
    let deg = p.iter().rposition(|&c| c != 0.0).unwrap_or(0);
    let p = &p[..=deg];
    if deg == 0 {
        return Vec::new();
    }
    if deg == 1 {
        let r = -p[0] / p[1];
        return if r >= lo && r <= hi {
            vec![r]
        } else {
            Vec::new()
        };
    }
    let mut cuts = vec![lo];
    cuts.extend(real_roots(&derive(p), lo, hi));
    cuts.push(hi);
    let mut roots: Vec<f64> = Vec::new();
    for win in cuts.windows(2) {
        let (mut a, mut b) = (win[0], win[1]);
        let (mut fa, fb) = (eval_poly(p, a), eval_poly(p, b));
        if fa == 0.0 {
            roots.push(a);
            continue;
        }
        if fa.signum() == fb.signum() {
            continue;
        }
        for _ in 0..200 {
            let m = 0.5 * (a + b);
            if m <= a || m >= b {
                break;
            }
            let fm = eval_poly(p, m);
            if fm == 0.0 {
                a = m;
                b = m;
                break;
            }
            if fm.signum() == fa.signum() {
                a = m;
                fa = fm;
            } else {
                b = m;
            }
        }
        roots.push(0.5 * (a + b));
    }
    if eval_poly(p, hi) == 0.0 {
        roots.push(hi);
    }
    roots.sort_by(f64::total_cmp);
    roots.dedup();
    roots
}

fn polish(prob: &ArcProblem, mut t: f64) -> f64 {
    for _ in 0..8 {
        let d2 = prob.second_derivative(t);
        if d2 == 0.0 {
            break;
        }
        let next = t - prob.derivative(t) / d2;
        if !next.is_finite() || (next - t).abs() > 1e-3 {
            break;
        }
        if next == t {
            break;
        }
        t = next;
    }
    t
}

fn is_critical(prob: &ArcProblem, t: f64) -> bool {
    let h = 1e-7;
    let d = prob.derivative(t);
    d.abs() <= 1e-12 * (1.0 + prob.w.abs() + prob.h.abs())
        || prob.derivative(t - h).signum() != prob.derivative(t + h).signum()
}

/// Interior critical angles of `f` on `[0, π/2]`, from the quartic in
/// `tan θ` below π/4 and the same quartic with `w`, `h` swapped in
/// `cot θ` above it.
pub fn quartic_critical_points(w: f64, h: f64) -> Vec<f64> {
    let prob = ArcProblem::new(w, h, 0.0, FRAC_PI_2);
    let mut out: Vec<f64> = real_roots(&quartic(w, h), 0.0, 1.0)
        .into_iter()
        .map(f64::atan)
        .chain(
            real_roots(&quartic(h, w), 0.0, 1.0)
                .into_iter()
                .map(|y| FRAC_PI_2 - y.atan()),
        )
        .map(|t| polish(&prob, t))
        .filter(|&t| is_critical(&prob, t))
        .collect();
    out.sort_by(f64::total_cmp);
    out.dedup_by(|a, b| (*a - *b).abs() < 1e-12);
    out
}

/// Maximizes `f` over `[lo, hi]`.
///
/// Uses the quartic when `w, h > 1`; otherwise the area can change sign on
/// the arc and the closed form is not used, a numeric search takes over.
pub fn optimize_arc(prob: &ArcProblem) -> ArcOptimum {
    let (lo, hi) = (prob.lo.min(prob.hi), prob.lo.max(prob.hi));
    if !(prob.w > 1.0 && prob.h > 1.0) {
        let (theta, area) = maximize_1d(|t| prob.area(t), lo, hi);
        return ArcOptimum {
            theta,
            area,
            critical: Vec::new(),
        };
    }
    let critical: Vec<f64> = quartic_critical_points(prob.w, prob.h)
        .into_iter()
        .filter(|&t| t > lo && t < hi)
        .collect();
    let mut best = (lo, prob.area(lo));
    for t in critical.iter().copied().chain(std::iter::once(hi)) {
        let a = prob.area(t);
        if a > best.1 {
            best = (t, a);
        }
    }
    ArcOptimum {
        theta: best.0,
        area: best.1,
        critical,
    }
}

/// Two opposite corners on two arcs: area
/// `(w - sin θ - sin φ)(h - cos θ - cos φ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArcPairProblem {
    pub w: f64,
    pub h: f64,
    pub theta: (f64, f64),
    pub phi: (f64, f64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct ArcPairOptimum {
    pub theta: f64,
    pub phi: f64,
    pub area: f64,
    /// Every candidate `(θ, φ)` examined: corners, boundary optima and
    /// interior stationary points.
    pub candidates: Vec<(f64, f64)>,
}

impl ArcPairProblem {
    pub fn area(&self, theta: f64, phi: f64) -> f64 {
        (self.w - theta.sin() - phi.sin()) * (self.h - theta.cos() - phi.cos())
    }
}

/// Maximizes the two-arc area.
///
/// Interior stationary points need `tan θ = tan φ = height / width`, so
/// `θ = φ` and the area is `4 (w/2 - sin θ)(h/2 - cos θ)`: a single-arc
/// problem on the intersection of both angle ranges. On the boundary one
/// angle sits at an endpoint and the other solves a single-arc problem.
pub fn optimize_arc_pair(prob: &ArcPairProblem) -> ArcPairOptimum {
    let (t0, t1) = (
        prob.theta.0.min(prob.theta.1),
        prob.theta.0.max(prob.theta.1),
    );
    let (p0, p1) = (prob.phi.0.min(prob.phi.1), prob.phi.0.max(prob.phi.1));
    let mut cands: Vec<(f64, f64)> = vec![(t0, p0), (t0, p1), (t1, p0), (t1, p1)];

    for &t in &[t0, t1] {
        let sub = ArcProblem::new(prob.w - t.sin(), prob.h - t.cos(), p0, p1);
        cands.push((t, optimize_arc(&sub).theta));
    }
    for &p in &[p0, p1] {
        let sub = ArcProblem::new(prob.w - p.sin(), prob.h - p.cos(), t0, t1);
        cands.push((optimize_arc(&sub).theta, p));
    }
    let (lo, hi) = (t0.max(p0), t1.min(p1));
    if lo <= hi {
        let diag = ArcProblem::new(0.5 * prob.w, 0.5 * prob.h, lo, hi);
        if diag.w > 1.0 && diag.h > 1.0 {
            for t in quartic_critical_points(diag.w, diag.h) {
                if t >= lo && t <= hi {
                    cands.push((t, t));
                }
            }
        }
        let t = optimize_arc(&diag).theta;
        cands.push((t, t));
    }

    let mut best = cands[0];
    let mut best_area = prob.area(best.0, best.1);
    for &(t, p) in &cands[1..] {
        let a = prob.area(t, p);
        if a > best_area {
            best_area = a;
            best = (t, p);
        }
    }
    ArcPairOptimum {
        theta: best.0,
        phi: best.1,
        area: best_area,
        candidates: cands,
    }
}

const SAMPLES: usize = 48;
const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Maximizes a piecewise-smooth `f` on `[lo, hi]`: a coarse scan, then a
/// golden-section search around every sampled local maximum.
pub fn maximize_1d(f: impl Fn(f64) -> f64, lo: f64, hi: f64) -> (f64, f64) {
    if !(hi > lo) {
        return (lo, f(lo));
    }
    let xs: Vec<f64> = (0..=SAMPLES)
        .map(|i| {
            if i == SAMPLES {
                hi
            } else {
                lo + (hi - lo) * i as f64 / SAMPLES as f64
            }
        })
        .collect();
    let ys: Vec<f64> = xs.iter().map(|&x| f(x)).collect();
    let mut best = (xs[0], ys[0]);
    for i in 0..=SAMPLES {
        if ys[i] > best.1 {
            best = (xs[i], ys[i]);
        }
        let left = if i == 0 { f64::NEG_INFINITY } else { ys[i - 1] };
        let right = if i == SAMPLES {
            f64::NEG_INFINITY
        } else {
            ys[i + 1]
        };
        if ys[i] >= left && ys[i] >= right {
            let a = xs[i.saturating_sub(1)];
            let b = xs[(i + 1).min(SAMPLES)];
            let (x, y) = golden(&f, a, b);
            if y > best.1 {
                best = (x, y);
            }
        }
    }
    best
}

fn golden(f: &impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> (f64, f64) {
    let tol = 1e-13 * (1.0 + a.abs().max(b.abs()));
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    while b - a > tol {
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
    let x = 0.5 * (a + b);
    let fx = f(x);
    [(x, fx), (c, fc), (d, fd)]
        .into_iter()
        .fold((x, fx), |acc, p| if p.1 > acc.1 { p } else { acc })
}

/// Angle of the point with local abscissa `u` on the lower-left quarter of
/// the unit circle centered at abscissa `cu`.
pub fn angle_at(cu: f64, u: f64) -> f64 {
    (cu - u).clamp(0.0, 1.0).asin()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_4;

    #[test]
    fn symmetric_case_has_quarter_turn_critical_point() {
        let r = optimize_arc(&ArcProblem::new(2.0, 2.0, 0.0, FRAC_PI_2));
        assert!(r.critical.iter().any(|t| (t - FRAC_PI_4).abs() < 1e-12));
        let p = ArcProblem::new(2.0, 2.0, 0.0, FRAC_PI_2);
        let expect = (2.0 - std::f64::consts::SQRT_2 / 2.0).powi(2);
        assert!((p.area(FRAC_PI_4) - expect).abs() < 1e-12);
        // the quarter turn is a minimum here; the ends give 2
        assert_eq!(r.area, 2.0);
    }

    #[test]
    fn quartic_at_one() {
        let q = quartic(2.0, 3.0);
        assert_eq!(eval_poly(&q, 1.0), 2.0);
        let p = ArcProblem::new(2.0, 3.0, 0.0, FRAC_PI_2);
        assert!(p.derivative(FRAC_PI_4).abs() > 0.1);
    }

    #[test]
    fn collapsed_interval() {
        let p = ArcProblem::new(3.0, 2.0, 0.3, 0.3);
        let r = optimize_arc(&p);
        assert_eq!(r.theta, 0.3);
        assert_eq!(r.area, p.area(0.3));
    }

    #[test]
    fn roots_of_known_polynomial() {
        // (x - 0.2)(x - 0.5)(x - 0.9)
        let p = [-0.09, 0.73, -1.6, 1.0];
        let r = real_roots(&p, 0.0, 1.0);
        assert_eq!(r.len(), 3);
        for (a, b) in r.iter().zip([0.2, 0.5, 0.9]) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn degenerate_pair_reduces_to_single_arc() {
        let pair = ArcPairProblem {
            w: 5.0,
            h: 4.0,
            theta: (0.0, FRAC_PI_2),
            phi: (0.4, 0.4),
        };
        let single = optimize_arc(&ArcProblem::new(
            5.0 - 0.4f64.sin(),
            4.0 - 0.4f64.cos(),
            0.0,
            FRAC_PI_2,
        ));
        let r = optimize_arc_pair(&pair);
        assert!((r.area - single.area).abs() < 1e-12);
        assert_eq!(r.phi, 0.4);
    }

    #[test]
    fn symmetric_pair_has_equal_angles() {
        let pair = ArcPairProblem {
            w: 6.0,
            h: 6.0,
            theta: (0.0, FRAC_PI_2),
            phi: (0.0, FRAC_PI_2),
        };
        let r = optimize_arc_pair(&pair);
        assert_eq!(r.area, pair.area(r.phi, r.theta));
        assert_eq!(r.area, 25.0);
    }
}
