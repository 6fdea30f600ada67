//! Timing harness for the scaling claims.

use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;

use crate::circle::solve_mbsr_c;
use crate::error::{Error, Result};
use crate::gen::{generate, GenParams, Layout};
use crate::outlier::{solve_mbsr_o_baseline, solve_mbsr_o_pairset};

pub const CSV_HEADER: &str = "m,k,algorithm,median_ns,reps";
pub const MIN_REPS: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BenchProblem {
    MbsrO,
    MbsrC,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub m: usize,
    pub k: usize,
    pub algorithm: String,
    pub median_ns: u128,
    pub reps: usize,
}

/// Least-squares slope of `ln(time)` against `ln(x)` for one series.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Slope {
    pub algorithm: String,
    /// `"m"` or `"k"`.
    pub variable: &'static str,
    /// Value of the other variable along the series.
    pub fixed: usize,
    pub slope: f64,
    pub points: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
    pub slopes: Vec<Slope>,
}

impl BenchReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{},{}",
                r.m, r.k, r.algorithm, r.median_ns, r.reps
            );
        }
        out
    }
}

/// Slope of the least-squares line through `(ln x, ln y)`. Needs two
/// distinct positive abscissae.
pub fn loglog_slope(xy: &[(f64, f64)]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = xy
        .iter()
        .filter(|(x, y)| *x > 0.0 && *y > 0.0)
        .map(|(x, y)| (x.ln(), y.ln()))
        .collect();
    let n = pts.len() as f64;
    if pts.len() < 2 {
        return None;
    }
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

fn median(mut v: Vec<u128>) -> u128 {
    v.sort_unstable();
    v[v.len() / 2]
}

fn time_reps(reps: usize, mut f: impl FnMut() -> Result<()>) -> Result<u128> {
    let mut t = Vec::with_capacity(reps);
    for _ in 0..reps {
        let start = Instant::now();
        f()?;
        t.push(start.elapsed().as_nanos());
    }
    Ok(median(t))
}

fn check_grid(name: &str, grid: &[usize]) -> Result<()> {
    if grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidInstance(format!(
            "{name} grid must be strictly increasing, got {grid:?}"
        )));
    }
    Ok(())
}

/// Times each algorithm once per `(m, k)` cell on a fixed-seed instance.
/// Point instances use the staircase-adversarial layout with 10 red
/// points; circle instances ignore `k` and use the same layout.
pub fn run_bench(
    problem: BenchProblem,
    m_grid: &[usize],
    k_grid: &[usize],
    reps: usize,
) -> Result<BenchReport> {
    if reps < MIN_REPS {
        return Err(Error::InvalidInstance(format!(
            "reps must be at least {MIN_REPS}, got {reps}"
        )));
    }
    check_grid("m", m_grid)?;
    check_grid("k", k_grid)?;
    let mut rows = Vec::new();
    match problem {
        BenchProblem::MbsrO => {
            for &k in k_grid {
                for &m in m_grid {
                    let seed = (m as u64) << 8 | k as u64;
                    let inst = generate(&GenParams::points(
                        10,
                        m,
                        k,
                        seed,
                        Layout::StaircaseAdversarial,
                    ))?;
                    let (red, blue, frame) = (inst.red_points(), inst.blue_points(), inst.frame());
                    let base = time_reps(reps, || {
                        solve_mbsr_o_baseline(&red, &blue, k, frame).map(|_| ())
                    })?;
                    let pair = time_reps(reps, || {
                        solve_mbsr_o_pairset(&red, &blue, k, frame).map(|_| ())
                    })?;
                    for (alg, ns) in [("baseline_k7", base), ("pairset_k3", pair)] {
                        rows.push(BenchRow {
                            m,
                            k,
                            algorithm: alg.into(),
                            median_ns: ns,
                            reps,
                        });
                    }
                }
            }
        }
        BenchProblem::MbsrC => {
            for &m in m_grid {
                let inst = generate(&GenParams::circles(
                    4,
                    m,
                    m as u64,
                    Layout::StaircaseAdversarial,
                ))?;
                let (red, circles, frame) = (inst.red_points(), inst.circles(), inst.frame());
                let ns = time_reps(reps, || solve_mbsr_c(&red, &circles, frame).map(|_| ()))?;
                rows.push(BenchRow {
                    m,
                    k: 0,
                    algorithm: "circles".into(),
                    median_ns: ns,
                    reps,
                });
            }
        }
    }
    let slopes = fit_slopes(&rows);
    Ok(BenchReport { rows, slopes })
}

/// Slopes in `m` at each fixed `k`, and in `k` at each fixed `m`.
pub fn fit_slopes(rows: &[BenchRow]) -> Vec<Slope> {
    let mut algs: Vec<&str> = rows.iter().map(|r| r.algorithm.as_str()).collect();
    algs.sort_unstable();
    algs.dedup();
    let mut out = Vec::new();
    for alg in algs {
        let mine: Vec<&BenchRow> = rows.iter().filter(|r| r.algorithm == alg).collect();
        let mut ks: Vec<usize> = mine.iter().map(|r| r.k).collect();
        ks.sort_unstable();
        ks.dedup();
        let mut ms: Vec<usize> = mine.iter().map(|r| r.m).collect();
        ms.sort_unstable();
        ms.dedup();
        let mut push = |variable, fixed, xy: Vec<(f64, f64)>| {
            if let Some(slope) = loglog_slope(&xy) {
                out.push(Slope {
                    algorithm: alg.to_string(),
                    variable,
                    fixed,
                    slope,
                    points: xy.len(),
                });
            }
        };
        for &k in &ks {
            let xy = mine
                .iter()
                .filter(|r| r.k == k)
                .map(|r| (r.m as f64, r.median_ns as f64))
                .collect();
            push("m", k, xy);
        }
        for &m in &ms {
            let xy = mine
                .iter()
                .filter(|r| r.m == m)
                .map(|r| (r.k as f64, r.median_ns as f64))
                .collect();
            push("k", m, xy);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slope_of_power_law() {
        let xy: Vec<(f64, f64)> = (1..6)
            .map(|i| (i as f64, 3.0 * (i as f64).powi(2)))
            .collect();
        assert!((loglog_slope(&xy).unwrap() - 2.0).abs() < 1e-12);
        assert_eq!(loglog_slope(&xy[..1]), None);
    }

    #[test]
    fn empty_grid_gives_header_only() {
        let r = run_bench(BenchProblem::MbsrO, &[], &[1], 5).unwrap();
        assert_eq!(r.to_csv(), format!("{CSV_HEADER}\n"));
        assert!(run_bench(BenchProblem::MbsrO, &[4, 2], &[1], 5).is_err());
        assert!(run_bench(BenchProblem::MbsrO, &[2], &[1], 4).is_err());
    }
}
