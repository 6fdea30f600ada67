//! Acceptance report: one PASS/FAIL line per criterion.
//!
//! Criteria 1, 2, 4, 5 and 6 are hard: a FAIL exits non-zero. The vertex
//! budget in criterion 3 and the scaling report in criterion 7 are printed
//! but do not fail the run.

use std::f64::consts::FRAC_PI_2;
use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use seprect::bench::{run_bench, BenchProblem};
use seprect::circle::arc::{optimize_arc, quartic, ArcProblem};
use seprect::circle::{check_csr, CircleSetup};
use seprect::gen::{generate, GenParams, Layout};
use seprect::geometry::{smallest_enclosing_rect, Partition, Region};
use seprect::io::InstanceFile;
use seprect::oracle::{oracle_arc_max_1d, oracle_mbsr_c, oracle_mbsr_o, oracle_staircase_levels};
use seprect::staircase::build_staircases;
use seprect::{solve_mbsr_c, solve_mbsr_o_baseline, solve_mbsr_o_pairset};

const LAYOUTS: [Layout; 3] = [
    Layout::Uniform,
    Layout::Clustered,
    Layout::StaircaseAdversarial,
];

struct Report {
    hard_failures: usize,
}

impl Report {
    fn line(&mut self, id: u8, pass: bool, hard: bool, text: String) {
        println!(
            "{} criterion {id}: {text}",
            if pass { "PASS" } else { "FAIL" }
        );
        if hard && !pass {
            self.hard_failures += 1;
        }
    }
}

fn point_corpus() -> Vec<InstanceFile> {
    (0..600u64)
        .map(|seed| {
            let n = 1 + (seed % 10) as usize;
            let m = (seed * 7 % 26) as usize;
            let k = (seed % 5) as usize;
            let layout = LAYOUTS[(seed % 3) as usize];
            generate(&GenParams::points(n, m, k, seed, layout)).unwrap()
        })
        .collect()
}

fn circle_corpus() -> Vec<InstanceFile> {
    (0..150u64)
        .map(|seed| {
            let n = 1 + (seed % 4) as usize;
            let m = 1 + (seed % 8) as usize;
            let layout = LAYOUTS[(seed % 3) as usize];
            generate(&GenParams::circles(n, m, 10_000 + seed, layout)).unwrap()
        })
        .collect()
}

fn criteria_1_2(r: &mut Report) {
    let corpus = point_corpus();
    let start = Instant::now();
    let (mut oracle_eq, mut algo_eq) = (0, 0);
    for inst in &corpus {
        let (red, blue, f, k) = (
            inst.red_points(),
            inst.blue_points(),
            inst.frame(),
            inst.k.unwrap(),
        );
        let o = oracle_mbsr_o(&red, &blue, k, f).unwrap().area();
        let b = solve_mbsr_o_baseline(&red, &blue, k, f)
            .unwrap()
            .best
            .area();
        let p = solve_mbsr_o_pairset(&red, &blue, k, f).unwrap().best.area();
        oracle_eq += usize::from(b == o);
        algo_eq += usize::from(p == b);
    }
    let secs = start.elapsed().as_secs_f64();
    let n = corpus.len();
    r.line(
        1,
        oracle_eq == n && n >= 500 && secs < 60.0,
        true,
        format!("baseline area == oracle area exactly on {oracle_eq}/{n} instances (n<=10, m<=25, k<=4, 3 layouts) in {secs:.2}s"),
    );
    r.line(
        2,
        algo_eq == n,
        true,
        format!("pair-set area == baseline area on {algo_eq}/{n} instances"),
    );
}

fn criterion_3(r: &mut Report) {
    let (mut instances, mut equal, mut quadrants) = (0, 0, 0);
    let (mut over_budget, mut worst_ratio, mut over_loose) = (0, 0.0_f64, 0);
    for seed in 0..300u64 {
        let m = 1 + (seed * 13 % 50) as usize;
        let k = (seed % 6) as usize;
        let inst = generate(&GenParams::points(
            3,
            m,
            k,
            20_000 + seed,
            LAYOUTS[(seed % 3) as usize],
        ))
        .unwrap();
        let smin = smallest_enclosing_rect(&inst.red_points()).unwrap();
        let part = Partition::of_points(&inst.blue_points(), &smin);
        instances += 1;
        for q in Region::QUADRANTS {
            let pts = part.get(q);
            let set = build_staircases(pts, q, k);
            quadrants += 1;
            equal += usize::from(set.levels == oracle_staircase_levels(pts, q, k));
            let v = set.vertex_count();
            if v > 2 * pts.len() {
                over_budget += 1;
                worst_ratio = worst_ratio.max(v as f64 / pts.len() as f64);
            }
            over_loose += usize::from(v > (k + 1) * pts.len());
        }
    }
    r.line(
        3,
        equal == quadrants,
        true,
        format!("staircases == dominance-counting oracle on {equal}/{quadrants} quadrants of {instances} instances (m<=50, k<=5)"),
    );
    r.line(
        3,
        over_budget == 0,
        false,
        format!(
            "vertex budget <= 2m per quadrant exceeded in {over_budget}/{quadrants} quadrants (worst {worst_ratio:.2}m); \
             the (k+1)m bound is exceeded in {over_loose}"
        ),
    );
}

fn criterion_4(r: &mut Report) {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut worst = 0.0_f64;
    let draws = 10_000;
    for _ in 0..draws {
        let w = 1.0 + (1.0 - rng.gen::<f64>()) * 9.0;
        let h = 1.0 + (1.0 - rng.gen::<f64>()) * 9.0;
        let (a, b) = (
            rng.gen_range(0.0..=FRAC_PI_2),
            rng.gen_range(0.0..=FRAC_PI_2),
        );
        let (lo, hi) = (a.min(b), a.max(b));
        let got = optimize_arc(&ArcProblem::new(w, h, lo, hi)).area;
        let (_, want) = oracle_arc_max_1d(w, h, lo, hi);
        worst = worst.max((got - want).abs());
    }
    let mut identity = 0;
    for _ in 0..20 {
        let (w, h) = (rng.gen_range(1.0..10.0), rng.gen_range(1.0..10.0));
        let at_one: f64 = quartic(w, h).iter().sum();
        let want = 2.0 * (w - h) * (w - h);
        identity += usize::from((at_one - want).abs() <= 1e-12 * want.max(1.0));
    }
    r.line(
        4,
        worst <= 1e-9 && identity == 20,
        true,
        format!("quartic path vs golden-section over {draws} draws: max |diff| {worst:.2e} (tol 1e-9); quartic(1) == 2(w-h)^2 at {identity}/20"),
    );
}

fn criteria_5_6(r: &mut Report) {
    let corpus = circle_corpus();
    let (mut inside, mut csr, mut n) = (0, 0, 0);
    let mut worst_gap = 0.0_f64;
    for inst in &corpus {
        let (red, circles) = (inst.red_points(), inst.circles());
        let frame = inst.frame().unwrap();
        let got = solve_mbsr_c(&red, &circles, Some(frame)).unwrap().best;
        let centers: Vec<_> = circles.iter().map(|c| c.center).collect();
        let b = oracle_mbsr_c(&red, &centers, frame, 1e-3).unwrap();
        n += 1;
        let a = got.area();
        inside += usize::from(a >= b.best - b.slack && a <= b.upper + 1e-9);
        csr += usize::from(check_csr(&got, &red, &circles, Some(frame)).ok());
        worst_gap = worst_gap.max(b.upper - a);
    }
    r.line(
        5,
        n >= 100 && inside == n && csr == n,
        true,
        format!("circle area inside the oracle bracket on {inside}/{n} (m<=8, grid 1e-3, widest gap to the bound {worst_gap:.2e}); CSR checks pass on {csr}/{n}"),
    );

    let (mut samples, mut empty, mut maximal, mut envs) = (0, 0, 0, 0);
    for inst in corpus.iter().chain(&circle_extra()) {
        let (red, circles) = (inst.red_points(), inst.circles());
        let setup = CircleSetup::new(&red, &circles, inst.frame()).unwrap();
        for env in &setup.envelopes {
            envs += 1;
            for p in env.sample(1000) {
                samples += 1;
                empty += usize::from(env.corner_is_empty(p, &circles));
                maximal += usize::from(env.corner_is_maximal(p, &circles, 1e-6));
            }
        }
    }
    r.line(
        6,
        empty == samples && maximal == samples,
        true,
        format!("{samples} envelope samples over {envs} envelopes: empty corner {empty}, maximal at eps 1e-6 {maximal}"),
    );
}

fn circle_extra() -> Vec<InstanceFile> {
    (0..150u64)
        .map(|seed| {
            let m = 9 + (seed % 40) as usize;
            generate(&GenParams::circles(
                1 + (seed % 4) as usize,
                m,
                30_000 + seed,
                LAYOUTS[(seed % 3) as usize],
            ))
            .unwrap()
        })
        .collect()
}

fn criterion_7(r: &mut Report) {
    let points = run_bench(BenchProblem::MbsrO, &[64, 128, 256], &[1, 2, 3], 5).unwrap();
    let circles = run_bench(BenchProblem::MbsrC, &[8, 16, 32, 64], &[0], 5).unwrap();
    let slopes: Vec<String> = points
        .slopes
        .iter()
        .chain(&circles.slopes)
        .filter(|s| s.variable == "m")
        .map(|s| format!("{} (k={}) {:.2}", s.algorithm, s.fixed, s.slope))
        .collect();
    r.line(
        7,
        !slopes.is_empty(),
        false,
        format!(
            "log-log slopes in m, reported not asserted: {}",
            slopes.join(", ")
        ),
    );
}

fn main() -> ExitCode {
    let mut r = Report { hard_failures: 0 };
    criteria_1_2(&mut r);
    criterion_3(&mut r);
    criterion_4(&mut r);
    criteria_5_6(&mut r);
    criterion_7(&mut r);
    if r.hard_failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
