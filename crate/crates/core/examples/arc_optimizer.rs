// One rectangle corner sliding along a unit circle: the quartic in
// `tan θ` against plain golden-section search.
//
// ```bash
// cargo run -p seprect --example arc_optimizer
// ```

use std::f64::consts::FRAC_PI_2;

use seprect::circle::arc::{optimize_arc, optimize_arc_pair, quartic, ArcPairProblem, ArcProblem};
use seprect::oracle::oracle_arc_max_1d;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (w, h) in [(2.0, 2.0), (3.0, 1.5), (6.0, 9.0)] {
        let q = quartic(w, h);
        let sum: f64 = q.iter().sum();
        let prob = ArcProblem::new(w, h, 0.0, FRAC_PI_2);
        let best = optimize_arc(&prob);
        let (_, reference) = oracle_arc_max_1d(w, h, 0.0, FRAC_PI_2);
        println!(
            "w = {w}, h = {h}: quartic(1) = {sum} = 2(w-h)^2, critical {:?}, max {} (golden-section {})",
            best.critical, best.area, reference
        );
        if (best.area - reference).abs() > 1e-9 {
            return Err("quartic path disagrees with golden-section".into());
        }
    }
    let pair = optimize_arc_pair(&ArcPairProblem {
        w: 7.0,
        h: 5.0,
        theta: (0.0, FRAC_PI_2),
        phi: (0.0, FRAC_PI_2),
    });
    println!(
        "two opposite corners: theta {} phi {} area {}",
        pair.theta, pair.phi, pair.area
    );
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
