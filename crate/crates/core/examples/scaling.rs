// Small timing grid and the fitted log-log slopes.
//
// ```bash
// cargo run -p seprect --release --example scaling
// ```

use seprect::bench::{run_bench, BenchProblem};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let points = run_bench(BenchProblem::MbsrO, &[16, 32, 64], &[1, 2], 5)?;
    print!("{}", points.to_csv());
    let circles = run_bench(BenchProblem::MbsrC, &[4, 8, 16], &[0], 5)?;
    print!("{}", circles.to_csv());
    for s in points.slopes.iter().chain(&circles.slopes) {
        println!(
            "{} slope in {} (other fixed at {}): {:.2}",
            s.algorithm, s.variable, s.fixed, s.slope
        );
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
