// Separating rectangle that may enclose up to `k` blue points, solved by
// both algorithms.
//
// ```bash
// cargo run -p seprect --example outliers
// ```

use seprect::gen::{generate, GenParams, Layout};
use seprect::{solve_mbsr, solve_mbsr_o_baseline, solve_mbsr_o_pairset};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let inst = generate(&GenParams::points(6, 40, 3, 7, Layout::Uniform))?;
    let (red, blue, frame) = (inst.red_points(), inst.blue_points(), inst.frame());

    let strict = solve_mbsr(&red, &blue, frame)?;
    println!("k = 0: {:?} area {}", strict.best, strict.best.area());

    for k in 1..=3 {
        let base = solve_mbsr_o_baseline(&red, &blue, k, frame)?;
        let pair = solve_mbsr_o_pairset(&red, &blue, k, frame)?;
        println!(
            "k = {k}: area {} with {} outliers ({} compositions baseline, {} pair-set)",
            base.best.area(),
            base.outliers_used,
            base.compositions_tried,
            pair.compositions_tried
        );
        if base.best.area() != pair.best.area() {
            return Err(format!("algorithms disagree at k = {k}").into());
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
