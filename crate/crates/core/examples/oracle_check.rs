// Cross-checks the solvers against the brute-force references on a batch
// of small random instances.
//
// ```bash
// cargo run -p seprect --release --example oracle_check
// ```

use seprect::circle::check_csr;
use seprect::gen::{generate, GenParams, Layout};
use seprect::oracle::{oracle_mbsr_c, oracle_mbsr_o};
use seprect::{solve_mbsr_c, solve_mbsr_o_pairset};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut agree = 0;
    for seed in 0..40 {
        let inst = generate(&GenParams::points(
            4,
            14,
            (seed % 4) as usize,
            seed,
            Layout::Clustered,
        ))?;
        let (red, blue, frame, k) = (
            inst.red_points(),
            inst.blue_points(),
            inst.frame(),
            inst.k.unwrap_or(0),
        );
        let fast = solve_mbsr_o_pairset(&red, &blue, k, frame)?.best.area();
        let slow = oracle_mbsr_o(&red, &blue, k, frame)?.area();
        if fast != slow {
            return Err(format!("seed {seed}: pair-set {fast}, oracle {slow}").into());
        }
        agree += 1;
    }
    println!("points: {agree} instances agree exactly");

    let mut worst_gap = 0.0_f64;
    for seed in 0..20 {
        let inst = generate(&GenParams::circles(
            3,
            6,
            seed,
            Layout::StaircaseAdversarial,
        ))?;
        let (red, circles) = (inst.red_points(), inst.circles());
        let frame = inst.frame().ok_or("generator writes a frame")?;
        let got = solve_mbsr_c(&red, &circles, Some(frame))?.best;
        let centers: Vec<_> = circles.iter().map(|c| c.center).collect();
        let bracket = oracle_mbsr_c(&red, &centers, frame, 1e-3)?;
        if got.area() < bracket.best - bracket.slack || got.area() > bracket.upper + 1e-9 {
            return Err(format!(
                "seed {seed}: {} outside the bracket {bracket:?}",
                got.area()
            )
            .into());
        }
        if !check_csr(&got, &red, &circles, Some(frame)).ok() {
            return Err(format!("seed {seed}: answer is not a CSR").into());
        }
        worst_gap = worst_gap.max(bracket.upper - got.area());
    }
    println!("circles: 20 instances inside the bracket, widest gap to the bound {worst_gap:.2e}");
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
