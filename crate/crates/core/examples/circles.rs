// Largest red-enclosing rectangle avoiding unit circles, with its
// configuration label and the envelope structure of each corner.
//
// ```bash
// cargo run -p seprect --example circles
// ```

use seprect::circle::{check_csr, CircleSetup};
use seprect::gen::{generate, GenParams, Layout};
use seprect::solve_mbsr_c_detailed;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let inst = generate(&GenParams::circles(4, 16, 2, Layout::StaircaseAdversarial))?;
    let (red, circles, frame) = (inst.red_points(), inst.circles(), inst.frame());

    let setup = CircleSetup::new(&red, &circles, frame)?;
    println!("S_min {:?}", setup.smin);
    println!("S_max {:?}", setup.smax);
    for env in &setup.envelopes {
        let cases: Vec<String> = env
            .transitions
            .iter()
            .map(|t| format!("{:?}", t.case))
            .collect();
        println!(
            "{:?}: {} circles, {} pieces, transitions [{}]",
            env.quadrant,
            env.circles.len(),
            env.pieces.len(),
            cases.join(" ")
        );
    }

    let sol = solve_mbsr_c_detailed(&red, &circles, frame)?;
    let best = &sol.best;
    println!(
        "best {:?} area {} case {} ({:?}), {} cells",
        best.rect,
        best.rect.area(),
        best.case,
        best.stratum,
        sol.cells
    );
    let check = check_csr(&best.rect, &red, &circles, frame);
    if !check.ok() {
        return Err(format!("answer is not a CSR: {check:?}").into());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
