// Generating, writing, reading and drawing instances.
//
// ```bash
// cargo run -p seprect --example instance_files
// ```

use seprect::gen::{generate, GenParams, Layout};
use seprect::io::InstanceFile;
use seprect::svg::{circles_figure, points_figure};
use seprect::{solve_mbsr_c, solve_mbsr_o_baseline};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir().join("seprect-example");
    std::fs::create_dir_all(&dir)?;

    let inst = generate(&GenParams::points(
        5,
        24,
        2,
        3,
        Layout::StaircaseAdversarial,
    ))?;
    let text = inst.render();
    let back = InstanceFile::parse(&text)?;
    assert_eq!(back, inst);
    std::fs::write(dir.join("points.json"), &text)?;

    let (red, blue, k) = (back.red_points(), back.blue_points(), back.k.unwrap_or(0));
    let best = solve_mbsr_o_baseline(&red, &blue, k, back.frame())?.best;
    let svg = points_figure(&red, &blue, k, back.frame(), Some(&best))?;
    std::fs::write(dir.join("points.svg"), &svg)?;

    let disks = generate(&GenParams::circles(3, 10, 5, Layout::StaircaseAdversarial))?;
    let (red, circles) = (disks.red_points(), disks.circles());
    let best = solve_mbsr_c(&red, &circles, disks.frame())?.best;
    let svg = circles_figure(&red, &circles, disks.frame(), Some(&best))?;
    std::fs::write(dir.join("circles.svg"), &svg)?;

    match InstanceFile::parse("{\"red\": [[0, 0]], \"blue_points\": [[1, NaN]]}") {
        Ok(_) => return Err("NaN must be rejected".into()),
        Err(e) => println!("rejected: {e}"),
    }
    println!(
        "wrote points.json, points.svg and circles.svg to {}",
        dir.display()
    );
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
