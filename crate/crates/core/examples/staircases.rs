// Level staircases of one quadrant and the corner bound they induce.
//
// ```bash
// cargo run -p seprect --example staircases
// ```

use seprect::geometry::{Point, Region};
use seprect::staircase::{build_staircases, VertexKind};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // NE quadrant of a red box whose corner is at the origin
    let blue = [
        (1.0, 6.0),
        (2.0, 4.0),
        (3.0, 5.0),
        (4.0, 2.0),
        (5.0, 3.0),
        (6.0, 1.0),
    ]
    .map(|(x, y)| Point::new(x, y));
    let set = build_staircases(&blue, Region::NE, 2);
    for (t, level) in set.levels.iter().enumerate() {
        let marks: Vec<String> = level
            .iter()
            .map(|v| {
                let tag = if v.kind == VertexKind::BluePoint {
                    "*"
                } else {
                    ""
                };
                format!("({}, {}){tag}", v.point.x, v.point.y)
            })
            .collect();
        println!("level {t}: {}", marks.join(" "));
    }
    let bound = set.corner_bound(1);
    for u in [0.5, 2.5, 4.5, 7.0] {
        println!("corner at x = {u} may rise to {}", bound.height_at(u));
    }
    println!("{} vertices in total", set.vertex_count());
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
