use std::f64::consts::FRAC_PI_2;

use proptest::prelude::*;

use seprect::circle::arc::{optimize_arc, ArcProblem};
use seprect::circle::{check_csr, CircleSetup};
use seprect::gen::{generate, GenParams, Layout};
use seprect::geometry::{Partition, Point, Rect, Region, UnitCircle};
use seprect::io::InstanceFile;
use seprect::oracle::oracle_staircase_levels;
use seprect::staircase::build_staircases;
use seprect::{solve_mbsr_c, solve_mbsr_o_baseline, solve_mbsr_o_pairset};

fn layout() -> impl Strategy<Value = Layout> {
    prop_oneof![
        Just(Layout::Uniform),
        Just(Layout::Clustered),
        Just(Layout::StaircaseAdversarial)
    ]
}

fn point_instance() -> impl Strategy<Value = InstanceFile> {
    (1usize..8, 0usize..25, 0usize..4, any::<u64>(), layout())
        .prop_map(|(n, m, k, seed, l)| generate(&GenParams::points(n, m, k, seed, l)).unwrap())
}

fn circle_instance() -> impl Strategy<Value = InstanceFile> {
    (1usize..5, 0usize..9, any::<u64>(), layout())
        .prop_map(|(n, m, seed, l)| generate(&GenParams::circles(n, m, seed, l)).unwrap())
}

fn mirror_x(p: Point) -> Point {
    Point::new(-p.x, p.y)
}

fn mirror_rect(r: Rect) -> Rect {
    Rect::new(-r.xmax, r.ymin, -r.xmin, r.ymax)
}

fn finite() -> impl Strategy<Value = f64> {
    prop_oneof![
        any::<f64>().prop_filter("finite", |v| v.is_finite()),
        -1e3..1e3f64
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn point_solvers_agree_and_respect_k(inst in point_instance()) {
        let (red, blue, f, k) = (inst.red_points(), inst.blue_points(), inst.frame(), inst.k.unwrap());
        let base = solve_mbsr_o_baseline(&red, &blue, k, f).unwrap();
        let pair = solve_mbsr_o_pairset(&red, &blue, k, f).unwrap();
        prop_assert_eq!(base.best.area(), pair.best.area());
        prop_assert!(base.outliers_used <= k);
        prop_assert!(red.iter().all(|p| base.best.contains_closed(*p)));
    }

    #[test]
    fn area_grows_with_k(inst in point_instance()) {
        let (red, blue, f) = (inst.red_points(), inst.blue_points(), inst.frame());
        let mut last = 0.0;
        for k in 0..4 {
            let a = solve_mbsr_o_pairset(&red, &blue, k, f).unwrap().best.area();
            prop_assert!(a >= last);
            last = a;
        }
    }

    #[test]
    fn points_mirror_equivariance(inst in point_instance()) {
        let (red, blue, f, k) = (inst.red_points(), inst.blue_points(), inst.frame(), inst.k.unwrap());
        let a = solve_mbsr_o_baseline(&red, &blue, k, f).unwrap();
        let mr: Vec<Point> = red.iter().copied().map(mirror_x).collect();
        let mb: Vec<Point> = blue.iter().copied().map(mirror_x).collect();
        let b = solve_mbsr_o_baseline(&mr, &mb, k, f.map(mirror_rect)).unwrap();
        prop_assert_eq!(a.best.area(), b.best.area());
    }

    #[test]
    fn staircases_match_counting(inst in point_instance(), k in 0usize..6) {
        let red = inst.red_points();
        let smin = seprect::geometry::smallest_enclosing_rect(&red).unwrap();
        let part = Partition::of_points(&inst.blue_points(), &smin);
        for q in Region::QUADRANTS {
            let pts = part.get(q);
            let set = build_staircases(pts, q, k);
            prop_assert_eq!(&set.levels, &oracle_staircase_levels(pts, q, k));
            prop_assert!(set.vertex_count() <= (k + 1) * pts.len());
        }
    }

    #[test]
    fn instance_round_trip(
        red in prop::collection::vec((finite(), finite()), 1..6),
        blue in prop::collection::vec((finite(), finite()), 0..6),
        k in prop::option::of(0usize..10),
    ) {
        let inst = InstanceFile {
            red: red.iter().map(|&(x, y)| [x, y]).collect(),
            blue_points: Some(blue.iter().map(|&(x, y)| [x, y]).collect()),
            k,
            ..Default::default()
        };
        prop_assert_eq!(InstanceFile::parse(&inst.render()).unwrap(), inst);
    }

    #[test]
    fn circle_answers_are_csrs(inst in circle_instance()) {
        let (red, circles, f) = (inst.red_points(), inst.circles(), inst.frame());
        let got = solve_mbsr_c(&red, &circles, f).unwrap().best;
        let check = check_csr(&got, &red, &circles, f);
        prop_assert!(check.ok(), "{:?}", check);
    }

    #[test]
    fn circles_mirror_equivariance(inst in circle_instance()) {
        let (red, circles, f) = (inst.red_points(), inst.circles(), inst.frame());
        let a = solve_mbsr_c(&red, &circles, f).unwrap().best.area();
        let mr: Vec<Point> = red.iter().copied().map(mirror_x).collect();
        let mc: Vec<UnitCircle> = circles.iter().map(|c| UnitCircle::new(-c.center.x, c.center.y)).collect();
        let b = solve_mbsr_c(&mr, &mc, f.map(mirror_rect)).unwrap().best.area();
        prop_assert!((a - b).abs() <= 1e-9 * a.max(1.0), "{} vs {}", a, b);
    }

    #[test]
    fn envelope_points_are_tight(inst in circle_instance()) {
        let (red, circles, f) = (inst.red_points(), inst.circles(), inst.frame());
        let setup = CircleSetup::new(&red, &circles, f).unwrap();
        for env in &setup.envelopes {
            for p in env.sample(100) {
                prop_assert!(env.corner_is_empty(p, &circles));
                prop_assert!(env.corner_is_maximal(p, &circles, 1e-6));
            }
        }
    }

    #[test]
    fn arc_optimum_dominates_samples(w in 1.0..10.0f64, h in 1.0..10.0f64, a in 0.0..FRAC_PI_2, b in 0.0..FRAC_PI_2) {
        let prob = ArcProblem::new(w, h, a.min(b), a.max(b));
        let best = optimize_arc(&prob);
        prop_assert!(best.theta >= prob.lo && best.theta <= prob.hi);
        for i in 0..=64 {
            let t = prob.lo + (prob.hi - prob.lo) * i as f64 / 64.0;
            prop_assert!(best.area >= prob.area(t) - 1e-12);
        }
    }
}

#[test]
fn antichain_layout_fills_level_zero() {
    let m = 400;
    let inst = generate(&GenParams::points(5, m, 0, 9, Layout::StaircaseAdversarial)).unwrap();
    let smin = seprect::geometry::smallest_enclosing_rect(&inst.red_points()).unwrap();
    let part = Partition::of_points(&inst.blue_points(), &smin);
    for q in Region::QUADRANTS {
        let level0 = build_staircases(part.get(q), q, 0).levels[0].len();
        assert!(level0 >= m / 8, "{q:?}: {level0} vertices");
    }
}
