macro_rules! example {
    ($module:ident, $file:literal, $test:ident) => {
        mod $module {
            #![allow(dead_code)]
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $test() {
            $module::run_example().expect("example should run");
        }
    };
}

example!(outliers, "outliers.rs", outliers_example_runs);
example!(staircases, "staircases.rs", staircases_example_runs);
example!(circles, "circles.rs", circles_example_runs);
example!(
    arc_optimizer,
    "arc_optimizer.rs",
    arc_optimizer_example_runs
);
example!(oracle_check, "oracle_check.rs", oracle_check_example_runs);
example!(
    instance_files,
    "instance_files.rs",
    instance_files_example_runs
);
example!(scaling, "scaling.rs", scaling_example_runs);
