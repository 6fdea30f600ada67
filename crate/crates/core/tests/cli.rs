use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn seprect(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_seprect"))
        .args(args)
        .env_remove("SEPRECT_SEED")
        .output()
        .expect("binary runs")
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn solves_and_reports_json() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(
        dir.path(),
        "i.json",
        r#"{"red": [[0, 0], [2, 1]], "blue_points": [[3, 0.5], [-1, 0.5], [1, 2], [1, -1], [2.5, 1.5]], "k": 1, "frame": [-5, -5, 5, 5]}"#,
    );
    let out = seprect(&["solve", "--input", path_str(&input), "--json", "--verify"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    for key in ["rect", "area", "outliers_used", "algorithm", "elapsed_ns"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["rect"].as_array().unwrap().len(), 4);
}

#[test]
fn zero_outliers_matches_plain_problem() {
    let dir = tempfile::tempdir().unwrap();
    let gen = seprect(&["gen", "--n", "4", "--m", "15", "--k", "0", "--seed", "5"]);
    let input = write(
        dir.path(),
        "i.json",
        &String::from_utf8(gen.stdout).unwrap(),
    );
    let a = seprect(&["solve", "--input", path_str(&input), "--problem", "mbsr-o"]);
    let b = seprect(&["solve", "--input", path_str(&input), "--problem", "mbsr"]);
    let a = String::from_utf8(a.stdout).unwrap();
    let b = String::from_utf8(b.stdout).unwrap();
    assert_eq!(
        a.lines().take(2).collect::<Vec<_>>(),
        b.lines().take(2).collect::<Vec<_>>()
    );
}

#[test]
fn malformed_json_exits_3_with_position() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "bad.json", "{\"red\": [[0, 0],\n  [1, ]]}");
    let out = seprect(&["solve", "--input", path_str(&input)]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 2 column"), "{err}");
}

#[test]
fn unbounded_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(
        dir.path(),
        "u.json",
        r#"{"red": [[0, 0]], "blue_points": [[5, 0]]}"#,
    );
    assert_eq!(
        seprect(&["solve", "--input", path_str(&input)])
            .status
            .code(),
        Some(2)
    );
    let circles = write(
        dir.path(),
        "c.json",
        r#"{"red": [[0, 0]], "blue_circles": [[5, 0]]}"#,
    );
    assert_eq!(
        seprect(&["solve", "--input", path_str(&circles)])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn bad_arguments_exit_3() {
    assert_eq!(seprect(&["solve"]).status.code(), Some(3));
    assert_eq!(
        seprect(&["gen", "--layout", "spiral"]).status.code(),
        Some(3)
    );
    assert_eq!(seprect(&["--help"]).status.code(), Some(0));
}

#[test]
fn mismatched_problem_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(
        dir.path(),
        "c.json",
        r#"{"red": [[0, 0]], "blue_circles": [[5, 0]]}"#,
    );
    let out = seprect(&["solve", "--input", path_str(&input), "--problem", "mbsr-o"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn wrong_golden_answer_exits_4() {
    let golden =
        Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data/golden/points_uniform_k1.json");
    let mut rec: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(golden).unwrap()).unwrap();
    let area = rec["result"]["area"].as_f64().unwrap();
    rec["result"]["area"] = serde_json::json!(area + 1.0);
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "g.json", &rec.to_string());
    let out = seprect(&["solve", "--input", path_str(&input), "--verify"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn verify_passes_on_golden_corpus() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data/golden");
    let mut n = 0;
    for entry in std::fs::read_dir(dir).unwrap() {
        let p = entry.unwrap().path();
        let out = seprect(&["solve", "--input", path_str(&p), "--verify"]);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{}: {}",
            p.display(),
            String::from_utf8_lossy(&out.stderr)
        );
        n += 1;
    }
    assert_eq!(n, 18);
}

#[test]
fn gen_is_seed_stable_and_env_overrides() {
    let args = [
        "gen",
        "--kind",
        "circles",
        "--n",
        "3",
        "--m",
        "9",
        "--seed",
        "17",
        "--layout",
        "clustered",
    ];
    let a = seprect(&args).stdout;
    assert_eq!(a, seprect(&args).stdout);
    let other = seprect(&[
        "gen",
        "--kind",
        "circles",
        "--n",
        "3",
        "--m",
        "9",
        "--seed",
        "4",
        "--layout",
        "clustered",
    ]);
    assert_ne!(a, other.stdout);
    let env = Command::new(env!("CARGO_BIN_EXE_seprect"))
        .args([
            "gen",
            "--kind",
            "circles",
            "--n",
            "3",
            "--m",
            "9",
            "--seed",
            "4",
            "--layout",
            "clustered",
        ])
        .env("SEPRECT_SEED", "17")
        .output()
        .unwrap();
    assert_eq!(env.stdout, a);
}

#[test]
fn gen_rejects_impossible_frames() {
    let out = seprect(&["gen", "--kind", "circles", "--m", "5", "--frame", "0,0,1,1"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn svg_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let gen = seprect(&[
        "gen",
        "--kind",
        "circles",
        "--n",
        "3",
        "--m",
        "8",
        "--seed",
        "2",
        "--layout",
        "staircase-adversarial",
    ]);
    let input = write(
        dir.path(),
        "c.json",
        &String::from_utf8(gen.stdout).unwrap(),
    );
    let (a, b) = (dir.path().join("a.svg"), dir.path().join("b.svg"));
    for p in [&a, &b] {
        let out = seprect(&["solve", "--input", path_str(&input), "--svg", path_str(p)]);
        assert_eq!(out.status.code(), Some(0));
    }
    let a = std::fs::read_to_string(a).unwrap();
    assert_eq!(a, std::fs::read_to_string(b).unwrap());
    assert!(a.starts_with("<svg") && a.contains("y-up") && a.contains("class=\"answer\""));
}

#[test]
fn bench_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("b.csv");
    let out = seprect(&[
        "bench",
        "--m-grid",
        "8,16",
        "--k-grid",
        "1",
        "--reps",
        "5",
        "--out",
        path_str(&csv),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("m,k,algorithm,median_ns,reps"));
    assert_eq!(lines.count(), 4);
    assert!(String::from_utf8(out.stdout).unwrap().contains("slope"));

    let empty = dir.path().join("e.csv");
    let out = seprect(&[
        "bench",
        "--m-grid",
        "",
        "--k-grid",
        "1",
        "--out",
        path_str(&empty),
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(
        std::fs::read_to_string(empty).unwrap(),
        "m,k,algorithm,median_ns,reps\n"
    );
    assert_eq!(seprect(&["bench", "--reps", "2"]).status.code(), Some(3));
}
