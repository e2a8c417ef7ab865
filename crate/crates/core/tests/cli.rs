use serde_json::Value;
use sparse_halves::cli::{dispatch, EXIT_OK, EXIT_USAGE, EXIT_VIOLATION};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = dispatch(std::iter::once("sparse-halves").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> (i32, Value) {
    let (code, out, err) = run(args);
    assert!(!out.is_empty(), "no output for {args:?}: {err}");
    (code, serde_json::from_str(&out).unwrap())
}

#[test]
fn construct_dot_for_f33() {
    let (code, out, _) = run(&["construct", "F(3,3)", "--format", "dot"]);
    assert_eq!(code, EXIT_OK);
    let edges = out.lines().filter(|l| l.contains("--")).count();
    assert_eq!(edges, 12 * 3 / 2);
    for v in 0..12 {
        let deg = out
            .lines()
            .filter(|l| l.contains("--"))
            .filter(|l| l.trim().trim_end_matches(';').split(" -- ").any(|x| x.trim() == v.to_string()));
        assert_eq!(deg.count(), 3, "vertex {v}");
    }
}

#[test]
fn density_reports_a_sparse_half() {
    let (code, v) = json(&["density", "F(2,2)x2", "--alpha", "1/2", "--beta", "1/50"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["verdict"], "not dense");
    assert_eq!(v["witness"].as_array().unwrap().len(), 5);
    assert_eq!(v["witness_edges"], 2);
    assert_eq!(v["threshold"], "2/1");
}

#[test]
fn identity_check_passes() {
    let (code, v) = json(&["verify", "--part", "identity", "--spec", "F(2,2)x1"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["passed"], true);
}

#[test]
fn every_verify_part_runs_clean() {
    for part in ["i", "ii", "iii", "iv", "vi", "u4", "identity", "winding", "gon"] {
        let (code, v) = json(&["verify", "--part", part, "--spec", "F(2,2)x4", "--samples", "15", "--seed", "3"]);
        assert_eq!(code, EXIT_OK, "{part}");
        assert_eq!(v["failed"], 0, "{part}");
    }
}

#[test]
fn conditional_parts_need_divisibility() {
    let (code, _, err) = run(&["verify", "--part", "u4", "--spec", "F(2,2)x1"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("does not divide"));
}

#[test]
fn output_is_reproducible_and_seeded() {
    let args = ["verify", "--part", "ii", "--spec", "F(3,2)x2", "--samples", "10", "--seed", "42"];
    assert_eq!(run(&args), run(&args));
    let other = ["verify", "--part", "ii", "--spec", "F(3,2)x2", "--samples", "10", "--seed", "43"];
    assert_ne!(run(&args).1, run(&other).1);
}

#[test]
fn small_invariants() {
    assert_eq!(json(&["oddgirth", "F(4,3)"]).1["odd_girth"], 9);
    assert_eq!(json(&["alpha", "petersen"]).1["alpha"], 4);
    assert_eq!(json(&["chi", "K(3)"]).1["chi"], 3);
    let (_, v) = json(&["hom", "F(2,3)", "F(2,2)"]);
    assert_eq!(v["found"], false);
    assert!(v["map"].is_null());
    let (_, v) = json(&["hom", "C(9)", "F(2,2)"]);
    assert_eq!(v["found"], true);
    assert_eq!(v["map"].as_array().unwrap().len(), 9);
}

#[test]
fn sweep_and_winding() {
    let (code, v) = json(&["sweep", "F(2,2)x4"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["min_edges"], 8);
    assert_eq!(v["within_bound"], true);
    let (code, v) = json(&["trace-winding", "F(2,2)x2", "--start", "3"]);
    assert_eq!(code, EXIT_OK);
    assert!(v["period"].as_u64().unwrap() >= 2);
    assert!(run(&["sweep", "petersen"]).0 == EXIT_USAGE);
}

#[test]
fn beta_table_csv_is_exact() {
    let (code, out, _) = run(&["beta-table", "--spec", "K(10,10)", "--alpha", "3/5", "7/10"]);
    assert_eq!(code, EXIT_OK);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "construction,n,alpha,s,min_edges,ratio,eq1_target,eq2_target");
    assert_eq!(lines[1], "\"K(10,10)\",20,3/5,12,20,1/20,1/20,1/25");
    assert_eq!(lines[2], "\"K(10,10)\",20,7/10,14,40,1/10,1/10,3/50");
    let (_, v) = json(&["beta-table", "--spec", "C(5)", "--alpha", "1/2", "--format", "json"]);
    assert_eq!(v[0]["n"], 5);
}

#[test]
fn files_round_trip() {
    let dir = std::env::temp_dir().join(format!("sparse-halves-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let graph = dir.join("g.json");
    let (_, out, _) = run(&["construct", "F(2,3)x2"]);
    std::fs::write(&graph, &out).unwrap();
    let at = format!("@{}", graph.display());
    assert_eq!(json(&["alpha", &at]).1["alpha"], 6);

    let arr = dir.join("a.json");
    let (_, out, _) = run(&["construct", "F(2,2)x4", "--arrangement"]);
    std::fs::write(&arr, &out).unwrap();
    let at = format!("@{}", arr.display());
    assert_eq!(json(&["sweep", &at]).1["min_edges"], 8);
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn sweep_claims_nothing_without_the_angle_property() {
    // C5 x 2 placed with its classes interleaved still has the right graph
    // but violates the angle criterion, so no violation is claimed.
    let dir = std::env::temp_dir().join(format!("sparse-halves-cli-bad-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let (_, out, _) = run(&["construct", "F(2,2)x2", "--arrangement"]);
    let mut v: Value = serde_json::from_str(&out).unwrap();
    let positions: Vec<Value> = (0..10).map(|i| Value::String(format!("{i}/10"))).collect();
    v["positions"] = Value::Array(positions);
    let path = dir.join("bad.json");
    std::fs::write(&path, v.to_string()).unwrap();
    let (code, _, _) = run(&["sweep", &format!("@{}", path.display())]);
    assert_ne!(code, EXIT_VIOLATION);
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn usage_errors() {
    assert_eq!(run(&[]).0, EXIT_USAGE);
    assert_eq!(run(&["nope"]).0, EXIT_USAGE);
    assert_eq!(run(&["alpha", "F(2,2)x[1,2]"]).0, EXIT_USAGE);
    assert_eq!(run(&["density", "C(5)", "--alpha", "x", "--beta", "0"]).0, EXIT_USAGE);
    assert_eq!(run(&["density", "C(5)", "--alpha", "3/2", "--beta", "0"]).0, EXIT_USAGE);
    assert_eq!(run(&["hom", "C(70)", "C(5)"]).0, EXIT_USAGE);
}
