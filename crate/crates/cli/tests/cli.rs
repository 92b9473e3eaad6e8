use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn opal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_opal"))
        .args(args)
        .env_remove("OPAL_SUITE_CONFIG")
        .output()
        .expect("the binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

fn leaf_object(marks: &[usize]) -> Value {
    json!({"tree": "leaf", "marks": marks, "width": 1})
}

/// The left-nested fully marked tree with `n ≥ 1` leaves.
fn left_nested(n: usize) -> Value {
    let mut tree = json!("leaf");
    for _ in 1..n {
        tree = json!([tree, "leaf"]);
    }
    json!({"tree": tree, "marks": (1..=n).collect::<Vec<_>>(), "width": n})
}

fn y(tree: Value, width: usize, sigma: &[usize]) -> String {
    let marks: Vec<usize> = (1..=width).collect();
    json!({"z": {"tree": tree, "marks": marks, "width": width}, "sigma": sigma}).to_string()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("opal-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn hom_between_equal_arities_is_the_symmetric_group() {
    let a = left_nested(3).to_string();
    let b = json!({"tree": ["leaf", ["leaf", "leaf"]], "marks": [1, 2, 3], "width": 3}).to_string();
    let out = opal(&["hom", "h", &a, &b]);
    assert_eq!(out.status.code(), Some(0));
    let perms: Vec<Value> = json_lines(&out)
        .into_iter()
        .map(|m| m["perm"].clone())
        .collect();
    assert_eq!(perms.len(), 6);
    assert!(perms.contains(&json!([1, 2, 3])));
    assert!(perms.contains(&json!([3, 2, 1])));
}

#[test]
fn hom_between_different_arities_is_empty() {
    let out = opal(&[
        "hom",
        "h",
        &left_nested(2).to_string(),
        &left_nested(3).to_string(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).is_empty());
}

#[test]
fn nullary_hom_into_the_unit() {
    let e = leaf_object(&[]).to_string();
    let out = opal(&["hom", "u", "[]", &e]);
    assert_eq!(out.status.code(), Some(0));
    let lines = json_lines(&out);
    assert_eq!(lines.len(), 1);
    assert_eq!(lines[0]["kind"], "nullary");
    assert_eq!(lines[0]["arrow"]["source"], json!([]));
    let exotic = opal(&["hom", "u", "[]", &e, "--kappa", "exotic"]);
    assert_eq!(json_lines(&exotic).len(), 1);
}

#[test]
fn hom_in_the_free_permutative_category() {
    let g = leaf_object(&[1]);
    let source = json!([g, g]).to_string();
    let target = json!([left_nested(2)]).to_string();
    let out = opal(&["hom", "l", &source, &target]);
    assert_eq!(out.status.code(), Some(0));
    let lines = json_lines(&out);
    // one function to a point, two wirings of the pair
    assert_eq!(lines.len(), 2);
    assert!(lines.iter().all(|m| m["f"] == json!([1, 1])));
}

#[test]
fn hom_graph_as_dot() {
    let g = leaf_object(&[1]).to_string();
    let out = opal(&["hom", "h", &g, &g, "--dot"]);
    assert!(stdout(&out).starts_with("digraph"));
    assert_eq!(
        opal(&["hom", "u", "[]", &g, "--dot"]).status.code(),
        Some(2)
    );
}

#[test]
fn default_kappa_three_is_left_nested() {
    let g = leaf_object(&[1]);
    let xs = json!([g, g, g]).to_string();
    let k3 = y(json!([["leaf", "leaf"], "leaf"]), 3, &[1, 2, 3]);
    let out = opal(&["eval", &k3, &xs]);
    assert_eq!(out.status.code(), Some(0));
    let value: Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(value, left_nested(3));
}

#[test]
fn canonical_isos_from_the_command_line() {
    let g = leaf_object(&[1]);
    let xs = json!([g, g, g]).to_string();
    let left = y(json!([["leaf", "leaf"], "leaf"]), 3, &[1, 2, 3]);
    let right = y(json!(["leaf", ["leaf", "leaf"]]), 3, &[1, 2, 3]);
    let same = opal(&["eval", &left, &xs, &left]);
    let v: Value = serde_json::from_str(stdout(&same).trim()).unwrap();
    assert_eq!(v["perm"], json!([1, 2, 3]));
    assert_eq!(v["source"], v["target"]);
    let assoc = opal(&["eval", &left, &xs, &right]);
    let v: Value = serde_json::from_str(stdout(&assoc).trim()).unwrap();
    assert_eq!(v["perm"], json!([1, 2, 3]));
    assert_ne!(v["source"], v["target"]);
    let swapped = y(json!(["leaf", "leaf"]), 2, &[2, 1]);
    let plain = y(json!(["leaf", "leaf"]), 2, &[1, 2]);
    let pair = json!([g, left_nested(2)]).to_string();
    let braid = opal(&["eval", &plain, &pair, &swapped]);
    let v: Value = serde_json::from_str(stdout(&braid).trim()).unwrap();
    assert_eq!(v["perm"], json!([3, 1, 2]));
}

#[test]
fn eval_rejects_mismatched_arities() {
    let g = leaf_object(&[1]);
    let k3 = y(json!([["leaf", "leaf"], "leaf"]), 3, &[1, 2, 3]);
    let out = opal(&["eval", &k3, &json!([g, g]).to_string()]);
    assert_eq!(out.status.code(), Some(2));
    let out = opal(&["eval", "not json", "[]"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn export_lists_objects_and_homs() {
    let out = opal(&["export", "--max-width", "1"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["objects"].as_array().unwrap().len(), 2);
    assert_eq!(v["homs"].as_array().unwrap().len(), 2);
    assert!(stdout(&opal(&["export", "--dot"])).starts_with("digraph"));
}

const SMALL: [&str; 6] = [
    "--max-tuple-length",
    "2",
    "--max-width",
    "2",
    "--max-arity",
    "2",
];

#[test]
fn small_verify_is_deterministic_json() {
    let mut args = vec!["verify", "--json", "--seed", "7"];
    args.extend(SMALL);
    let (a, b) = (opal(&args), opal(&args));
    assert_eq!(
        a.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&a.stderr)
    );
    assert_eq!(a.stdout, b.stdout);
    let report: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(report["passed"], json!(true));
    assert_eq!(report["config"]["seed"], json!(7));
    let names: Vec<&str> = report["suites"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["suite"].as_str().unwrap())
        .collect();
    assert_eq!(names[0], "smc-H");
    assert_eq!(names[1], "operad-Y");
    assert!(names.contains(&"adjunction"));
}

#[test]
fn degenerate_tuple_length_is_valid() {
    let out = opal(&["verify", "--max-tuple-length", "0", "--max-width", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}

#[test]
fn mutations_fail_with_status_one() {
    let mut args = vec!["verify", "--mutate", "drop-sigma-f"];
    args.extend(SMALL);
    let out = opal(&args);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL adjunction"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(
        opal(&["verify", "--max-width", "-1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        opal(&["verify", "--kappa", "sideways"]).status.code(),
        Some(2)
    );
    assert_eq!(
        opal(&["verify", "--mutate", "nothing"]).status.code(),
        Some(2)
    );
    assert_eq!(
        opal(&["verify", "--kappa", "file:/no/such/file"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(opal(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn config_file_from_the_environment() {
    let good = scratch(
        "good.toml",
        "max_tuple_length = 1\nmax_width = 2\nmax_arity = 2\nkappa = [\"right-nested\"]\n",
    );
    let out = Command::new(env!("CARGO_BIN_EXE_opal"))
        .args(["verify", "--json"])
        .env("OPAL_SUITE_CONFIG", &good)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["config"]["max_tuple_length"], json!(1));
    assert_eq!(report["config"]["kappa"], json!(["right-nested"]));

    let bad = scratch("bad.toml", "max_tuple_length = \"four\"\n");
    let out = Command::new(env!("CARGO_BIN_EXE_opal"))
        .arg("verify")
        .env("OPAL_SUITE_CONFIG", &bad)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let unknown = scratch("unknown.toml", "colour = 3\n");
    assert_eq!(
        opal(&["verify", "--config", unknown.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn kappa_from_a_table_file() {
    // κ_2 with the two variables swapped
    let table = json!({"2": serde_json::from_str::<Value>(&y(json!(["leaf", "leaf"]), 2, &[2, 1])).unwrap()});
    let path = scratch("kappa.json", &table.to_string());
    let kappa = format!("file:{}", path.display());
    let mut args = vec!["verify", "--kappa", &kappa];
    args.extend(SMALL);
    let out = opal(&args);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("multicategory/file:"));
}
