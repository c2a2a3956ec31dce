use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tropbase")).args(args).env_remove("TROPBASE_SEED").output().unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array().unwrap().iter().map(|s| s.as_str().unwrap().to_string()).collect()
}

const EX: &str = "(0,0,1);(1,2,0);(1,0,1)";

#[test]
fn explicit_basis_golden() {
    let f = data("example42.ideal");
    let doc = json(&run(&["basis", f.to_str().unwrap(), "--kernels", EX]));
    assert_eq!(doc["schema"], 1);
    assert_eq!(doc["codimension"], 2);
    assert_eq!(doc["method"], "elimination");
    assert_eq!(
        strings(&doc["basis"]),
        [
            "2*x + y - 4",
            "x + 2*y + z - 1",
            "2*x + y - 4",
            "6*x^2*z + 6*x^2 + y*z^2 + 14*y*z + 49*y",
            "3*x*y + 2*x - y*z + 4*z",
        ]
    );
    for p in doc["projections"].as_array().unwrap() {
        assert_eq!(p["checks"]["contained"], true);
        assert_eq!(p["checks"]["kernel_homogeneous"], true);
        assert_eq!(p["checks"]["algebraic_regularity"]["enforced"], false);
    }
}

#[test]
fn explicit_methods_agree() {
    let f = data("example42.ideal");
    let a = json(&run(&["basis", f.to_str().unwrap(), "--kernels", EX, "--method", "elimination"]));
    let b = json(&run(&["basis", f.to_str().unwrap(), "--kernels", EX, "--method", "graded"]));
    assert_eq!(a["basis"], b["basis"]);
    assert_eq!(b["method"], "graded");
}

#[test]
fn reports_are_byte_identical() {
    let f = data("example42.ideal");
    let dir = tempfile::tempdir().unwrap();
    let outs: Vec<Vec<u8>> = [["--sequential"].as_slice(), &[], &[]]
        .iter()
        .enumerate()
        .map(|(i, extra)| {
            let path = dir.path().join(format!("r{i}.json"));
            let mut args = extra.to_vec();
            args.extend(["basis", f.to_str().unwrap(), "--seed", "11", "-o", path.to_str().unwrap()]);
            assert!(run(&args).status.success());
            std::fs::read(path).unwrap()
        })
        .collect();
    assert_eq!(outs[0], outs[1]);
    assert_eq!(outs[1], outs[2]);
    let doc: Value = serde_json::from_slice(&outs[0]).unwrap();
    assert_eq!(doc["kernels"]["mode"], "random");
    assert_eq!(doc["method"], "graded");
    assert!(doc.get("timings_ms").is_none());
}

#[test]
fn seed_from_environment() {
    let f = data("example42.ideal");
    let flag = run(&["basis", f.to_str().unwrap(), "--seed", "5"]);
    let env = Command::new(env!("CARGO_BIN_EXE_tropbase"))
        .args(["basis", f.to_str().unwrap()])
        .env("TROPBASE_SEED", "5")
        .output()
        .unwrap();
    assert_eq!(flag.stdout, env.stdout);
}

#[test]
fn basis_report_round_trips_into_member() {
    let f = data("example42.ideal");
    let dir = tempfile::tempdir().unwrap();
    let rep = dir.path().join("basis.json");
    assert!(run(&["basis", f.to_str().unwrap(), "--kernels", EX, "-o", rep.to_str().unwrap()]).status.success());
    // x = 2u, y = 4(1 - u), z = 6u - 7 gives valuations (1, 2 + v(1 - u), 0).
    for (w, inside) in [("1,2,0", true), ("-1,0,-1", true), ("0,2,0", false), ("2,0,-1", false)] {
        let doc = json(&run(&["member", rep.to_str().unwrap(), &format!("--point={w}")]));
        assert_eq!(doc["polynomials"].as_array().unwrap().len(), 5);
        assert_eq!(doc["member"], inside, "{w}");
    }
}

#[test]
fn qn_small() {
    let doc = json(&run(&["qn", "--v", "1"]));
    assert_eq!(doc["count"], 2);
    assert_eq!(doc["image"], serde_json::json!([[1]]));
}

#[test]
fn usage_errors_exit_two() {
    let out = run(&["basis", data("undeclared.ideal").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains(":4:3:") && err.contains("undeclared"), "{err}");

    let out = run(&["basis", data("example42.ideal").to_str().unwrap(), "--kernels", "(0,0,1)"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["member", data("line.ideal").to_str().unwrap(), "--point", "1,2,3"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["basis", "/nonexistent/file.ideal"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cells_and_segments() {
    let doc = json(&run(&["cells", data("line.ideal").to_str().unwrap(), "--emit-segments"]));
    let dims: Vec<u64> = doc["cells"].as_array().unwrap().iter().map(|c| c["dimension"].as_u64().unwrap()).collect();
    assert_eq!(dims.iter().filter(|&&d| d == 1).count(), 3);
    assert_eq!(dims.iter().filter(|&&d| d == 0).count(), 1);
    let segs = doc["segments"].as_array().unwrap();
    assert_eq!(segs.len(), 3);
    assert!(segs.iter().all(|s| s["kind"] == "ray"));
}

#[test]
fn extend_line() {
    let doc = json(&run(&["extend", data("line.ideal").to_str().unwrap(), "--w", "0"]));
    assert_eq!(doc["text"], serde_json::json!(["[0, inf)"]));
}

#[test]
fn project_and_resultant() {
    let doc = json(&run(&["project", data("example42.ideal").to_str().unwrap(), "--kernel", "(1,0,1)"]));
    assert_eq!(doc["polynomial"], "3*x*y + 2*x - y*z + 4*z");
    // The first input has degree 0 in l, so the resultant is that input itself.
    let out = run(&["resultant", data("two.ideal").to_str().unwrap(), "--var", "l"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "2*x + y - 4");
}

#[test]
fn t_adic_field() {
    let f = data("tadic.ideal");
    assert_eq!(json(&run(&["member", f.to_str().unwrap(), "--point", "0,0"]))["member"], true);
    assert_eq!(json(&run(&["member", f.to_str().unwrap(), "--point", "0,-1"]))["member"], false);
    let doc = json(&run(&["basis", f.to_str().unwrap(), "--seed", "1"]));
    assert_eq!(doc["field"], "Q(t)");
}
