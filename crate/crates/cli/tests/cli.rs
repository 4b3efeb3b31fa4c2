use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tensor-walks"))
        .args(args)
        .env("TENSOR_WALKS_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

#[test]
fn z10_walks() {
    assert_eq!(json(&["walks", "--group", "Z10", "--k", "6", "--from", "0", "--to", "8"]), serde_json::json!({"count": "15"}));
    assert_eq!(json(&["walks", "--group", "Z10", "--k", "12"])["count"], "948");
}

#[test]
fn wreath_invariant_sequence() {
    let v = json(&["invariants", "--group", "Z2wrS2", "--k", "6"]);
    let got: Vec<u64> = v.as_array().unwrap().iter().map(|x| x.as_str().unwrap().parse().unwrap()).collect();
    assert_eq!(got, [1, 0, 1, 0, 4, 0, 16]);
}

#[test]
fn sl2_steinberg_poincare() {
    let paper = json(&["poincare", "--group", "SL2(3)", "--module", "steinberg", "--method", "paper"]);
    let character = json(&["poincare", "--group", "SL2(3)@steinberg", "--method", "character"]);
    // (1 - 3t + 2t^3) / ((1 + t)(1 - t)(1 - 3t)) after cancelling 1 - t
    assert_eq!(paper["num"], "1 - 2t - 2t^2");
    assert_eq!(paper["den"], "1 - 2t - 3t^2");
    assert_eq!(paper["num"], character["num"]);
    assert_eq!(paper["den"], character["den"]);
}

#[test]
fn cramer_and_character_poincare_agree() {
    for irrep in ["(3)", "(2,1)", "(1,1,1)"] {
        let a = json(&["poincare", "--group", "S3", "--lambda", irrep, "--method", "cramer"]);
        let b = json(&["poincare", "--group", "S3", "--lambda", irrep, "--method", "character"]);
        assert_eq!(a["num_coeffs"], b["num_coeffs"]);
        assert_eq!(a["den_coeffs"], b["den_coeffs"]);
    }
}

#[test]
fn auto_matches_every_explicit_method() {
    let cases: &[(&str, &str, &str, &[&str])] = &[
        ("Z10", "3", "7", &["matrix", "character", "closed"]),
        ("Z4xZ2", "(1,0)", "(3,1)", &["matrix", "character", "closed"]),
        ("paley(7)", "2", "6", &["matrix", "character", "closed"]),
        ("paley(13)", "0", "5", &["matrix", "character", "closed"]),
        ("circulant(9;1,3)", "1", "4", &["matrix", "character", "closed"]),
        ("S4", "(4)", "(2,1,1)", &["matrix", "character", "closed"]),
        ("S4", "(3,1)", "(2,2)", &["matrix", "character"]),
        ("Z3wrS3", "0", "0", &["character", "closed"]),
        ("GL2(5)", "0", "0", &["character", "closed"]),
    ];
    for &(group, from, to, methods) in cases {
        for k in ["0", "5", "8"] {
            let base = ["walks", "--group", group, "--k", k, "--from", from, "--to", to];
            let auto = run(&[&base[..], &["--method", "auto"]].concat());
            assert!(auto.status.success(), "{group} {k}");
            for m in methods {
                let explicit = run(&[&base[..], &["--method", m]].concat());
                assert_eq!(auto.stdout, explicit.stdout, "{group} k={k} {m}");
            }
        }
    }
}

#[test]
fn json_round_trips() {
    for args in [
        &["walks", "--group", "Z10", "--k", "6", "--to", "8"][..],
        &["dims", "--group", "S5", "--k", "4"],
        &["bratteli", "--group", "Z4xZ2", "--levels", "3"],
        &["quiver", "--group", "S4"],
        &["egf", "--group", "hypercube(3)", "--order", "5", "--to", "(1,0,1)"],
        &["diagalg", "--group", "Z2xZ2", "--k", "2", "--list"],
    ] {
        let out = run(args);
        assert!(out.status.success(), "{args:?}");
        let text = String::from_utf8(out.stdout).unwrap();
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string(&v).unwrap(), text.trim_end(), "{args:?}");
    }
}

#[test]
fn z4_z2_dims_and_bratteli() {
    let dims = json(&["dims", "--group", "Z4xZ2", "--k", "6"]);
    let get = |l: &str| dims.as_array().unwrap().iter().find(|e| e["irrep"] == l).unwrap()["count"].clone();
    assert_eq!(get("(2,0)"), "16");
    assert_eq!(get("(1,1)"), "12");
    assert_eq!(get("(0,0)"), "16");
    assert_eq!(get("(3,1)"), "20");
    let b = json(&["bratteli", "--group", "Z4xZ2", "--levels", "6"]);
    let z: Vec<&str> = b["levels"].as_array().unwrap().iter().map(|l| l["centralizer_dim"].as_str().unwrap()).collect();
    assert_eq!(z, ["1", "2", "6", "20", "72", "272", "1056"]);
}

#[test]
fn diagram_counts() {
    assert_eq!(json(&["diagalg", "--group", "Z4xZ2", "--k", "6", "--count"])["count"], "1056");
    let per_target = json(&["diagalg", "--group", "Z4xZ2", "--k", "6", "--target", "(3,1)"]);
    assert_eq!(per_target["count"], "400");
    let list = json(&["diagalg", "--group", "Z2xZ2", "--k", "2", "--list"]);
    assert_eq!(list.as_array().unwrap().len(), 8);
}

#[test]
fn egf_counts_match_walks() {
    let e = json(&["egf", "--group", "Z4xZ2", "--order", "6", "--to", "(3,1)"]);
    assert_eq!(e["counts"][6], "20");
    assert_eq!(e["coeffs"][6], "1/36");
}

#[test]
fn dot_and_csv() {
    let q = String::from_utf8(run(&["quiver", "--group", "S3", "--format", "dot"]).stdout).unwrap();
    assert!(q.starts_with("digraph"));
    let b = String::from_utf8(run(&["bratteli", "--group", "S3", "--levels", "2", "--format", "dot"]).stdout).unwrap();
    assert!(b.starts_with("digraph bratteli"));
    let c = String::from_utf8(run(&["invariants", "--group", "Z2wrS2", "--k", "4", "--csv"]).stdout).unwrap();
    assert_eq!(c, "k,count\n0,1\n1,0\n2,1\n3,0\n4,4\n");
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["walks", "--group", "Zq", "--k", "1"]), 2);
    assert_eq!(code(&["walks", "--group", "Z10"]), 2);
    assert_eq!(code(&["walks", "--group", "Z10", "--k", "1", "--to", "12"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["walks", "--group", "Z2wrS2", "--k", "2", "--to", "1"]), 3);
    assert_eq!(code(&["quiver", "--group", "Z2wrS2"]), 3);
    assert_eq!(code(&["poincare", "--group", "S4", "--method", "paper"]), 3);
    assert_eq!(code(&["diagalg", "--group", "S3", "--k", "2"]), 3);
    assert_eq!(code(&["verify", "--suite", "nonsense"]), 2);
    let bad_threads = Command::new(env!("CARGO_BIN_EXE_tensor-walks"))
        .args(["walks", "--group", "Z10", "--k", "1"])
        .env("TENSOR_WALKS_THREADS", "lots")
        .output()
        .unwrap();
    assert_eq!(bad_threads.status.code(), Some(2));
}

#[test]
fn verify_suite() {
    let v = json(&["verify", "--suite", "gauss", "--suite", "cyclic"]);
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 2);
    assert!(reports.iter().all(|r| r["passed"] == true));
}
