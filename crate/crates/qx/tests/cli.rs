use qx::cli::{check_for, evaluate, plan, Algebra, Caps, Options, IDENTITIES};
use serde_json::Value;
use std::process::Command;

fn qx(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qx")).args(args).env_remove("QX_JOBS").output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn element_verbs() {
    assert_eq!(qx(&["sdet", "--case", "O", "--N", "2"]), (0, "x[1,1]*x[2,2] - q*x[1,2]^2\n".into(), String::new()));
    let (code, out, _) = qx(&["pf", "--N", "4"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "x[1,2]*x[3,4] - q*x[1,3]*x[2,4] + q^2*x[1,4]*x[2,3]");
    let (_, out, _) = qx(&["normal-form", "--case", "O", "--N", "2", "x[2,1]"]);
    assert_eq!(out.trim(), "q^-1*x[1,2]");
    let (_, out, _) = qx(&["det", "--N", "2"]);
    assert_eq!(out.trim(), "t[1,1]*t[2,2] - q*t[1,2]*t[2,1]");
    let (_, out, _) = qx(&["minor", "--case", "Mat", "--N", "3", "--rows", "1,2", "--cols", "2,3"]);
    assert_eq!(out.trim(), "t[1,2]*t[2,3] - q*t[1,3]*t[2,2]");
    let (_, out, _) = qx(&["basis", "--case", "Ext", "--N", "3", "--degree", "2"]);
    assert!(out.starts_with("3 basis words"));
}

#[test]
fn verify_report() {
    let (code, out, _) = qx(&["verify", "jacobi-sdet", "--case", "O", "--N", "3", "--I", "1,3", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["holds"], Value::Bool(true));
    assert_eq!(v["identity"], "jacobi-sdet");
    assert_eq!(v["case"], "O");
    assert_eq!(v["N"], 3);
    assert_eq!(v["terms"], 0);
    for key in ["params", "elapsed_ms", "notes"] {
        assert!(v.get(key).is_some(), "{}", key);
    }
}

#[test]
fn json_is_stable_modulo_time() {
    let strip = |s: String| {
        let mut v: Value = serde_json::from_str(&s).unwrap();
        v["elapsed_ms"] = Value::from(0);
        v.to_string()
    };
    let args = ["verify", "gp", "--N", "1", "--M", "3", "--format", "json"];
    assert_eq!(strip(qx(&args).1), strip(qx(&args).1));
}

#[test]
fn exit_codes() {
    assert_eq!(qx(&["verify", "nope"]).0, 2);
    assert_eq!(qx(&["pf", "--N", "3"]).0, 2);
    assert_eq!(qx(&["pf", "--case", "O", "--N", "2"]).0, 2);
    assert_eq!(qx(&["sdet", "--case", "O", "--N", "9"]).0, 2);
    assert_eq!(qx(&["normal-form", "--case", "O", "--N", "2", "x[1,"]).0, 2);
    assert_eq!(qx(&["frobnicate"]).0, 2);
    assert_eq!(qx(&["verify", "quasidet-sdet", "--N", "3", "--sigma", "1,1,2"]).0, 2);
    assert_eq!(qx(&["verify", "rtt", "--N", "2", "--perturb"]).0, 1);
    assert_eq!(qx(&["verify", "sylvester-sdet", "--N", "1", "--M", "2", "--border", "literal"]).0, 1);
    assert_eq!(qx(&["suite", "--only", "rtt,braid", "--max-N", "2"]).0, 0);
    assert_eq!(qx(&["suite", "--only", "rtt,braid", "--max-N", "2", "--perturb"]).0, 1);
}

#[test]
fn jobs_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_qx"))
        .args(["suite", "--only", "ybe", "--max-N", "2"])
        .env("QX_JOBS", "1")
        .output()
        .unwrap();
    assert!(out.status.success());
    let out = Command::new(env!("CARGO_BIN_EXE_qx"))
        .args(["suite", "--only", "ybe", "--max-N", "2"])
        .env("QX_JOBS", "many")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn catalog_file() {
    let path = std::env::temp_dir().join(format!("qx-catalog-{}.txt", std::process::id()));
    std::fs::write(&path, "# commuting minors\nsdet[1]*sdet[1,2] - sdet[1,2]*sdet[1]\n\nsdet[2]*sdet[1,2] - sdet[1,2]*sdet[2]\n").unwrap();
    let (code, out, _) = qx(&["verify", "cayley", "--case", "O", "--N", "2", "--catalog", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(code, 0, "{}", out);
    assert!(out.contains("2 identities"));
}

#[test]
fn registry_covers_every_name() {
    let checks = plan(Caps::uniform(6), false);
    for name in IDENTITIES {
        assert!(checks.iter().any(|c| c.identity == name), "{}", name);
        assert!(check_for(name, None, None, Options::default()).is_ok(), "{}", name);
    }
    assert!(check_for("rtt", Some(Algebra::Mat), Some(7), Options::default()).is_err());
    assert!(check_for("center-pf", Some(Algebra::Sp), Some(3), Options::default()).is_err());
    let c = check_for("plucker", Some(Algebra::O), Some(4), Options::default()).unwrap();
    assert!(evaluate(&c).is_err());
}

#[test]
fn default_caps() {
    let checks = plan(Caps::default(), false);
    assert!(checks.iter().all(|c| match c.case {
        Algebra::O => c.n <= 3,
        Algebra::Sp => c.n <= 4,
        _ => c.n <= 4,
    }));
}
