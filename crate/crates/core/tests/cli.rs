use std::path::PathBuf;
use std::process::Command;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

fn ybx(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_ybx")).args(args).output().expect("spawn ybx");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn cybe_exit_codes() {
    let gl2 = data("gl2.json");
    let (code, out, _) = ybx(&["check-cybe", "--algebra", &gl2, "--tensor", &data("t52proof.json")]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("CYBE defect: 0"), "{out}");

    let (code, out, _) = ybx(&["check-cybe", "--algebra", &gl2, "--tensor", &data("t52statement.json")]);
    assert_eq!(code, 1, "{out}");
    assert!(out.contains("e21⊗h⊗e12: -1"), "{out}");
}

#[test]
fn rb_on_shipped_operator() {
    let (code, out, _) = ybx(&["check-rb", "--algebra", &data("gl2.json"), "--op", &data("t3line1.json")]);
    assert_eq!(code, 0, "{out}");
    let (code, out, _) = ybx(&["check-usE", "--algebra", "gl2", "--op", &data("t3line1.json")]);
    assert_eq!(code, 1, "{out}");
    assert!(out.contains("2*lambda*E+e12"), "{out}");
}

#[test]
fn builtin_algebra_name() {
    let (code, out, _) = ybx(&["check-cybe", "--algebra", "gl2", "--tensor", &data("t52proof.json")]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn input_errors_exit_2() {
    let (code, _, err) = ybx(&["check-cybe", "--algebra", "gl2", "--tensor", "/nonexistent/file.json"]);
    assert_eq!(code, 2);
    assert!(!err.is_empty());
    let (code, _, _) = ybx(&["check-cybe", "--algebra", "gl2"]);
    assert_eq!(code, 2);
    let (code, _, _) = ybx(&["no-such-command"]);
    assert_eq!(code, 2);
    let (code, _, _) = ybx(&["catalog", "verify", "--only", "T9"]);
    assert_eq!(code, 2);
}

#[test]
fn output_is_deterministic() {
    let args = ["--format", "json", "cobracket", "--algebra", "gl2", "--tensor", "DATA"];
    let t = data("t52proof.json");
    let args: Vec<&str> = args.iter().map(|a| if *a == "DATA" { t.as_str() } else { a }).collect();
    let (c1, o1, _) = ybx(&args);
    let (c2, o2, _) = ybx(&args);
    assert_eq!((c1, &o1), (c2, &o2));
    serde_json::from_str::<serde_json::Value>(&o1).expect("json output");

    let (_, v1, _) = ybx(&["--format", "json", "catalog", "verify"]);
    let (_, v2, _) = ybx(&["--format", "json", "catalog", "verify"]);
    assert_eq!(v1, v2);
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("ybx-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("tensor.json");
    let p = path.display().to_string();
    let (code, _, err) =
        ybx(&["to-tensor", "--algebra", &data("gl2.json"), "--op", &data("t3line1.json"), "--out", &p]);
    assert_eq!(code, 0, "{err}");
    let written = std::fs::read_to_string(&path).unwrap();
    let v: serde_json::Value = serde_json::from_str(&written).unwrap();
    assert!(v.is_object());

    // The written tensor converts back to the original operator.
    let back = dir.join("op.json");
    let b = back.display().to_string();
    let (code, _, err) = ybx(&["to-operator", "--algebra", "gl2", "--tensor", &p, "--out", &b]);
    assert_eq!(code, 0, "{err}");
    let (code, _, _) = ybx(&["check-rb", "--algebra", "gl2", "--op", &b]);
    assert_eq!(code, 0);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn act_with_automorphisms() {
    let (code, out, err) =
        ybx(&["act", "--algebra", "gl2", "--auto", &data("psi2.json"), "--on", "tensor", "--tensor", &data("t52proof.json")]);
    assert_eq!(code, 0, "{err}");
    assert!(!out.is_empty());
    let (code, _, err) =
        ybx(&["act", "--algebra", "gl2", "--auto", &data("swap.json"), "--on", "op", "--op", &data("t3line1.json")]);
    assert_eq!(code, 0, "{err}");
}

#[test]
fn bialgebra_check() {
    let (code, out, _) = ybx(&["check-bialgebra", "--algebra", "gl2", "--tensor", &data("t52proof.json")]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn catalog_list_and_verify() {
    let (code, out, _) = ybx(&["--format", "json", "catalog", "list"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v.as_array().map(|a| a.len()), Some(34));
    for (which, n) in [("theorem3", 13), ("theorem4", 13), ("reduced", 4), ("theorem5", 3), ("sl2", 1)] {
        let (code, out, _) = ybx(&["--format", "json", "catalog", "list", "--which", which]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v.as_array().map(|a| a.len()), Some(n), "{which}");
    }

    let (code, out, _) = ybx(&["catalog", "verify"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("0 mismatches"), "{out}");

    let (code, out, _) = ybx(&["catalog", "verify", "--only", "T4"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("usE filter"), "{out}");
}
