use std::io::Write as _;

use hullmass::cli::{run, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("hullmass").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn code_file(dir: &tempfile::TempDir, name: &str, body: &str) -> String {
    let path = dir.path().join(name);
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(body.as_bytes()).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn mass_prints_count() {
    let (code, out, _) = call(&[
        "mass",
        "--inner",
        "hermitian",
        "--q",
        "2",
        "--n",
        "4",
        "--k",
        "2",
        "--ell",
        "1",
    ]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "90\n");
    let (code, out, _) = call(&[
        "mass",
        "--inner",
        "symplectic",
        "--q",
        "2",
        "--n",
        "2",
        "--k",
        "2",
        "--ell",
        "1",
    ]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "0\n");
}

#[test]
fn mass_json_uses_decimal_strings() {
    let (code, out, _) = call(&[
        "mass",
        "--inner",
        "hermitian",
        "--q",
        "2",
        "--n",
        "4",
        "--k",
        "2",
        "--ell",
        "1",
        "--format",
        "json",
    ]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["count"], "90");
    assert_eq!(v["query"]["n"], "4");
    assert_eq!(v["query"]["inner"], "hermitian");
}

#[test]
fn census_table() {
    let (code, out, _) = call(&[
        "census",
        "--inner",
        "symplectic",
        "--q",
        "3",
        "--n",
        "2",
        "--k",
        "2",
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(out.lines().any(|l| l == "2 40 40 match"), "{out}");
    let (_, out, _) = call(&[
        "census",
        "--inner",
        "symplectic",
        "--q",
        "3",
        "--n",
        "2",
        "--k",
        "2",
        "--format",
        "csv",
    ]);
    let mut rdr = csv::Reader::from_reader(out.as_bytes());
    let rows: Vec<csv::StringRecord> = rdr.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 3);
    assert_eq!(&rows[2][1], "40");
    let (_, out, _) = call(&[
        "census",
        "--inner",
        "hermitian",
        "--q",
        "2",
        "--n",
        "4",
        "--k",
        "2",
        "--format",
        "json",
    ]);
    let v: Value = serde_json::from_str(&out).unwrap();
    let enumerated: Vec<&str> = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["enumerated"].as_str().unwrap())
        .collect();
    assert_eq!(enumerated, ["240", "90", "27"]);
}

#[test]
fn census_contains() {
    let (code, out, _) = call(&[
        "census",
        "--inner",
        "symplectic",
        "--q",
        "3",
        "--n",
        "2",
        "--k",
        "2",
        "--contains",
        "1,0,0,0",
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("4 4 match"), "{out}");
    let (code, _, err) = call(&[
        "census",
        "--inner",
        "symplectic",
        "--q",
        "3",
        "--n",
        "2",
        "--k",
        "2",
        "--contains",
        "0,0,0,0",
    ]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("nonzero"));
}

#[test]
fn classify_json() {
    let (code, out, _) = call(&[
        "classify",
        "--inner",
        "hermitian",
        "--q",
        "2",
        "--n",
        "4",
        "--k",
        "2",
        "--ell",
        "1",
        "--format",
        "json",
    ]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["classes"].as_array().unwrap().len(), 7);
    assert_eq!(v["mass_lhs"], "90");
    assert_eq!(v["mass_rhs"], "90");
    assert_eq!(v["match"], true);
}

#[test]
fn analyze_and_row_order() {
    let dir = tempfile::tempdir().unwrap();
    let a = code_file(&dir, "a.txt", "# C1\nq=4 n=4 k=2\n1 0 1 3\n0 1 2 2\n");
    let b = code_file(&dir, "b.txt", "q=4 n=4 k=2\n0 1 2 2  \n1 0 1 3\n");
    let (code, out_a, _) = call(&["analyze", &a]);
    assert_eq!(code, EXIT_OK);
    assert!(out_a.contains("hermitian hull dimension 1"), "{out_a}");
    let (_, out_b, _) = call(&["analyze", &b]);
    assert_eq!(out_a, out_b);
}

#[test]
fn analyze_rejects_bad_entry() {
    let dir = tempfile::tempdir().unwrap();
    let p = code_file(&dir, "bad.txt", "q=4 n=4 k=1\n1 0 7 3\n");
    let (code, _, err) = call(&["analyze", &p]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn basis_and_transporter() {
    let dir = tempfile::tempdir().unwrap();
    let a = code_file(&dir, "a.txt", "q=4 n=3 k=1\n1 0 0\n");
    let b = code_file(&dir, "b.txt", "q=4 n=3 k=1\n1 1 1\n");
    let (code, out, _) = call(&["basis", &a, "--inner", "hermitian"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("hull dimension 0"));
    let (code, out, _) = call(&["transporter", &a, &b, "--inner", "hermitian"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.contains("carries code: true") && out.contains("preserves form: true"));
    let nonlcd = code_file(&dir, "c.txt", "q=4 n=2 k=1\n1 1\n");
    let other = code_file(&dir, "d.txt", "q=4 n=2 k=1\n1 0\n");
    let (code, _, err) = call(&["transporter", &nonlcd, &other, "--inner", "hermitian"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("LCD"), "{err}");
}

#[test]
fn limits_and_jacobi() {
    let (code, out, _) = call(&[
        "limits",
        "--inner",
        "hermitian",
        "--q",
        "2",
        "--ell",
        "0",
        "--n",
        "20",
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("limit      0.56869"), "{out}");
    assert!(out.contains("difference"));
    let (code, out, _) = call(&["jacobi", "--q", "2", "--n", "2"]);
    assert_eq!(code, EXIT_OK);
    assert!(
        out.contains("closed form 10 match") && out.contains("closed form 6 match"),
        "{out}"
    );
}

#[test]
fn group_subcommand() {
    let (code, out, _) = call(&[
        "group",
        "--kind",
        "unitary",
        "--n",
        "2",
        "--q",
        "2",
        "--enumerate",
        "--stabilizer",
        "1",
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(
        out.starts_with("18\nenumerated 18 match\norbit 2 stabilizer 9"),
        "{out}"
    );
    let (code, _, err) = call(&[
        "group",
        "--kind",
        "symplectic",
        "--n",
        "2",
        "--q",
        "3",
        "--enumerate",
    ]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("budget"), "{err}");
}

#[test]
fn usage_errors() {
    assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(
        call(&["mass", "--inner", "hermitian", "--q", "2"]).0,
        EXIT_USAGE
    );
    assert_eq!(
        call(&[
            "mass",
            "--inner",
            "hermitian",
            "--q",
            "2",
            "--n",
            "4",
            "--k",
            "-1",
            "--ell",
            "0"
        ])
        .0,
        EXIT_USAGE
    );
    assert_eq!(
        call(&[
            "mass",
            "--inner",
            "hermitian",
            "--q",
            "2",
            "--n",
            "4",
            "--k",
            "5",
            "--ell",
            "0"
        ])
        .0,
        EXIT_USAGE
    );
    assert_eq!(
        call(&[
            "mass",
            "--inner",
            "hermitian",
            "--q",
            "6",
            "--n",
            "4",
            "--k",
            "2",
            "--ell",
            "0"
        ])
        .0,
        EXIT_USAGE
    );
    assert_eq!(
        call(&[
            "mass",
            "--inner",
            "euclidean",
            "--q",
            "2",
            "--n",
            "4",
            "--k",
            "2",
            "--ell",
            "0"
        ])
        .0,
        EXIT_USAGE
    );
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("base parameter"));
    assert_ne!(EXIT_MISMATCH, EXIT_USAGE);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_hullmass");
    let ok = std::process::Command::new(bin)
        .args([
            "mass",
            "--inner",
            "hermitian",
            "--q",
            "2",
            "--n",
            "4",
            "--k",
            "2",
            "--ell",
            "1",
        ])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout), "90\n");
    let bad = std::process::Command::new(bin)
        .arg("--nope")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));
}
