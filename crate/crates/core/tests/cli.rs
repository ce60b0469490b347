use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn hopfstar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfstar"))
        .args(args)
        .output()
        .expect("run hopfstar")
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap_or(-1)
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn shipped(fixture: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(fixture)
}

fn files(dir: &Path) -> Vec<PathBuf> {
    let mut out = Vec::new();
    for e in std::fs::read_dir(dir).unwrap() {
        let p = e.unwrap().path();
        if p.is_dir() {
            out.extend(files(&p));
        } else {
            out.push(p);
        }
    }
    out.sort();
    out
}

#[test]
fn export_matches_the_shipped_tree() {
    let tmp = tempfile::tempdir().unwrap();
    let o = hopfstar(&["export-fixtures", tmp.path().to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let ours = files(tmp.path());
    let theirs = files(&root);
    assert_eq!(ours.len(), theirs.len());
    for (a, b) in ours.iter().zip(&theirs) {
        assert_eq!(a.strip_prefix(tmp.path()).unwrap(), b.strip_prefix(&root).unwrap());
        assert_eq!(std::fs::read(a).unwrap(), std::fs::read(b).unwrap(), "{}", b.display());
    }
}

#[test]
fn every_shipped_file_validates() {
    for fixture in ["trivial", "group_z3", "sweedler(-2)"] {
        for f in files(&shipped(fixture)) {
            let o = hopfstar(&["validate", f.to_str().unwrap()]);
            assert_eq!(code(&o), 0, "{}: {}", f.display(), stdout(&o));
        }
    }
}

#[test]
fn every_construction_runs_and_its_output_validates() {
    let tmp = tempfile::tempdir().unwrap();
    // The Sweedler workspace plus an intertwiner of trivial ⊕ sign for `adjoint`.
    let ws = tmp.path().join("ws");
    std::fs::create_dir(&ws).unwrap();
    for f in files(&shipped("sweedler(1)")) {
        std::fs::copy(&f, ws.join(f.file_name().unwrap())).unwrap();
    }
    std::fs::write(
        ws.join("t.json"),
        "{\"kind\": \"map\", \"name\": \"t\", \"domain\": \"trivial_sign\", \"codomain\": \"trivial_sign\", \
         \"matrix\": [[\"1\", \"0\"], [\"0\", \"2\"]]}\n",
    )
    .unwrap();
    let ws = ws.to_str().unwrap();
    let cases = [
        ("conjugate", "p_plus"),
        ("dual", "p_minus"),
        ("tensor", "p_plus,sign"),
        ("hom", "sign,p_plus"),
        ("tensor-algebra", "p_plus.star"),
        ("braiding", "r_lambda,p_plus,p_minus"),
        ("adjoint", "t,trivial_sign.gram,trivial_sign.gram"),
        ("two-out-of-three", "trivial_sign.star,trivial_sign.gram"),
    ];
    for (c, inputs) in cases {
        let out = tmp.path().join(format!("{c}.json"));
        let out = out.to_str().unwrap();
        let o = hopfstar(&[
            "construct",
            c,
            "--in",
            inputs,
            "--out",
            out,
            "--workspace",
            ws,
            "--degree",
            "2",
        ]);
        assert_eq!(code(&o), 0, "{c}: {}{}", stdout(&o), String::from_utf8_lossy(&o.stderr));
        assert!(std::fs::read_to_string(out).unwrap().ends_with('\n'));
        let v = hopfstar(&["validate", out, "--workspace", ws]);
        assert_eq!(
            code(&v),
            0,
            "{c} output: {}{}",
            stdout(&v),
            String::from_utf8_lossy(&v.stderr)
        );
    }
}

#[test]
fn json_report_format() {
    let o = hopfstar(&["check", "axioms", "--fixture", "group_z2", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let checks = v["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    assert!(checks.iter().all(|c| c["status"] == "pass"));
}

#[test]
fn text_output_is_deterministic() {
    let a = hopfstar(&["check", "reality", "--fixture", "group_z3"]);
    let b = hopfstar(&["check", "reality", "--fixture", "group_z3"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&hopfstar(&[])), 2);
    assert_eq!(code(&hopfstar(&["check", "axioms"])), 2);
    assert_eq!(
        code(&hopfstar(&[
            "construct",
            "nope",
            "--in",
            "a",
            "--out",
            "/dev/null",
            "--fixture",
            "trivial"
        ])),
        2
    );
    assert_eq!(code(&hopfstar(&["validate", "/no/such/file.json"])), 2);
}

#[test]
fn a_non_equivariant_map_fails_with_a_witness() {
    let tmp = tempfile::tempdir().unwrap();
    for f in files(&shipped("group_z2")) {
        std::fs::copy(&f, tmp.path().join(f.file_name().unwrap())).unwrap();
    }
    let map = tmp.path().join("swap.json");
    std::fs::write(
        &map,
        "{\"kind\": \"map\", \"name\": \"swap\", \"domain\": \"trivial\", \"codomain\": \"sign\", \
         \"matrix\": [[\"1\"]]}\n",
    )
    .unwrap();
    let o = hopfstar(&["validate", map.to_str().unwrap()]);
    assert_eq!(code(&o), 1, "{}", stdout(&o));
    assert!(stdout(&o).contains("fail"));
}
