//! End-to-end tests of the `perverse` binary: output formats, exit
//! codes, and determinism.

use std::path::{Path, PathBuf};
use std::process::Command;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn perverse(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_perverse"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
    }
}

fn on_file(cmd: &str, name: &str, extra: &[&str]) -> Run {
    let path = data(name);
    let path = path.to_str().unwrap();
    let mut args = vec![cmd, path];
    args.extend_from_slice(extra);
    perverse(&args)
}

#[test]
fn hodge_quintic_prints_the_diamond() {
    let r = on_file("hodge", "quintic.poly", &[]);
    assert_eq!(r.code, 0, "stderr: {}", r.stderr);
    assert_eq!(r.stdout, "h00=4 h10=104 h01=104 h11=4\n");
}

#[test]
fn hodge_cube_prints_the_diamond() {
    let r = on_file("hodge", "cube4.poly", &[]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout, "h00=7 h10=71 h01=71 h11=7\n");
}

#[test]
fn curve_invariants_quintic() {
    let r = on_file("curve-invariants", "quintic.poly", &[]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout, "v=5 e=10 n=50 g=60 d=300 e_tilde=250 b1_gamma=6\n");
}

#[test]
fn euler_quintic_reports_both_routes() {
    let r = on_file("euler", "quintic.poly", &[]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout, "euler_perverse=-200\neuler_batyrev=-200\n");
}

#[test]
fn transposed_layout_gives_the_same_answers() {
    let direct = on_file("hodge", "quintic.poly", &[]);
    let transposed = on_file("hodge", "quintic_transposed.poly", &[]);
    assert_eq!(transposed.code, 0, "stderr: {}", transposed.stderr);
    assert_eq!(direct.stdout, transposed.stdout);
}

#[test]
fn not_full_dimensional_input_exits_2() {
    let r = on_file("hodge", "not_full_dimensional.poly", &[]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("affine subspace"), "stderr: {}", r.stderr);
}

#[test]
fn bad_token_names_its_line() {
    let r = on_file("hodge", "bad_token.poly", &[]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains(":3:"), "stderr: {}", r.stderr);
    assert!(r.stderr.contains("not an integer"), "stderr: {}", r.stderr);
}

#[test]
fn missing_file_exits_2() {
    let r = on_file("hodge", "no_such_file.poly", &[]);
    assert_eq!(r.code, 2);
}

#[test]
fn usage_error_exits_2() {
    let r = perverse(&["no-such-command"]);
    assert_eq!(r.code, 2);
}

#[test]
fn non_reflexive_input_fails_check_reflexive() {
    let r = on_file("check-reflexive", "doubled_square.poly", &[]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.starts_with("reflexive: no\n"));
    assert!(r.stderr.contains("reflexivity"));
}

#[test]
fn reflexive_input_passes_check_reflexive() {
    let r = on_file("check-reflexive", "cube4.poly", &[]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.starts_with("reflexive: yes\n"));
}

#[test]
fn faces_prints_the_f_vector() {
    let r = on_file("faces", "quintic.poly", &[]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.starts_with("f_vector: 5 10 10 5\n"));
}

#[test]
fn face_invariants_of_the_cube_are_unit_squares() {
    let r = on_file("face-invariants", "cube4.poly", &[]);
    assert_eq!(r.code, 0);
    let two_faces: Vec<&str> =
        r.stdout.lines().filter(|l| l.contains("dim 2")).collect();
    assert_eq!(two_faces.len(), 24);
    for line in two_faces {
        assert!(line.ends_with("s0=1 s1=8 s2=8 b=8 vol2=4"), "line: {line}");
    }
}

#[test]
fn verify_mirror_cube_passes_in_json() {
    let r = on_file("verify-mirror", "cube4.poly", &["--json"]);
    assert_eq!(r.code, 0, "stderr: {}", r.stderr);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).expect("valid json");
    assert_eq!(v["result"], "pass");
    assert_eq!(v["file"], "cube4.poly");
    assert_eq!(v["checks"]["thm3_duality"], "pass");
    assert_eq!(v["primal"]["diamond"]["h10"], 71);
    assert_eq!(v["dual"]["diamond"]["h00"], 71);
    assert_eq!(v["primal"]["euler_batyrev"], -128);
    assert_eq!(v["dual"]["euler_batyrev"], 128);
}

#[test]
fn verify_mirror_json_is_deterministic() {
    let a = on_file("verify-mirror", "cube4.poly", &["--json"]);
    let b = on_file("verify-mirror", "cube4.poly", &["--json"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}

#[test]
fn dual_round_trips_to_the_original() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("dual.poly");
    let second = dir.path().join("back.poly");
    let r = perverse(&[
        "dual",
        data("quintic.poly").to_str().unwrap(),
        "--out",
        first.to_str().unwrap(),
    ]);
    assert_eq!(r.code, 0, "stderr: {}", r.stderr);
    let r = perverse(&["dual", first.to_str().unwrap(), "--out", second.to_str().unwrap()]);
    assert_eq!(r.code, 0, "stderr: {}", r.stderr);

    let numbers = |text: &str| -> Vec<String> {
        text.lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(str::to_string)
            .collect()
    };
    let original = std::fs::read_to_string(data("quintic.poly")).unwrap();
    let back = std::fs::read_to_string(&second).unwrap();
    let mut original_rows = numbers(&original);
    let mut back_rows = numbers(&back);
    assert_eq!(original_rows.remove(0), back_rows.remove(0));
    original_rows.sort();
    back_rows.sort();
    assert_eq!(original_rows, back_rows);
}

#[test]
fn out_flag_writes_the_report_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("diamond.txt");
    let r = perverse(&[
        "hodge",
        data("quintic.poly").to_str().unwrap(),
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout, "");
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        "h00=4 h10=104 h01=104 h11=4\n"
    );
}

#[test]
fn config_hodge_genus_two_mirror() {
    let r = on_file("config-hodge", "g2mirror.json", &[]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.starts_with("(2,1,1,2)\n"), "stdout: {}", r.stdout);
    assert!(r.stdout.contains("delta_rank=1"));
}

#[test]
fn config_hodge_schoen() {
    let r = on_file("config-hodge", "schoen.json", &[]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.starts_with("(24,24,24,24)\n"), "stdout: {}", r.stdout);
    assert!(r.stdout.contains("euler=0"));
}

#[test]
fn config_hodge_against_a_mismatched_polytope_exits_1() {
    let r = perverse(&[
        "config-hodge",
        data("g2mirror.json").to_str().unwrap(),
        "--against",
        data("quintic.poly").to_str().unwrap(),
    ]);
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("rank_delta_equals_b1"), "stderr: {}", r.stderr);
    assert!(r.stdout.contains("rank_matches_b1=no"));
    assert!(r.stdout.contains("diamonds_match=no"));
}

#[test]
fn invalid_config_json_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, "{\"ambient_count\": 2, \"components\": []}").unwrap();
    let r = perverse(&["config-hodge", path.to_str().unwrap()]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("no components"), "stderr: {}", r.stderr);
}

#[test]
fn corpus_writes_all_files_deterministically() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("corpus");
    let r = perverse(&["corpus", "--out", out.to_str().unwrap()]);
    assert_eq!(r.code, 0, "stderr: {}", r.stderr);
    assert!(r.stdout.contains("139"));
    let count = std::fs::read_dir(&out).unwrap().count();
    assert_eq!(count, 139);
    for name in ["p01xp01.poly", "p01xp16.poly", "p16xp16.poly", "quintic.poly", "cube4.poly", "cross4.poly"] {
        assert!(out.join(name).exists(), "missing {name}");
    }

    let sample = std::fs::read_to_string(out.join("p07xp11.poly")).unwrap();
    let r = perverse(&["corpus", "--out", out.to_str().unwrap()]);
    assert_eq!(r.code, 0);
    assert_eq!(std::fs::read_to_string(out.join("p07xp11.poly")).unwrap(), sample);

    let r = perverse(&["check-reflexive", out.join("p05xp09.poly").to_str().unwrap()]);
    assert_eq!(r.code, 0);
}

#[test]
fn verify_mirror_over_a_directory() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["quintic.poly", "cube4.poly"] {
        std::fs::copy(data(name), dir.path().join(name)).unwrap();
    }
    let cross = dir.path().join("cross4.poly");
    let r = perverse(&[
        "dual",
        data("cube4.poly").to_str().unwrap(),
        "--out",
        cross.to_str().unwrap(),
    ]);
    assert_eq!(r.code, 0);

    let r = perverse(&["verify-mirror", dir.path().to_str().unwrap()]);
    assert_eq!(r.code, 0, "stderr: {}", r.stderr);
    let lines: Vec<&str> = r.stdout.lines().collect();
    assert_eq!(
        lines,
        vec![
            "cross4.poly: pass",
            "cube4.poly: pass",
            "quintic.poly: pass",
            "passed 3 of 3",
        ]
    );

    let j = perverse(&["verify-mirror", dir.path().to_str().unwrap(), "--json"]);
    let v: serde_json::Value = serde_json::from_str(&j.stdout).expect("valid json");
    assert_eq!(v["total"], 3);
    assert_eq!(v["passed"], 3);
    assert_eq!(v["results"][0]["file"], "cross4.poly");
}

#[test]
fn verify_mirror_directory_with_a_broken_file_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::copy(data("cube4.poly"), dir.path().join("cube4.poly")).unwrap();
    std::fs::copy(data("bad_token.poly"), dir.path().join("zz_bad.poly")).unwrap();
    let r = perverse(&["verify-mirror", dir.path().to_str().unwrap()]);
    assert_eq!(r.code, 2);
    assert!(r.stdout.contains("cube4.poly: pass"));
    assert!(r.stdout.contains("zz_bad.poly: error"));
    assert!(r.stdout.contains("passed 1 of 2"));
}
