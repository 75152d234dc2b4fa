use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn kedge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kedge"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const CYCLE5: &str = "p 5 5\ne 0 1\ne 1 2\ne 2 3\ne 3 4\ne 0 4\n";
const K3: &str = "p 3 3\ne 0 1\ne 0 2\ne 1 2\n";

#[test]
fn solve_yes_witness_verifies() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "c5.txt", CYCLE5);
    let w = dir.path().join("w.txt");
    let out = kedge(&["solve", "--k", "3", s(&g), "--out", s(&w)]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("YES\n"));
    assert!(stdout(&out).contains("t_total_us:"));

    let out = kedge(&["verify", "--k", "3", s(&g), s(&w)]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
}

#[test]
fn solve_no() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "c5.txt", CYCLE5);
    let out = kedge(&["solve", "--k", "2", s(&g)]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.starts_with("NO\n"));
    for line in ["delta: 2", "p: 5", "q: 5", "semi_core_edges: 5"] {
        assert!(text.contains(line), "missing {line:?} in {text}");
    }
}

#[test]
fn solve_io_errors() {
    assert_eq!(
        code(&kedge(&["solve", "--k", "2", "/definitely/missing"])),
        2
    );
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.txt", "p 3 2\ne 0 1\n");
    let out = kedge(&["solve", "--k", "2", s(&bad)]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert_eq!(code(&kedge(&["solve", s(&bad)])), 2);
}

#[test]
fn solve_trace_and_generous_timeout() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "c5.txt", CYCLE5);
    let out = kedge(&["solve", "--k", "3", s(&g), "--timeout", "60", "--trace"]);
    assert_eq!(code(&out), 0);
    let trace = String::from_utf8_lossy(&out.stderr);
    assert!(trace.lines().any(|l| l.starts_with("extend ")));
}

#[test]
fn solve_times_out() {
    // Refuting an 8-colouring of K9 needs an exhaustive search of its 36
    // semi-core edges, far beyond the limit.
    let dir = TempDir::new().unwrap();
    let g = dir.path().join("k9.txt");
    assert_eq!(
        code(&kedge(&["generate", "complete", "9", "--out", s(&g)])),
        0
    );
    let out = kedge(&["solve", "--k", "8", s(&g), "--timeout", "0.2"]);
    assert_eq!(code(&out), 3);
    assert!(out.stdout.is_empty());
}

#[test]
fn chromatic_index_named_graphs() {
    let dir = TempDir::new().unwrap();
    let cases = [
        ("petersen", vec!["petersen"], "4 (Class 2)"),
        ("k4", vec!["complete", "4"], "3 (Class 1)"),
        ("k3", vec!["complete", "3"], "3 (Class 2)"),
    ];
    for (name, family, expected) in cases {
        let g = dir.path().join(format!("{name}.txt"));
        let mut args = vec!["generate"];
        args.extend(family);
        args.extend(["--out", s(&g)]);
        assert_eq!(code(&kedge(&args)), 0);

        let w = dir.path().join(format!("{name}.col"));
        let out = kedge(&["chromatic-index", s(&g), "--out", s(&w)]);
        assert_eq!(code(&out), 0);
        assert_eq!(stdout(&out).trim(), expected);
        let k = expected.split(' ').next().unwrap();
        assert_eq!(code(&kedge(&["verify", "--k", k, s(&g), s(&w)])), 0);
    }
}

#[test]
fn chromatic_index_edgeless() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "e.txt", "p 3 0\n");
    let out = kedge(&["chromatic-index", s(&g)]);
    assert_eq!(code(&out), 2);
    assert!(!out.stderr.is_empty());
}

#[test]
fn verify_outcomes() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "k3.txt", K3);
    let good = write(&dir, "good.col", "0 1 1\n0 2 2\n1 2 3\n");
    let clash = write(&dir, "clash.col", "0 1 1\n0 2 1\n1 2 2\n");
    let palette = write(&dir, "palette.col", "0 1 1\n0 2 2\n1 2 4\n");
    let partial = write(&dir, "partial.col", "0 1 1\n0 2 2\n");
    let malformed = write(&dir, "bad.col", "0 1 x\n");

    assert_eq!(code(&kedge(&["verify", "--k", "3", s(&g), s(&good)])), 0);

    let out = kedge(&["verify", "--k", "3", s(&g), s(&clash)]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("INVALID"));
    assert!(stdout(&out).contains("colour 1"), "{}", stdout(&out));

    let out = kedge(&["verify", "--k", "3", s(&g), s(&palette)]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("INVALID"));

    assert_eq!(code(&kedge(&["verify", "--k", "3", s(&g), s(&partial)])), 1);
    assert_eq!(
        code(&kedge(&["verify", "--k", "3", s(&g), s(&malformed)])),
        2
    );
}

#[test]
fn decompose_stats() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "st.txt", "p 6 5\ne 0 1\ne 0 2\ne 0 3\ne 3 4\ne 4 5\n");
    let out = kedge(&["decompose", s(&g)]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    for line in [
        "delta: 3",
        "p: 1",
        "q: 4",
        "semi_core_edges: 3 (bound 4)",
        "excluded: 2",
    ] {
        assert!(text.contains(line), "missing {line:?} in {text}");
    }
}

#[test]
fn generate_round_trips_and_is_seeded() {
    let a = kedge(&[
        "generate",
        "few-max-degree",
        "--p",
        "2",
        "--k",
        "3",
        "--n",
        "30",
        "--seed",
        "7",
    ]);
    let b = kedge(&[
        "generate",
        "--seed",
        "7",
        "few-max-degree",
        "--p",
        "2",
        "--k",
        "3",
        "--n",
        "30",
    ]);
    assert_eq!(code(&a), 0);
    assert_eq!(stdout(&a), stdout(&b));
    let g = kedge_core::io::read_graph(&stdout(&a)).unwrap();
    assert_eq!(kedge_core::io::write_graph(&g), stdout(&a));
    assert_eq!(g.vertex_count(), 30);

    let r = kedge(&[
        "generate", "random", "--n", "20", "--prob", "0.2", "--seed", "3",
    ]);
    assert_eq!(code(&r), 0);
    assert!(stdout(&r).starts_with("p 20 "));
}

#[test]
fn generate_rejects_infeasible() {
    assert_eq!(code(&kedge(&["generate", "cycle", "2"])), 2);
    assert_eq!(
        code(&kedge(&[
            "generate",
            "few-max-degree",
            "--p",
            "0",
            "--k",
            "3",
            "--n",
            "10"
        ])),
        2
    );
    assert_eq!(code(&kedge(&["generate", "nonsense"])), 2);
}

#[test]
fn bench_rows() {
    let out = kedge(&[
        "bench",
        "--k",
        "3",
        "--p",
        "2",
        "--n",
        "100",
        "--repeats",
        "2",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("n,m,q,t_decompose_us,t_semicore_us,t_extend_us,t_total_us"));
    assert_eq!(text.lines().filter(|l| l.starts_with("100,")).count(), 1);

    let multi = kedge(&[
        "bench",
        "--k",
        "3",
        "--p",
        "2",
        "--n",
        "50,100",
        "--repeats",
        "1",
    ]);
    assert_eq!(code(&multi), 0);
    assert!(stdout(&multi).lines().any(|l| l.starts_with("50,")));

    assert_eq!(
        code(&kedge(&[
            "bench",
            "--k",
            "3",
            "--p",
            "2",
            "--n",
            "100",
            "--repeats",
            "0"
        ])),
        2
    );
    assert_eq!(
        code(&kedge(&["bench", "--k", "3", "--p", "2", "--n", "3"])),
        2
    );
}
