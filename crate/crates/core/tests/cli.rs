use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn zcolor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zcolor"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn path(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).to_str().unwrap().to_string()
}

fn gen(dir: &TempDir, name: &str, family: &str, params: &[&str]) -> String {
    let out = path(dir, name);
    let mut args = vec!["gen", "--family", family, "--out", &out];
    for p in params {
        args.extend(["--param", p]);
    }
    assert_eq!(code(&zcolor(&args)), 0);
    out
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = path(dir, name);
    fs::write(&p, text).unwrap();
    p
}

#[test]
fn solve_z_on_gn3() {
    let dir = TempDir::new().unwrap();
    let g = gen(&dir, "g3.g6", "gn", &["3"]);
    assert!(Path::new(&format!("{g}.roles")).exists());
    let witness = path(&dir, "w.col");
    let cert = path(&dir, "w.json");
    let out = zcolor(&[
        "solve",
        "--in",
        &g,
        "--invariant",
        "z",
        "--out",
        &witness,
        "--certificate",
        &cert,
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "3");
    assert!(fs::read_to_string(&cert).unwrap().contains("nice_vertex"));
    let check = zcolor(&[
        "validate",
        "--in",
        &g,
        "--coloring",
        &witness,
        "--kind",
        "z",
    ]);
    assert_eq!(code(&check), 0);
}

#[test]
fn solve_grundy_on_atom() {
    let dir = TempDir::new().unwrap();
    let t = gen(&dir, "t4.g6", "atom", &["4"]);
    let out = zcolor(&["solve", "--in", &t, "--invariant", "grundy"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "4");
}

#[test]
fn every_written_witness_revalidates() {
    let dir = TempDir::new().unwrap();
    let g = gen(&dir, "p.g6", "petersen", &[]);
    for (inv, kind) in [
        ("chi", "proper"),
        ("grundy", "grundy"),
        ("b", "b"),
        ("z", "z"),
    ] {
        let w = path(&dir, &format!("{inv}.col"));
        assert_eq!(
            code(&zcolor(&[
                "solve",
                "--in",
                &g,
                "--invariant",
                inv,
                "--out",
                &w
            ])),
            0
        );
        let check = zcolor(&["validate", "--in", &g, "--coloring", &w, "--kind", kind]);
        assert_eq!(code(&check), 0, "{inv}: {}", stdout(&check));
    }
}

#[test]
fn spectrum_output() {
    let dir = TempDir::new().unwrap();
    let t = gen(&dir, "t5.g6", "atom", &["5"]);
    let out = zcolor(&["solve", "--in", &t, "--invariant", "zspectrum"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("achievable=2,3"), "{text}");
    assert!(text.contains("continuous=true"));
}

#[test]
fn truncated_graph6_is_input_error() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "bad.g6", "I~~~\n");
    assert_eq!(code(&zcolor(&["solve", "--in", &f, "--invariant", "z"])), 2);
}

#[test]
fn budget_exhaustion_exits_3() {
    let dir = TempDir::new().unwrap();
    let g = gen(&dir, "g4.g6", "gn", &["4"]);
    let out = zcolor(&[
        "solve",
        "--in",
        &g,
        "--invariant",
        "z",
        "--budget-nodes",
        "5",
    ]);
    assert_eq!(code(&out), 3);
}

#[test]
fn validate_verdicts() {
    let dir = TempDir::new().unwrap();
    let c4 = gen(&dir, "c4.g6", "cycle", &["4"]);
    let col = write(&dir, "c4.col", "k=2\n0 1\n1 2\n2 1\n3 2\n");
    let out = zcolor(&["validate", "--in", &c4, "--coloring", &col, "--kind", "z"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("witness"));

    let p4 = gen(&dir, "p4.g6", "path", &["4"]);
    let col = write(&dir, "p4.col", "k=3\n0 1\n1 2\n2 3\n3 1\n");
    let out = zcolor(&["validate", "--in", &p4, "--coloring", &col, "--kind", "b"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("class 1 has no color-dominating vertex"));

    let missing = path(&dir, "absent.col");
    assert_eq!(
        code(&zcolor(&[
            "validate",
            "--in",
            &p4,
            "--coloring",
            &missing,
            "--kind",
            "b"
        ])),
        2
    );
    let partial = write(&dir, "partial.col", "k=2\n0 1\n1 2\n");
    assert_eq!(
        code(&zcolor(&[
            "validate",
            "--in",
            &p4,
            "--coloring",
            &partial,
            "--kind",
            "proper"
        ])),
        2
    );
}

#[test]
fn sweeps() {
    let dir = TempDir::new().unwrap();
    let csv = path(&dir, "gn.csv");
    assert_eq!(
        code(&zcolor(&[
            "sweep", "--family", "gn", "--range", "3..3", "--out", &csv
        ])),
        0
    );
    assert_eq!(
        fs::read_to_string(&csv).unwrap(),
        "param,vertices,max_degree,chi,gamma,b,z\n3,15,4,3,5,5,3\n"
    );
    let out = zcolor(&["sweep", "--family", "atom", "--range", "1..5"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let z: Vec<&str> = text
        .lines()
        .skip(1)
        .map(|l| l.rsplit(',').next().unwrap())
        .collect();
    assert_eq!(z, ["1", "2", "2", "3", "3"]);
    assert_eq!(
        code(&zcolor(&[
            "sweep", "--family", "unknown", "--range", "1..2"
        ])),
        2
    );
}

#[test]
fn deterministic_runs_are_byte_identical() {
    let run = || {
        stdout(&zcolor(&[
            "sweep",
            "--family",
            "random-tree",
            "--range",
            "3..8",
            "--seed",
            "5",
        ]))
    };
    assert_eq!(run(), run());
    let dir = TempDir::new().unwrap();
    let a = gen(&dir, "a.g6", "random-graph", &["9"]);
    let b = gen(&dir, "b.g6", "random-graph", &["9"]);
    assert_eq!(fs::read(a).unwrap(), fs::read(b).unwrap());
}

#[test]
fn reduce_lift_project_pipeline() {
    let dir = TempDir::new().unwrap();
    let k4 = gen(&dir, "k4.g6", "complete", &["4"]);
    let h = path(&dir, "h.g6");
    assert_eq!(code(&zcolor(&["reduce", "--in", &k4, "--out", &h])), 0);
    assert_eq!(
        fs::read_to_string(format!("{h}.roles"))
            .unwrap()
            .lines()
            .count(),
        163
    );
    let lifted = path(&dir, "lift.col");
    assert_eq!(code(&zcolor(&["lift", "--in", &k4, "--out", &lifted])), 0);
    let check = zcolor(&["validate", "--in", &h, "--coloring", &lifted, "--kind", "z"]);
    assert_eq!(code(&check), 0);
    let theta = path(&dir, "theta.txt");
    assert_eq!(
        code(&zcolor(&[
            "project",
            "--in",
            &k4,
            "--coloring",
            &lifted,
            "--out",
            &theta
        ])),
        0
    );
    let relifted = path(&dir, "relift.col");
    assert_eq!(
        code(&zcolor(&[
            "lift",
            "--in",
            &k4,
            "--edge-coloring",
            &theta,
            "--out",
            &relifted
        ])),
        0
    );
    assert_eq!(fs::read(&lifted).unwrap(), fs::read(&relifted).unwrap());

    let petersen = gen(&dir, "pet.g6", "petersen", &[]);
    assert_eq!(code(&zcolor(&["lift", "--in", &petersen])), 1);
    let c5 = gen(&dir, "c5.g6", "cycle", &["5"]);
    assert_eq!(code(&zcolor(&["reduce", "--in", &c5])), 2);
}

#[test]
fn wellcolored_reduction() {
    let dir = TempDir::new().unwrap();
    let p4 = gen(&dir, "p4.g6", "path", &["4"]);
    let h = path(&dir, "h.g6");
    assert_eq!(
        code(&zcolor(&[
            "reduce",
            "--in",
            &p4,
            "--kind",
            "wellcolored",
            "--out",
            &h
        ])),
        0
    );
    let out = zcolor(&["solve", "--in", &h, "--invariant", "z"]);
    assert_eq!(stdout(&out).trim(), "3");
    let k3 = gen(&dir, "k3.g6", "complete", &["3"]);
    assert_eq!(
        code(&zcolor(&["reduce", "--in", &k3, "--kind", "wellcolored"])),
        2
    );
}
