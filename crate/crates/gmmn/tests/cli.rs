use std::process::{Command, Output};

fn gmmn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gmmn"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn scalar_outputs() {
    let o = gmmn(&["center", "rank", "--rank", "3", "--level", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "14\n");
    let o = gmmn(&["nhedral", "dim", "--rank", "3", "--level", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "31\n");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(gmmn(&["center", "rank", "--bogus"]).status.code(), Some(2));
    assert_eq!(gmmn(&["nosuch"]).status.code(), Some(2));
    assert_eq!(gmmn(&["nhedral", "mult", "--rank", "3", "--level", "3"]).status.code(), Some(2));
    assert_eq!(gmmn(&["graph", "verify", "--in", "/nonexistent.graph", "--level", "2"]).status.code(), Some(2));
}

#[test]
fn guard_rails() {
    let o = gmmn(&["center", "rank", "--rank", "7", "--level", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--force"));
    let o = gmmn(&["center", "rank", "--rank", "2", "--level", "13"]);
    assert_eq!(o.status.code(), Some(2));
    let o = gmmn(&["--force", "center", "rank", "--rank", "2", "--level", "13"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn verification_exit_codes() {
    let ok = gmmn(&["fourier", "compare", "--rank", "3", "--order", "6"]);
    assert_eq!(ok.status.code(), Some(0));
    let bad = gmmn(&["fourier", "compare", "--rank", "3", "--order", "6", "--r-convention", "e"]);
    assert_eq!(bad.status.code(), Some(1));
    assert_eq!(gmmn(&["graph", "verify", "--in", "E4", "--level", "4"]).status.code(), Some(0));
}

#[test]
fn provenance_and_thread_independence() {
    let base = ["center", "smatrix", "--rank", "3", "--level", "3"];
    let a = gmmn(&base);
    let mut with_threads = vec!["--threads", "4"];
    with_threads.extend_from_slice(&base);
    let b = gmmn(&with_threads);
    let c = gmmn(&base);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
    let text = stdout(&a);
    assert!(text.starts_with("# gmmn "));
    assert!(text.contains("# cyclotomic-order 36\n"));
    assert!(!text.contains("threads"));
    // 14 rows plus the label row
    assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), 15);
}

#[test]
fn json_is_wrapped() {
    let o = gmmn(&["koornwinder", "census", "--rank", "3", "--level", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["data"]["points"], 10);
    assert!(v["provenance"].as_array().unwrap().iter().any(|l| l == "cyclotomic-order 36"));
}

#[test]
fn numeric_mode() {
    let o = gmmn(&["--numeric", "12", "fusion", "tmatrix", "--rank", "2", "--level", "1"]);
    let text = stdout(&o);
    assert!(text.contains("1.000000000000+0.000000000000i"), "{text}");
}

#[test]
fn nhedral_mult_and_graph_round_trip() {
    let o = gmmn(&["nhedral", "mult", "--rank", "3", "--level", "3", "--lhs", "C[0;1,0]", "--rhs", "C[1;1,0]"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "(v+v^-1)*C[1;0,0]; (2v+2v^-1)*C[1;1,1]; (v+v^-1)*C[1;3,0]\n");

    let dir = std::env::temp_dir().join(format!("gmmn-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("a33.graph");
    let svg = dir.join("a33.svg");
    let f = file.to_str().unwrap();
    assert_eq!(gmmn(&["--out", f, "graph", "gen-a", "--rank", "3", "--level", "3"]).status.code(), Some(0));
    let o = gmmn(&["graph", "spectrum", "--in", f, "--svg", svg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["data"]["total"], 10);
    assert!(std::fs::read_to_string(&svg).unwrap().contains("<svg"));
    std::fs::remove_dir_all(&dir).ok();
}
