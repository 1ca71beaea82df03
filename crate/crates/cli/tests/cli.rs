use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn hyperph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperph"))
        .args(args)
        .current_dir(fixture(""))
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = hyperph(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn rows(text: &str) -> Vec<&str> {
    text.lines().skip(1).collect()
}

#[test]
fn complex_of_hollow_triangle() {
    let out = stdout(&["complex", "triangle.hg"]);
    assert!(out.starts_with("delta 6 simplices, per dimension: 3 3\n"));
    assert!(out.ends_with("lower 0 simplices\n"));
}

#[test]
fn complex_of_empty_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.hg");
    fs::write(&path, "# nothing here\n").unwrap();
    assert_eq!(stdout(&["complex", path.to_str().unwrap()]), "delta 0 simplices\nlower 0 simplices\n");
}

#[test]
fn complex_of_a_simplex_is_itself() {
    let out = stdout(&["complex", "tetrahedron.hg"]);
    let (delta, lower) = out.split_once("lower").unwrap();
    assert!(delta.starts_with("delta 15 simplices, per dimension: 4 6 4 1"));
    assert!(lower.starts_with(" 15 simplices"));
    let listing = |s: &str| s.lines().skip(1).map(str::to_string).collect::<Vec<_>>();
    assert_eq!(listing(delta), listing(lower));
}

#[test]
fn persist_rows() {
    assert_eq!(rows(&stdout(&["persist", "wedge_f.hg", "--variant", "lower"])), ["1,1,inf", "1,1,inf"]);
    assert!(rows(&stdout(&["persist", "disk.hg", "--variant", "delta"])).is_empty());
    assert_eq!(rows(&stdout(&["persist", "triangle.hg", "--field", "3"])), ["1,0,inf"]);
    assert_eq!(rows(&stdout(&["persist", "triangle.hg", "--variant", "delta", "--dim", "0"])), ["0,0,inf"]);
}

#[test]
fn distances() {
    assert_eq!(stdout(&["distance", "wedge_f.hg", "wedge_g.hg"]), "1\n");
    assert_eq!(stdout(&["distance", "wedge_g.hg", "wedge_f.hg"]), "1\n");
    assert_eq!(stdout(&["distance", "wedge_f.hg", "wedge_f.hg"]), "0\n");
    assert_eq!(stdout(&["distance", "corner_f.hg", "corner_g.hg", "--p", "1"]), "3\n");
    assert_eq!(stdout(&["distance", "corner_f.hg", "corner_g.hg", "--variant", "embedded"]), "0\n");
    assert_eq!(stdout(&["distance", "wedge_f.hg", "wedge_g.hg", "--variant", "lower", "--p", "1"]), "2\n");
}

#[test]
fn distance_base_mismatch() {
    let out = hyperph(&["distance", "wedge_f.hg", "corner_f.hg"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("different hypergraphs"));
}

#[test]
fn identity_morphism_has_no_kernel_or_cokernel() {
    let out = stdout(&["morphism", "triangle.hg", "triangle.hg", "identity.map"]);
    assert!(rows(&out).iter().all(|r| r.split(',').nth(1) == Some("im")));
    assert!(out.contains("inf_src->inf_tgt,im,1,0,inf"));
}

#[test]
fn collapse_kills_the_image() {
    let out = stdout(&["morphism", "triangle.hg", "point.hg", "collapse.map"]);
    assert!(!out.contains("inf_src->inf_tgt,im"));
    assert!(out.contains("inf_src->inf_tgt,ker,1,0,inf"));
    let pulled = stdout(&["morphism", "triangle.hg", "point.hg", "collapse.map", "--direction", "pullback"]);
    assert!(!pulled.contains("inf_src->inf_tgt,im"));
}

#[test]
fn coauthorship_inclusion_components() {
    let out = stdout(&[
        "morphism",
        "coauthorship/2010.hg",
        "coauthorship/2011.hg",
        "coauthorship_2010_2011.map",
        "--dim",
        "0",
    ]);
    assert!(out.contains("inf_src->inf_tgt,im,0,1,inf"));
    assert!(!out.contains(",ker,") && !out.contains(",coker,"));
}

#[test]
fn all_arrows_listed() {
    let out = stdout(&["morphism", "triangle.hg", "point.hg", "collapse.map", "--all-arrows", "--dim", "0"]);
    let mut arrows: Vec<&str> = rows(&out).iter().map(|r| r.split(',').next().unwrap()).collect();
    arrows.dedup();
    assert!(arrows.contains(&"ker_upper->upper_src"));
    assert!(arrows.contains(&"coker_lower->coker_inf"));
    assert!(arrows.contains(&"sup_src->sup_tgt"));
}

#[test]
fn bad_morphism_is_a_validation_error() {
    let out = hyperph(&["morphism", "point.hg", "triangle.hg", "collapse.map"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn evolution_report() {
    let out = stdout(&["evolve", "coauthorship", "--dim", "0"]);
    let blocks: Vec<&str> = out.lines().filter(|l| l.starts_with("[snapshot")).collect();
    assert_eq!(blocks, ["[snapshot 2009]", "[snapshot 2010]", "[snapshot 2011]", "[snapshot 2013]"]);
    let betti: Vec<&str> = out.lines().filter_map(|l| l.strip_prefix("betti ")).collect();
    assert_eq!(betti, ["1", "1", "1", "1"]);
    assert_eq!(out.lines().filter(|l| l.starts_with("[pair")).count(), 3);
    assert_eq!(out, stdout(&["evolve", "coauthorship", "--dim", "0"]));
}

#[test]
fn evolution_edge_cases() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().to_str().unwrap().to_string();
    fs::write(dir.path().join("1.hg"), "0 : a b\n0 : b c\n").unwrap();
    let single = stdout(&["evolve", &p]);
    assert!(single.contains("[snapshot 1]") && !single.contains("[pair"));

    fs::write(dir.path().join("2.hg"), "0 : a b\n0 : b c\n").unwrap();
    let twin = stdout(&["evolve", &p, "--dim", "0"]);
    let distances: Vec<&str> = twin
        .split("arrow,distance\n")
        .nth(1)
        .unwrap()
        .lines()
        .take_while(|l| !l.is_empty())
        .collect();
    assert_eq!(distances.len(), 6);
    assert!(distances.iter().all(|l| l.ends_with(",0")));

    fs::write(dir.path().join("3.hg"), "0 : a b\n").unwrap();
    let out = hyperph(&["evolve", &p]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.hg");
    fs::write(&bad, "1 : a\n1 : a\n").unwrap();
    let out = hyperph(&["persist", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains(":2:"));
    assert_eq!(hyperph(&["persist", "triangle.hg", "--field", "6"]).status.code(), Some(1));
    assert_eq!(hyperph(&["distance", "triangle.hg", "triangle.hg", "--p", "0.5"]).status.code(), Some(1));
}
