use std::io::Write;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superpose"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn betti_of_two_points_in_the_disk() {
    let o = run(&["betti", "--complex", "disk", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "b0=1 b1=1");
}

#[test]
fn betti_of_one_point_in_the_circle() {
    let o = run(&["betti", "--complex", "circle", "--n", "1"]);
    assert_eq!(stdout(&o).trim(), "b0=1 b1=1");
}

#[test]
fn betti_reports_torsion() {
    let o = run(&["betti", "--complex", "rp2", "--n", "1", "--subdiv", "0"]);
    assert_eq!(stdout(&o).trim(), "b0=1 b1=0 b2=0 t2=2");
}

#[test]
fn betti_tsv() {
    let o = run(&["betti", "--complex", "circle", "--n", "1", "--subdiv", "0", "--format", "tsv"]);
    assert_eq!(stdout(&o), "degree\tbetti\ttorsion\n0\t1\t\n1\t1\t\n");
}

#[test]
fn betti_from_a_file() {
    let mut f = tempfile();
    writeln!(f.1, "0 1\n1 2\n0 2").unwrap();
    let o = run(&["betti", "--complex", f.0.to_str().unwrap(), "--n", "1", "--subdiv", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "b0=1 b1=1");
}

#[test]
fn malformed_file_exits_2_with_line_number() {
    let mut f = tempfile();
    writeln!(f.1, "0 1\n1 x").unwrap();
    let o = run(&["betti", "--complex", f.0.to_str().unwrap(), "--n", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn unknown_complex_exits_2() {
    let o = run(&["betti", "--complex", "no-such-thing"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn guard_breach_exits_2() {
    let o = run(&["build-model", "--complex", "disk", "--n", "3", "--guard", "1000"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("guard"));
}

#[test]
fn zero_guard_is_rejected() {
    let o = run(&["build-model", "--guard", "0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn build_model_counts() {
    let o = run(&["build-model", "--complex", "interval", "--subdiv", "0", "--n", "1"]);
    assert_eq!(stdout(&o).trim(), "c0=2 c1=1 chi=1 b0=1");
    let o = run(&["build-model", "--complex", "disk", "--n", "2", "--max-degree", "0"]);
    assert!(stdout(&o).contains(" truncated b0=1"), "{}", stdout(&o));
}

#[test]
fn build_model_tsv() {
    let o = run(&["build-model", "--complex", "circle", "--subdiv", "0", "--n", "1", "--format", "tsv"]);
    assert_eq!(stdout(&o), "degree\tcells\tbetti\ttorsion\n0\t3\t1\t\n1\t3\t1\t\nchi\t0\n");
}

#[test]
fn sup_of_units() {
    let o = run(&["sup", "--complex", "disk", "--n", "1", "--m", "1"]);
    assert_eq!(stdout(&o).trim(), "2");
    let o = run(&["sup", "--complex", "interval", "--n", "2", "--m", "1"]);
    assert_eq!(stdout(&o).trim(), "3");
}

#[test]
fn sup_with_nothing_is_the_identity() {
    let o = run(&["sup", "--complex", "circle", "--n", "1", "--m", "0", "--degree-a", "1", "--format", "tsv"]);
    assert_eq!(stdout(&o), "n\tm\tp\tq\ta\tb\tsup\n1\t0\t1\t0\t0\t0\t1\n");
}

#[test]
fn sup_with_a_missing_class_exits_2() {
    let o = run(&["sup", "--complex", "disk", "--n", "1", "--m", "1", "--degree-a", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_formal() {
    let o = run(&["verify", "formal", "--max-size", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().all(|l| l.starts_with("pass\t")));
}

#[test]
fn verify_ring_on_the_disk() {
    let o = run(&["verify", "ring", "--complex", "disk", "--max-points", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn verify_all_is_deterministic() {
    let a = run(&["verify", "all"]);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    let b = run(&["verify", "all"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn unknown_suite_exits_2() {
    let o = run(&["verify", "everything"]);
    assert_eq!(o.status.code(), Some(2));
}

fn tempfile() -> (std::path::PathBuf, std::fs::File) {
    use std::sync::atomic::{AtomicUsize, Ordering};
    static NEXT: AtomicUsize = AtomicUsize::new(0);
    let path = std::env::temp_dir().join(format!(
        "superpose-cli-{}-{}.txt",
        std::process::id(),
        NEXT.fetch_add(1, Ordering::SeqCst)
    ));
    let f = std::fs::File::create(&path).unwrap();
    (path, f)
}
