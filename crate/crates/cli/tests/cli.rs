use std::process::{Command, Output};

fn eraser(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eraser"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = eraser(args);
    assert!(
        out.status.success(),
        "{args:?} exited with {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn check(cases: &[(&[&str], &str)]) {
    for (args, expected) in cases {
        assert_eq!(stdout_of(args), format!("{expected}\n"), "{args:?}");
    }
}

#[test]
fn erasure() {
    check(&[
        (&["erase", "0 E1"], "finite: "),
        (&["erase", "E1"], "undefined"),
        (&["erase", "0 1 E1"], "finite: 0"),
        (&["erase", "--up", "|0 E1"], "finite: "),
        (&["erase", "--up", "|0 1 E1"], "infinite: |0"),
        (&["erase", "--up", "1 1|E1 0"], "finite: 1"),
        (&["erase", "--up", "0 E1 E1|0"], "undefined"),
        (&["erase", "--up", "E1|0 E1"], "undefined"),
        (&["staged-erase", "-k", "2", "E2 E1"], "finite: "),
        (&["staged-erase", "-k", "2", "0 E1 E2"], "undefined"),
        (&["staged-erase", "-k", "2", "0 1 E1 E2"], "finite: "),
        (&["staged-erase", "-k", "1", "--up", "|1 0 E1"], "infinite: |1"),
        (&["staged-erase", "-k", "1", "--up", "|0 1 E1"], "infinite: |0"),
        (&["staged-erase", "-k", "1", "--up", "|E1 0"], "undefined"),
    ]);
}

#[test]
fn staged_languages() {
    check(&[
        (&["member", "--lang", "l1", "0 E1"], "true"),
        (&["member", "--lang", "l1", ""], "true"),
        (&["member", "--lang", "l1", "E1 0"], "false"),
        (&["member", "--lang", "lk", "-k", "1", "0 E1"], "true"),
        (&["member", "--lang", "lk", "-k", "1", "0 E2"], "false"),
        (&["member", "--lang", "lk", "-k", "2", "0 E2"], "true"),
        (&["enumerate", "lk", "-k", "1", "--max-len", "2"], "\n0 E1\n1 E1"),
        (&["enumerate", "lk", "-k", "1", "--max-len", "0"], ""),
        (&["enumerate", "lk", "-k", "2", "--max-len", "2"], "\n0 E1\n0 E2\n1 E1\n1 E2\nE2 E1"),
        (&["min-k", "0 E1"], "1"),
        (&["min-k", "E2 E1"], "2"),
        (&["min-k", "0 E1 E2"], "none"),
    ]);
}

#[test]
fn coding() {
    check(&[
        (&["encode", "0 E2 1"], "0abba1"),
        (&["encode", ""], ""),
        (&["encode", "E1"], "aba"),
        (&["encode", "--up", "|0 E1"], "|0aba"),
        (&["encode", "--up", "1|0"], "1|0"),
        (&["encode", "--up", "|E2"], "|abba"),
        (&["decode", "0abba1"], "0 E2 1"),
        (&["decode", "ab"], "dangling=ab"),
        (&["decode", "--up", "|0aba"], "|0 E1"),
        (&["member", "--lang", "rp", "-p", "1", "|0aba"], "true"),
        (&["member", "--lang", "rp", "-p", "1", "|abba"], "false"),
        (&["member", "--lang", "rp", "-p", "2", "|abba"], "true"),
        (&["member", "--lang", "rp", "-p", "3", "|a"], "false"),
    ]);
}

#[test]
fn omega_power() {
    check(&[
        (&["member", "--lang", "lscript", ""], "true"),
        (&["member", "--lang", "lscript", "0aba"], "true"),
        (&["member", "--lang", "lscript", "aba"], "false"),
        (&["member", "--lang", "hv", "1"], "true"),
        (&["member", "--lang", "hv", "0aba1"], "true"),
        (&["member", "--lang", "hv", "11"], "false"),
        (&["factor", "11"], "count=1 cuts=[1]"),
        (&["factor", "01"], "count=1 cuts=[]"),
        (&["factor", "aba"], "count=0"),
        (&["viable", "0ab"], "true"),
        (&["viable", ""], "true"),
        (&["viable", "aba"], "false"),
        (&["viable", "-p", "1", "0abb"], "false"),
        (&["lasso", "--bound", "8", "|01"], "yes loop_start=0 loop_length=2 cuts=[0,2]"),
        (&["lasso", "--bound", "8", "|a1"], "no"),
        (&["lasso", "--bound", "8", "|0"], "unknown bound=8"),
        (&["member", "--lang", "r", "|01"], "true"),
        (&["member", "--lang", "r", "1|0"], "false"),
        (&["member", "--lang", "r", "0|10"], "true"),
        (&["member", "--lang", "r-approx", "-p", "1", "|1 0 E1"], "true"),
        (&["member", "--lang", "r-approx", "-p", "1", "|0 1 E1"], "false"),
        (&["member", "--lang", "r-approx", "-p", "1", "|E1 0"], "false"),
        (&["member", "--lang", "encoded-r-approx", "-p", "1", "|10aba"], "true"),
        (&["member", "--lang", "encoded-r-approx", "-p", "1", "|0aba"], "false"),
        (&["member", "--lang", "encoded-r-approx", "-p", "1", "|abba0"], "false"),
        (&["verify-rp", "-p", "1", "-n", "4"], "true"),
        (&["verify-rp", "-p", "2", "-n", "4"], "true"),
        (&["verify-rp", "-p", "1", "-n", "0"], "true"),
        (&["theta", "0"], "1"),
        (&["theta", "1"], "01"),
        (&["theta", "2"], "001"),
        (&["theta", "--upto", "2"], "0\t1\n1\t01\n2\t001"),
        (&["enumerate", "hv", "--max-len", "1"], "1"),
        (&["enumerate", "hv", "--max-len", "2"], "1\n01"),
        (&["dcheck", "1", "1"], "true"),
        (&["dcheck", "01", "01"], "true"),
        (&["dcheck", "1", "0"], "false"),
    ]);
}

#[test]
fn empty_enumerations_print_nothing() {
    assert_eq!(stdout_of(&["enumerate", "hv", "--max-len", "0"]), "");
}

#[test]
fn malformed_input_exits_with_2() {
    for (args, diagnostic) in [
        (&["decode", "aa"][..], "malformed code at position 2"),
        (&["decode", "0x"][..], "position 2"),
        (&["erase", "0 E0"][..], "position 3"),
        (&["erase", "--up", "0 E1"][..], "'|'"),
        (&["erase", "--up", "0|"][..], "nonempty"),
        (&["staged-erase", "-k", "1", "0 E2"][..], "index 2"),
        (&["member", "--lang", "r-approx", "-p", "1", "|0 E2"][..], "index 2"),
        (&["member", "--lang", "lk", "0"][..], "-k"),
        (&["frobnicate"][..], ""),
    ] {
        let out = eraser(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        let stderr = String::from_utf8_lossy(&out.stderr);
        assert!(stderr.contains(diagnostic), "{args:?}: {stderr}");
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["theta", "--upto", "40"];
    assert_eq!(stdout_of(&args), stdout_of(&args));
}

#[test]
fn verify_rp_writes_a_report_only_when_asked() {
    let dir = std::env::temp_dir().join(format!("eraser-cli-report-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.txt");
    assert_eq!(
        stdout_of(&["verify-rp", "-p", "2", "-n", "5", "--report", path.to_str().unwrap()]),
        "true\n"
    );
    let report = std::fs::read_to_string(&path).unwrap();
    assert!(report.starts_with("p=2 n=5\n"));
    assert!(report.ends_with("equal\n"));
    std::fs::remove_dir_all(&dir).unwrap();
}
