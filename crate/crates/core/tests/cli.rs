use twinsieve::cli::{run, EXIT_OK, EXIT_USAGE, EXIT_VIOLATION};

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("twinsieve").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn replicate_78_matches_golden() {
    let (code, out, _) = invoke(&["replicate-78"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, include_str!("golden/replicate_78.txt"));
}

#[test]
fn replicate_78_with_oracle() {
    let (code, _, err) = invoke(&["replicate-78", "--oracle"]);
    assert_eq!(code, EXIT_OK, "{err}");
}

#[test]
fn table_csv_head() {
    let (code, out, _) = invoke(&["table", "--m-lo", "2", "--m-hi", "10", "--format", "csv"]);
    assert_eq!(code, EXIT_OK);
    let counts: Vec<&str> = out.lines().skip(1).map(|l| l.rsplit(',').next().unwrap()).collect();
    assert_eq!(counts, ["1", "1", "1", "2", "1", "2", "1", "2", "2"]);
    assert!(out.starts_with("M,p_M,count\n2,3,1\n3,5,1\n"));
}

#[test]
fn audit_full_range_is_clean() {
    let (code, out, err) = invoke(&["audit", "--m-lo", "2", "--m-hi", "1999", "--format", "csv"]);
    assert_eq!(code, EXIT_OK, "{err}");
    assert_eq!(out.lines().count(), 1999);
    assert!(out.lines().skip(1).all(|l| l.ends_with(",true,true")));
    assert!(out.contains("\n5,2,1,1,0,case1,true,true\n"));
}

#[test]
fn strict_table_reports_empty_window() {
    let (code, _, err) = invoke(&["table", "--m-hi", "20", "--convention", "strict"]);
    assert_eq!(code, EXIT_VIOLATION);
    assert!(err.contains("Q(3) is empty"), "{err}");
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        &["frobnicate"][..],
        &["table", "--bogus"],
        &["table", "--m-lo", "1"],
        &["table", "--m-lo", "10", "--m-hi", "5"],
        &["table", "--threads", "0"],
        &["pseudo", "--search-limit", "0"],
        &["pairs", "--format", "plot"],
        &["table", "--convention", "closed"],
        &[],
    ] {
        let (code, _, err) = invoke(args);
        assert_eq!(code, EXIT_USAGE, "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = invoke(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("replicate-78"));
}

#[test]
fn threads_do_not_change_bytes() {
    let (_, one, _) = invoke(&["table", "--m-hi", "3000", "--format", "json", "--threads", "1"]);
    let (_, four, _) = invoke(&["table", "--m-hi", "3000", "--format", "json", "--threads", "4"]);
    assert_eq!(one, four);
    let (_, one, _) = invoke(&["audit", "--format", "csv", "--threads", "1"]);
    let (_, four, _) = invoke(&["audit", "--format", "csv", "--threads", "3"]);
    assert_eq!(one, four);
}

#[test]
fn pairs_text_lists_windows() {
    let (code, out, _) = invoke(&["pairs", "--m-lo", "2", "--m-hi", "5", "--oracle"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().next().unwrap(), "M=2 p_M=3 {{3, 5}}");
    assert_eq!(out.lines().nth(3).unwrap(), "M=5 p_M=11 {{11, 13}, {17, 19}}");
}

#[test]
fn pseudo_with_small_fixed_limit_is_a_violation() {
    let (code, _, err) = invoke(&["pseudo", "--m-lo", "3", "--m-hi", "3", "--search-limit", "10"]);
    assert_eq!(code, EXIT_VIOLATION);
    assert!(err.contains("not found"));
    let (code, out, _) = invoke(&["pseudo", "--m-hi", "300", "--oracle"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("M=2 p_M=3 q_M=5 in_interval=true certified_twin=true\nM=3 p_M=5 q_M=11 in_interval=false"));
}

#[test]
fn witness_and_theorem6_with_oracle() {
    let (code, out, _) = invoke(&["witness", "--oracle", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("\"generated_kind\": \"witness\""));
    let (code, out, _) = invoke(&["theorem6", "--oracle"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("exceptions (4): [2, 3, 5, 6]"), "{out}");
}

#[test]
fn oracle_check_subcommand() {
    let (code, out, err) = invoke(&["oracle-check", "--m-hi", "200"]);
    assert_eq!(code, EXIT_OK, "{err}");
    assert_eq!(out.lines().count(), 4);
    assert!(out.lines().all(|l| l.ends_with(": ok")), "{out}");
}

#[test]
fn out_path_and_plot_formats() {
    let dir = tempfile::tempdir().unwrap();
    let dat = dir.path().join("series.dat");
    let svg = dir.path().join("series.svg");
    let (code, out, _) = invoke(&["table", "--format", "plot", "--out", dat.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert!(out.is_empty());
    let data = std::fs::read_to_string(&dat).unwrap();
    assert_eq!(data.lines().count(), 1999);
    assert_eq!(data.lines().last().unwrap(), "2000 234");
    let (code, _, _) = invoke(&["table", "--m-hi", "100", "--format", "plot", "--out", svg.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert!(std::fs::read_to_string(&svg).unwrap().starts_with("<svg"));
}
