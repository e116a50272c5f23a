//! Command-line behavior: exit codes, determinism of the machine output,
//! file round trips and the expectation flags.

use std::process::{Command, Output};

fn operads(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_operads"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn zoo_list_succeeds() {
    let out = operads(&["zoo", "list"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("PreLie"));
}

#[test]
fn unknown_zoo_entry_is_an_input_error() {
    let out = operads(&["dual", "zoo:NoSuchThing"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("available"), "{err}");
}

#[test]
fn bad_flag_is_an_input_error() {
    let out = operads(&["dims", "zoo:Com", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn json_output_is_byte_identical_across_runs() {
    let a = operads(&["dims", "zoo:Perm", "--max-arity", "4", "--json"]);
    let b = operads(&["dims", "zoo:Perm", "--max-arity", "4", "--json"]);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
    let c = operads(&["white", "zoo:Perm", "zoo:As", "--json"]);
    let d = operads(&["white", "zoo:Perm", "zoo:As", "--json"]);
    assert_eq!(stdout(&c), stdout(&d));
}

#[test]
fn expect_with_map_gives_exact_verdict() {
    let dir = tempfile::tempdir().unwrap();
    let map_path = dir.path().join("map.json");
    // Perm o Lie = Leib under diag(1, -1)
    std::fs::write(&map_path, r#"[["1","0"],["0","-1"]]"#).unwrap();
    let out = operads(&[
        "white",
        "zoo:Perm",
        "zoo:Lie",
        "--expect",
        "zoo:Leib",
        "--map",
        map_path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert!(stdout(&out).contains("exactly equal"));
    // an equivariant but wrong map is a mismatch with exit 2
    std::fs::write(&map_path, r#"[["0","1"],["-1","0"]]"#).unwrap();
    let out = operads(&[
        "white",
        "zoo:Perm",
        "zoo:Lie",
        "--expect",
        "zoo:Leib",
        "--map",
        map_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2), "{}", stdout(&out));
    // a non-equivariant map is rejected as an input error
    std::fs::write(&map_path, r#"[["1","0"],["0","1"]]"#).unwrap();
    let out = operads(&[
        "white",
        "zoo:Perm",
        "zoo:Lie",
        "--expect",
        "zoo:Leib",
        "--map",
        map_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1), "{}", stdout(&out));
}

#[test]
fn expect_without_map_falls_back_to_invariants() {
    let out = operads(&["white", "zoo:Perm", "zoo:As", "--expect", "zoo:Dias"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("invariants match"));
    let out = operads(&["white", "zoo:Perm", "zoo:As", "--expect", "zoo:Zinb"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dual_round_trips_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("dual.json");
    let out = operads(&["dual", "zoo:Dend", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    // feed the file back in: its dual is Dend again
    let out = operads(&[
        "dual",
        path.to_str().unwrap(),
        "--expect",
        "zoo:Dend",
        "--map",
        {
            let map = dir.path().join("id.json");
            std::fs::write(&map, r#"[["1","0"],["0","1"]]"#).unwrap();
            Box::leak(map.to_str().unwrap().to_string().into_boxed_str())
        },
    ]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert!(stdout(&out).contains("exactly equal"));
}

#[test]
fn koszul_check_flags_the_counterexample_with_exit_two() {
    let out = operads(&["koszul-check", "zoo:PreLieNilBlack", "--order", "10"]);
    assert_eq!(out.status.code(), Some(2));
    let text = stdout(&out);
    assert!(text.contains("-715/16"), "{text}");
    assert!(text.contains("not Koszul"), "{text}");
}

#[test]
fn koszul_check_passes_consistent_tables() {
    let out = operads(&["koszul-check", "zoo:AsNs", "--order", "5"]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert!(stdout(&out).contains("consistent with Koszulity"));
}

#[test]
fn check_verbs_report_verdicts() {
    for (args, expect_ok) in [
        (vec!["duality-check", "zoo:Dend", "zoo:Dend"], true),
        (vec!["epi-check", "zoo:Dend", "zoo:Dias"], true),
        (vec!["mult-check", "zoo:Dend"], true),
        (vec!["bracket-check", "zoo:Leib"], true),
    ] {
        let out = operads(&args);
        assert_eq!(out.status.success(), expect_ok, "{args:?}: {}", stdout(&out));
    }
}

#[test]
fn defcomplex_runs_on_an_algebra_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("dual_numbers.json");
    std::fs::write(
        &path,
        r#"{
            "dim": 2,
            "generators": [
                { "name": "m", "table": [["1","0","0","0"], ["0","1","1","0"]] }
            ]
        }"#,
    )
    .unwrap();
    let out = operads(&["defcomplex", "zoo:AsNs", path.to_str().unwrap()]);
    assert!(out.status.success(), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("Maurer-Cartan"), "{text}");
    // a non-associative table is rejected as an input error
    std::fs::write(
        &path,
        r#"{
            "dim": 2,
            "generators": [
                { "name": "m", "table": [["0","0","0","0"], ["1","0","1","0"]] }
            ]
        }"#,
    )
    .unwrap();
    let out = operads(&["defcomplex", "zoo:AsNs", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn bsquare_of_dend_matches_quad() {
    let out = operads(&["bsquare", "zoo:Dend", "zoo:Dend", "--expect", "zoo:Quad"]);
    assert!(out.status.success(), "{}", stdout(&out));
}

#[test]
fn koszul_check_reports_missing_arities() {
    // dims only reach arity 5 and never hit two consecutive zeros, so the
    // table cannot be extended to order 10
    let out = operads(&["koszul-check", "zoo:Com", "--order", "10"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("missing arity 6"));
    // the dual-table identity is reported when computable
    let out = operads(&["koszul-check", "zoo:Com", "--order", "5"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("identity against the computed dual table: holds"));
}

#[test]
fn arity_six_is_accepted_with_a_warning() {
    let out = operads(&["dims", "zoo:Com", "--max-arity", "6"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("above the default bound"));
    assert!(stdout(&out).contains("945"));
}
