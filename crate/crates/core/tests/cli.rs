use std::io::Cursor;
use std::process::Command;

use clutter_complexity::cli::dispatch;

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn run(args: &[&str], stdin: &str) -> Run {
    let mut input = Cursor::new(stdin.as_bytes().to_vec());
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("clutterc").chain(args.iter().copied());
    let code = dispatch(argv, &mut input, &mut out, &mut err);
    Run { code, out: String::from_utf8(out).unwrap(), err: String::from_utf8(err).unwrap() }
}

fn json_lines(s: &str) -> Vec<serde_json::Value> {
    s.lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn k6_matching_complexity() {
    let r = run(&["complexity", "--matching", "--graph6", "E~~w"], "");
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(r.out.starts_with("c = 2/3 "), "{}", r.out);

    let r = run(&["--format", "json", "complexity", "--matching", "--graph6", "E~~w"], "");
    let v = &json_lines(&r.out)[0];
    assert_eq!(v["c"], "2/3");
    assert_eq!(v["report"]["edges"], 15);
    assert_eq!(v["edge_map"].as_array().unwrap().len(), 15);
}

#[test]
fn family_output_pipes_into_complexity() {
    let fam = run(&["family", "all-rationals", "-m", "2", "-n", "3"], "");
    assert_eq!(fam.code, 0, "{}", fam.err);
    let r = run(&["--format", "json", "complexity", "--independent"], &fam.out);
    assert_eq!(r.code, 0, "{}", r.err);
    assert_eq!(json_lines(&r.out)[0]["c"], "2/3");

    let r = run(&["--format", "json", "complexity", "--independent", "-i", "-"], &fam.out);
    assert_eq!(json_lines(&r.out)[0]["c"], "2/3");
}

#[test]
fn several_graphs_one_record_each() {
    let r = run(&["--format", "tsv", "complexity", "--matching"], "C~\nE~~w\n\nDqO\n");
    assert_eq!(r.code, 0, "{}", r.err);
    let cs: Vec<&str> = r.out.lines().map(|l| l.split('\t').nth(2).unwrap()).collect();
    assert_eq!(r.out.lines().count(), 3, "{}", r.out);
    assert_eq!(cs[..2], ["1/2", "2/3"]);
}

#[test]
fn clutter_file_and_addendum_violation() {
    let text = "8\n0 1 2 3\n0 1 4 5\n2 4 6 7\n";
    let r = run(&["--format", "json", "complexity", "--clutter", "-"], text);
    assert_eq!(r.code, 0, "{}", r.err);
    assert_eq!(json_lines(&r.out)[0]["c"], "1/4");

    let r = run(&["--format", "json", "check", "bound", "--kind", "addendum", "--clutter", "-"], text);
    assert_eq!(r.code, 1);
    let v = &json_lines(&r.out)[0];
    assert_eq!((v["applicable"].as_bool(), v["holds"].as_bool()), (Some(true), Some(false)));
    assert_eq!(v["rhs"], "1/(9-2*sqrt(7))");
}

#[test]
fn bounds_and_lemmas_on_k4() {
    let r = run(&["--format", "json", "check", "bound", "--kind", "all", "--graph6", "C~"], "");
    assert_eq!(r.code, 0, "{}", r.err);
    let rows = json_lines(&r.out);
    assert_eq!(rows.len(), 8);
    let half = rows.iter().find(|v| v["kind"] == "regular_half").unwrap();
    assert_eq!((half["lhs"].as_str(), half["tight"].as_bool()), (Some("1/2"), Some(true)));

    let r = run(&["--format", "json", "check", "lemma", "--kind", "all", "--graph6", "C~"], "");
    assert_eq!(r.code, 0, "{}", r.err);
    assert_eq!(json_lines(&r.out).len(), 4);

    let r = run(&["check", "bound", "--kind", "main", "--graph6", "Cr"], "");
    assert_eq!(r.code, 0, "inapplicable is not a violation: {}", r.out);
}

#[test]
fn trees() {
    // Path on 5 vertices.
    let r = run(&["--format", "json", "label-tree", "--graph6", "DhC"], "");
    assert_eq!(r.code, 0, "{}", r.err);
    assert_eq!(json_lines(&r.out)[0]["labeling"].as_array().unwrap().len(), 5);

    let r = run(&["--format", "json", "construct-tree-mis", "--graph6", "DhC"], "");
    assert_eq!(r.code, 0, "{}", r.err);
    assert_eq!(json_lines(&r.out).len(), 2, "one record per leaf");

    // The star K_{1,3} has a beta-vertex.
    let r = run(&["construct-tree-mis", "--leaf", "0", "--graph6", "CF"], "");
    assert_eq!(r.code, 2);
    assert!(r.err.contains("beta"), "{}", r.err);
}

#[test]
fn reductions_round_trip() {
    let inst = run(&["--seed", "5", "reduce", "random", "--max-n", "3", "--max-m", "3"], "");
    assert_eq!(inst.code, 0, "{}", inst.err);
    let r = run(&["--format", "json", "reduce", "verify"], &inst.out);
    assert_eq!(r.code, 0, "{} {}", r.out, r.err);
    for v in json_lines(&r.out) {
        assert_eq!(v["holds"], true);
    }
    let r = run(&["--format", "json", "reduce", "problem1"], "3 3\n0 1\n1 2\n2\n");
    assert_eq!(r.code, 0, "{}", r.err);
    let v = &json_lines(&r.out)[0];
    assert_eq!((v["vertices"].as_u64(), v["multiplicity"].as_u64()), (Some(6), Some(1)));
    assert_eq!(v["distinguished_mis"], serde_json::json!([3, 4, 5]));

    // 111 vertices: too many for graph6, so the gadget comes out as an edge list.
    let r = run(&["--format", "json", "reduce", "problem2"], "3 3\n0 1\n1 2\n2\n");
    let v = &json_lines(&r.out)[0];
    assert_eq!((v["vertices"].as_u64(), v["graph6"].is_null()), (Some(111), true));
    let gadget = run(&["reduce", "problem2"], "3 3\n0 1\n1 2\n2\n");
    assert!(gadget.out.starts_with("111\n"));
    let r = run(&["--format", "json", "complexity", "--edges", "-"], &gadget.out);
    assert_eq!(json_lines(&r.out)[0]["c"], "2/3");
}

#[test]
fn builtin_scan_finds_no_counterexample() {
    let r = run(&["--format", "json", "scan", "--builtin", "--max-n", "7"], "");
    assert_eq!(r.code, 0, "{}", r.err);
    let v = &json_lines(&r.out)[0];
    assert!(v["counterexamples"].as_array().unwrap().is_empty());
    let classes: Vec<&str> = v["exceptions"].as_array().unwrap().iter().map(|e| e["class"].as_str().unwrap()).collect();
    assert!(classes.contains(&"C_7"), "{classes:?}");
}

#[test]
fn scan_of_graph6_lines_reports_parse_errors() {
    let r = run(&["--format", "json", "scan"], ">>graph6<<C~\nnot-a-graph\nFCpb?\n");
    let v = &json_lines(&r.out)[0];
    assert_eq!(v["parse_errors"].as_array().unwrap().len(), 1);
    assert_eq!(v["graphs"], 2);
}

#[test]
fn usage_errors_exit_two() {
    let r = run(&["--bogus"], "");
    assert_eq!(r.code, 2);
    assert!(r.err.starts_with("error:"), "{}", r.err);
    assert_eq!(run(&["complexity", "--graph6", "not graph6"], "").code, 2);
    assert_eq!(run(&["complexity", "--independent", "--matching", "--graph6", "C~"], "").code, 2);
    assert_eq!(run(&["family", "addendum", "-k", "1"], "").code, 2);
    assert_eq!(run(&["check", "bound", "--kind", "nonsense", "--graph6", "C~"], "").code, 2);
    assert_eq!(run(&["complexity", "--edges", "/nonexistent/file"], "").code, 2);
    assert_eq!(run(&["--help"], "").code, 0);
}

#[test]
fn caps_and_time_limit() {
    let r = run(&["--vertex-cap", "3", "complexity", "--graph6", "C~"], "");
    assert_eq!(r.code, 2);
    assert!(r.err.contains("vertex cap"), "{}", r.err);
    let r = run(&["--enum-cap", "2", "complexity", "--graph6", "C~"], "");
    assert_eq!(r.code, 2, "{}", r.out);
    let r = run(&["--time-limit", "0", "scan", "--builtin", "--max-n", "6"], "");
    assert_eq!(r.code, 2, "{}", r.out);
}

#[test]
fn environment_caps_reach_the_binary() {
    let bin = env!("CARGO_BIN_EXE_clutterc");
    let out = Command::new(bin).args(["complexity", "--graph6", "C~"]).env("CLUTTER_VERTEX_CAP", "3").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("vertex cap"));
    let out = Command::new(bin).args(["complexity", "--graph6", "C~"]).env("CLUTTER_ENUM_CAP", "2").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out =
        Command::new(bin).args(["complexity", "--graph6", "C~"]).env_remove("CLUTTER_VERTEX_CAP").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("c = 1/1"));
}

#[test]
fn output_is_deterministic() {
    let cases: [&[&str]; 4] = [
        &["family", "witness", "--target", "1/2", "--seed", "3"],
        &["scan", "--builtin", "--max-n", "6"],
        &["complexity", "--matching", "--graph6", "G~~~~{"],
        &["report", "--graph6", "FCpb?"],
    ];
    for args in cases {
        let json: Vec<&str> = ["--format", "json"].into_iter().chain(args.iter().copied()).collect();
        let first = run(&json, "");
        assert!(first.code == 0 || first.code == 1, "{args:?}: {}", first.err);
        for jobs in ["1", "2", "4"] {
            let mut with_jobs = json.clone();
            with_jobs.extend(["--jobs", jobs]);
            assert_eq!(run(&with_jobs, "").out, first.out, "{args:?} with --jobs {jobs}");
        }
    }
}

#[test]
fn census_counts() {
    let r = run(&["census", "--kind", "trees", "-n", "7"], "");
    assert_eq!(r.out.lines().count(), 11);
    let r = run(&["census", "--kind", "regular", "-n", "8"], "");
    assert_eq!(r.out.lines().count(), 17);
}
