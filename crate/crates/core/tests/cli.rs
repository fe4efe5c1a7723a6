//! Command-line behaviour: exit codes, JSON round trips and the cache.

use std::process::Command;

use stablerep::cli::{run, HomDimOutput, LabeledOutput, LrOutput, EXIT_BUDGET, EXIT_OK, EXIT_USAGE, EXIT_VERIFICATION_FAILED};
use stablerep::labeled::{GeneralLabeledPartition, QLabeledPartition};
use stablerep::partitions::Partition;
use stablerep::report::Report;
use stablerep::stable::{StableCohomologyResult, TableRow};

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("stablerep").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = call(args);
    assert_eq!(code, EXIT_OK, "{args:?}: {err}");
    out
}

#[test]
fn partitions_text() {
    assert_eq!(ok(&["partitions", "4"]), "4\n3,1\n2,2\n2,1,1\n1,1,1,1\n");
    assert_eq!(ok(&["partitions", "0"]), "0\n");
}

#[test]
fn lr_prints_the_coefficient() {
    assert_eq!(ok(&["lr", "2,1", "1", "1,1"]), "1\n");
    let out: LrOutput = serde_json::from_str(&ok(&["--json", "lr", "3,2,1", "2,1", "2,1"])).unwrap();
    assert_eq!(out.coefficient, 2);
}

#[test]
fn stable_cohomology_json() {
    let out = ok(&["stable-cohomology", "2", "1", "--json"]);
    let r: StableCohomologyResult = serde_json::from_str(&out).unwrap();
    assert_eq!((r.dimension, r.degree), (3, 1));
    assert_eq!(serde_json::to_string_pretty(&r).unwrap() + "\n", out);
}

#[test]
fn verify_splitting_passes() {
    let (code, out, _) = call(&["verify", "splitting", "3", "2", "3"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("PASS"));
    assert!(out.contains("[ok] ("));
}

#[test]
fn failed_verification_exits_one() {
    let (code, out, _) = call(&["verify", "rw-prop", "2", "1", "1"]);
    assert_eq!(code, EXIT_VERIFICATION_FAILED);
    assert!(out.starts_with("FAIL"));
    let (code, out, _) = call(&["--json", "verify", "rw-prop", "2", "1", "1"]);
    assert_eq!(code, EXIT_VERIFICATION_FAILED);
    let r: Report = serde_json::from_str(&out).unwrap();
    assert!(!r.pass);
}

#[test]
fn usage_and_budget_exit_codes() {
    assert_eq!(call(&["nonsense"]).0, EXIT_USAGE);
    assert_eq!(call(&["partitions"]).0, EXIT_USAGE);
    assert_eq!(call(&["char", "1,3"]).0, EXIT_USAGE);
    assert_eq!(call(&["labeled-partitions", "1", "2"]).0, EXIT_USAGE);
    assert_eq!(call(&["verify", "extension", "2", "0", "1"]).0, EXIT_USAGE);
    assert_eq!(call(&["--budget", "50", "cauchy", "3", "3", "3"]).0, EXIT_BUDGET);
    assert_eq!(call(&["--help"]).0, EXIT_OK);
    assert_eq!(call(&["--version"]).0, EXIT_OK);
}

#[test]
fn json_outputs_round_trip() {
    let parts: Vec<Partition> = serde_json::from_str(&ok(&["--json", "partitions", "5"])).unwrap();
    assert_eq!(parts.len(), 7);
    assert_eq!(serde_json::to_string_pretty(&parts).unwrap() + "\n", ok(&["--json", "partitions", "5"]));

    let out = ok(&["--json", "labeled-partitions", "3", "1"]);
    let l: LabeledOutput<QLabeledPartition> = serde_json::from_str(&out).unwrap();
    assert_eq!(l.count, 10);
    assert_eq!(serde_json::to_string_pretty(&l).unwrap() + "\n", out);

    let out = ok(&["--json", "labeled-partitions", "2", "1", "--general"]);
    let l: LabeledOutput<GeneralLabeledPartition> = serde_json::from_str(&out).unwrap();
    assert_eq!(l.count, 5);
    assert_eq!(serde_json::to_string_pretty(&l).unwrap() + "\n", out);

    let out = ok(&["--json", "hom-dim", "2", "1", "2"]);
    let h: HomDimOutput = serde_json::from_str(&out).unwrap();
    assert_eq!(h.dimension, 5);
    assert_eq!(serde_json::to_string_pretty(&h).unwrap() + "\n", out);

    let out = ok(&["--json", "stable-cohomology", "--table", "3", "3"]);
    let rows: Vec<TableRow> = serde_json::from_str(&out).unwrap();
    assert_eq!(rows.len(), 10);
    assert_eq!(serde_json::to_string_pretty(&rows).unwrap() + "\n", out);

    let out = ok(&["--json", "cauchy", "2", "2", "2"]);
    let r: Report = serde_json::from_str(&out).unwrap();
    assert_eq!(serde_json::to_string_pretty(&r).unwrap() + "\n", out);
}

#[test]
fn cache_output_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let commands: [&[&str]; 7] = [
        &["char", "3,1,1"],
        &["--json", "char", "2,2"],
        &["labeled-partitions", "3", "2"],
        &["labeled-partitions", "3", "1", "--general"],
        &["stable-cohomology", "3", "1"],
        &["--json", "stable-cohomology", "4", "2"],
        &["stable-cohomology", "--table", "4", "3"],
    ];
    for args in commands {
        let plain = ok(args);
        let mut with_cache = vec!["--cache", cache];
        with_cache.extend_from_slice(args);
        let cold = ok(&with_cache);
        let warm = ok(&with_cache);
        assert_eq!(plain, cold, "{args:?}");
        assert_eq!(plain, warm, "{args:?}");
    }
    assert!(std::fs::read_dir(dir.path()).unwrap().count() > 0);
}

#[test]
fn corrupt_cache_entries_are_recomputed() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let plain = ok(&["stable-cohomology", "2", "1"]);
    ok(&["--cache", cache, "stable-cohomology", "2", "1"]);
    for entry in walk(dir.path()) {
        std::fs::write(entry, "not json").unwrap();
    }
    assert_eq!(ok(&["--cache", cache, "stable-cohomology", "2", "1"]), plain);
}

fn walk(dir: &std::path::Path) -> Vec<std::path::PathBuf> {
    let mut out = Vec::new();
    for e in std::fs::read_dir(dir).unwrap() {
        let path = e.unwrap().path();
        if path.is_dir() {
            out.extend(walk(&path));
        } else {
            out.push(path);
        }
    }
    out
}

#[test]
fn binary_exit_codes_and_env_budget() {
    let bin = env!("CARGO_BIN_EXE_stablerep");
    let out = Command::new(bin).args(["lr", "2,1", "1", "1,1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "1\n");
    let out = Command::new(bin).args(["cauchy", "3", "3", "3"]).env("STABLEREP_BUDGET", "40").output().unwrap();
    assert_eq!(out.status.code(), Some(3));
    let out = Command::new(bin).arg("bogus").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}
