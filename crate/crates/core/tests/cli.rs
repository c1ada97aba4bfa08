use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_whitehead-census")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

#[test]
fn count_json() {
    let v = json(&["count", "--n", "5", "--r", "5/2", "--format", "json"]);
    assert_eq!(v["status"], "classified");
    assert_eq!(v["total"], 7);
    let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
    assert_eq!(keys.len(), 8);
    assert_eq!(json(&["count", "--n", "5", "--r", "-3", "--format", "json"])["total"], 4);
    assert_eq!(json(&["count", "--n", "5", "--r", "0", "--format", "json"])["total"], "inf");
}

#[test]
fn census_csv_and_table() {
    let csv = stdout(&["census", "--n", "5..6", "--r", "2", "--format", "csv"]);
    let lines: Vec<_> = csv.lines().collect();
    assert_eq!(lines[0], "n,r,status,psi_family,phi_family,total,stein_fillable,vot_lower");
    assert_eq!(lines[1], "5,2,classified,1,2,3,true,0");
    assert_eq!(lines[2], "6,2,classified,1,2,3,true,0");

    let v = json(&["census", "--n-range", "5", "--r-list", "7,3,5", "--format", "json"]);
    let totals: Vec<_> = v.as_array().unwrap().iter().map(|r| r["total"].clone()).collect();
    assert_eq!(totals, vec![4, 4, 4]);
    let rs: Vec<_> = v.as_array().unwrap().iter().map(|r| r["r"].clone()).collect();
    assert_eq!(rs, vec!["3", "5", "7"]);

    let table = stdout(&["census", "--n", "5", "--r", "1"]);
    assert!(table.contains("lower_bound_only"));
}

#[test]
fn census_parallel_is_identical() {
    let args = ["census", "--n", "3..9", "--r", "-7/2,-1,0,1/2,1,2,5/2,4,9/2,5,31/7", "--format", "csv"];
    let serial = stdout(&args);
    let mut par = args.to_vec();
    par.push("--parallel");
    assert_eq!(stdout(&par), serial);
}

#[test]
fn out_file() {
    let path = std::env::temp_dir().join(format!("census-{}.csv", std::process::id()));
    let p = path.to_str().unwrap();
    assert_eq!(stdout(&["census", "--n", "5", "--r", "2", "--format", "csv", "--out", p]), "");
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(written.ends_with("5,2,classified,1,2,3,true,0\n"));
}

#[test]
fn traces() {
    assert_eq!(stdout(&["trace", "thicken", "--s", "7/2"]), "7/2 -> 4 -> inf\n");
    assert_eq!(stdout(&["trace", "thicken", "--s", "22/5"]), "stalled at 9/2\n");
    assert_eq!(stdout(&["trace", "thicken", "--s", "-3/2"]), "-3/2 -> -1 => 0 -> 1\n");
    assert_eq!(stdout(&["trace", "convert", "--knot", "trefoil", "--coeff", "3/2"]), "+1; -1 (2 stabs)\n");
    assert_eq!(stdout(&["trace", "bypass", "--s", "5/2", "--r", "0"]), "5/2 -> 3\n");
    assert_eq!(stdout(&["trace", "bypass", "--s", "5/2", "--r", "0", "--flips", "2"]), "5/2 -> 2\n");
}

#[test]
fn scalar_commands() {
    assert_eq!(stdout(&["phi", "--r", "5/2"]), "2\n");
    assert_eq!(stdout(&["psi", "--r", "-3"]), "4\n");
    assert_eq!(stdout(&["contfrac", "--r", "-7/5"]), "[-2, -2, -3]\n");
}

#[test]
fn verify_suites() {
    assert_eq!(stdout(&["verify", "counts"]), "weeks=7 ok; integer-table ok\n");
    assert_eq!(stdout(&["verify", "monodromy"]), "factorization ok; triangles ok; stein-witness ok\n");
    assert_eq!(stdout(&["verify", "farey"]), "bypass-monotone ok; S(r)-guards ok\n");
    let all = stdout(&["verify"]);
    assert_eq!(all.lines().count(), 4);
}

#[test]
fn errors_exit_with_two() {
    for args in [
        vec!["count", "--n", "5", "--r", "abc"],
        vec!["count", "--n", "2", "--r", "5/2"],
        vec!["count", "--n", "5", "--r", "inf"],
        vec!["census", "--n", "5", "--r", "2,x"],
        vec!["contfrac", "--r", "1/2"],
        vec!["trace", "thicken", "--s", "2"],
        vec!["trace", "convert", "--knot", "unknot", "--coeff", "1/2"],
        vec!["trace", "convert", "--knot", "figure8", "--coeff", "1"],
        vec!["verify", "nonsense"],
        vec!["bogus"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
    let err = run(&["count", "--n", "5", "--r", "abc"]).stderr;
    assert_eq!(String::from_utf8(err).unwrap().lines().count(), 1);
}
