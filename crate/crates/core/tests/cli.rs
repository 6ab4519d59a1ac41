use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schroder-maj")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn enumerate_prints_polynomial_and_count() {
    let o = run(&["enumerate", "schroeder", "--r", "0", "--n", "2", "--m", "2", "--k", "1", "--order", "E>D>N"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("polynomial: q + q^2 + q^3"), "{out}");
    assert!(out.contains("count: 3"), "{out}");

    let o = run(&["--format", "json", "enumerate", "syt", "--shape", "2,2"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["polynomial"], "q^2 + q^4");
    assert_eq!(v["count"], 2);

    let o = run(&["enumerate", "rt", "--shape", "2,2", "--n", "3"]);
    assert!(stdout(&o).contains("count: 6"));
}

#[test]
fn closed_form_agrees_with_enumeration() {
    let e = run(&["--format", "json", "enumerate", "rinc", "--r", "1", "--n", "4", "--m", "3", "--k", "2"]);
    let c = run(&["--format", "json", "closed-form", "rinc-maj", "--r", "1", "--n", "4", "--m", "3", "--k", "2"]);
    let e: serde_json::Value = serde_json::from_slice(&e.stdout).unwrap();
    let c: serde_json::Value = serde_json::from_slice(&c.stdout).unwrap();
    assert_eq!(e["polynomial"], c["polynomial"]);
    assert_eq!(c["family_empty"], false);
}

#[test]
fn exit_codes() {
    let big = run(&["enumerate", "schroeder", "--n", "12", "--m", "3"]);
    assert_eq!(big.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&big.stderr).contains("budget"));
    assert_eq!(run(&["enumerate", "nonsense", "--n", "2", "--m", "1"]).status.code(), Some(2));
    assert_eq!(run(&["--jobs", "0", "verify"]).status.code(), Some(2));
    let bad = run(&["bijection", "jdt", "--tableau", ". 1 3 8 / 2 4 7 / 5 6", "--cell", "2,2"]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn verify_report_is_independent_of_workers() {
    let sweep = |jobs| run(&["--format", "json", "--max-n", "4", "--jobs", jobs, "verify", "--no-timing"]);
    let (one, many) = (sweep("1"), sweep("6"));
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, many.stdout);
    let v: serde_json::Value = serde_json::from_slice(&one.stdout).unwrap();
    let records = v["records"].as_array().unwrap();
    let s = &v["summary"];
    assert_eq!(s["checked"].as_u64().unwrap() as usize, records.len());
    assert_eq!(s["mismatched"], 0);
    let skipped = records.iter().filter(|r| r["status"] == "skipped-empty").count();
    assert_eq!(s["skipped"].as_u64().unwrap() as usize, skipped);
    for r in records {
        if r["status"] == "match" {
            assert_eq!(r["enumerated"], r["closed_form"]);
        }
    }
}

#[test]
fn config_file_and_csv_output() {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join("sweep.conf");
    std::fs::write(&path, "# small sweep\nmax_n = 3\nchecks = schroeder-maj, count\nformat = csv\ntiming = off\n")
        .unwrap();
    let o = run(&["--config", path.to_str().unwrap(), "verify"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("check,r,n,m,k,shape,order,enumerated,closed_form,status,millis"));
    assert!(lines.all(|l| l.starts_with("schroeder-maj,") || l.starts_with("count,")));

    std::fs::write(&path, "max_n = three\n").unwrap();
    assert_eq!(run(&["--config", path.to_str().unwrap(), "verify"]).status.code(), Some(2));
}

#[test]
fn bijection_traces() {
    let o = run(&["bijection", "chi", "--r", "2", "--n", "5", "--m", "4", "--k", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains(". . 1 2 4 / 2 3 4 5  ->  . . 1 / 2 4 / 3 / 5"), "{out}");
    assert!(out.contains(". . 1 2 5 / 2 3 4 5  ->  . . 1 / 2 4 5 / 3"), "{out}");
    assert!(out.trim_end().ends_with("0 failures"));

    let o = run(&["bijection", "rho", "--tableau", "1 2 4 5 6 / 2 3 4 6"]);
    assert!(stdout(&o).contains("->  1 2 4 5 6 / 2 3 6"));

    let o = run(&["bijection", "g", "--tableau", ". 1 4 5 / . 3 7 / 2 / 6"]);
    assert!(stdout(&o).contains("->  1 3 4 5 / 2 7 / 6"));
    assert!(stdout(&o).contains("D={1,5} maj=6"));
}
