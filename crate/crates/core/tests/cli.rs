use std::io::Write;
use std::process::{Command, Output, Stdio};

use ipow::{parse_interval, Interval};

fn ipow(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ipow"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn iv(lo: f64, hi: f64) -> Interval {
    Interval::new(lo, hi).unwrap()
}

#[test]
fn eval_examples() {
    let o = ipow(&["eval", "[-2,-2]", "[1,2]"], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "[-4,4]");
    assert_eq!(
        stdout(&ipow(&["eval", "[1,1]", "[-7,13]"], "")).trim(),
        "[1,1]"
    );
    assert_eq!(
        stdout(&ipow(&["eval", "[-2,-1]", "[0.5,0.5]"], "")).trim(),
        "empty"
    );
}

#[test]
fn exit_codes() {
    let o = ipow(&["eval", "[1,zz]", "[1,1]"], "");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("zz"));
    assert_eq!(
        ipow(&["eval", "[1,2]", "[inf,inf]"], "").status.code(),
        Some(3)
    );
    assert_eq!(ipow(&["eval", "[1,2]", "[3,1]"], "").status.code(), Some(2));
}

#[test]
fn hex_output_reads_back_bit_exact() {
    let o = ipow(&["--hex", "eval", "[4,9]", "[0.5,0.5]"], "");
    let text = stdout(&o);
    let back = parse_interval(text.trim()).unwrap();
    let decimal = stdout(&ipow(&["eval", "[4,9]", "[0.5,0.5]"], ""));
    assert_eq!(parse_interval(decimal.trim()).unwrap(), back);
    let (lo, hi) = back.bounds().unwrap();
    assert!(lo < 2.0 && hi > 3.0);
}

#[test]
fn json_schema() {
    let o = ipow(&["--json", "eval", "[-2,3]", "[2,2]"], "");
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let obj = v.as_object().unwrap();
    assert_eq!(obj.len(), 2);
    let lo = obj["lo"].as_str().unwrap();
    let hi = obj["hi"].as_str().unwrap();
    assert!(lo.starts_with("0x") && hi.starts_with("0x"));
    assert_eq!(
        parse_interval(&format!("[{lo},{hi}]")).unwrap(),
        iv(0.0, 9.0)
    );

    let o = ipow(&["--json", "eval", "[-2,-1]", "[0.5,0.5]"], "");
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v, serde_json::json!({ "empty": true }));
}

#[test]
fn batch_lines() {
    let input = "# hi\n-2 3 2 2\n\n4 9 0.5 0.5\n-2 -1 0.5 0.5\n";
    let o = ipow(&["batch"], input);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0], "0 9");
    let sqrt: Vec<f64> = lines[1].split(' ').map(|t| t.parse().unwrap()).collect();
    assert!(sqrt[0] <= 2.0 && sqrt[0] > 1.999_999_999_999 && sqrt[1] >= 3.0);
    assert_eq!(lines[2], "empty");
}

#[test]
fn batch_keeps_going_after_a_bad_line() {
    let o = ipow(&["batch"], "1 2 1 1\nnope\n2 2 2 2\n");
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stdout(&o), "1 2\nerror 2\n4 4\n");
}

#[test]
fn check_boxes() {
    assert_eq!(
        ipow(
            &["check", "--n", "1", "--seed", "1", "--box", "[1,1] [0,0]"],
            ""
        )
        .status
        .code(),
        Some(0)
    );
    let o = ipow(
        &[
            "check",
            "--n",
            "10",
            "--seed",
            "3",
            "--box",
            "[-5,-4] [0.25,0.25]",
        ],
        "",
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("defined: 0"));
    let o = ipow(&["check", "--n", "2000", "--seed", "7"], "");
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn loose_settings_still_contain() {
    let o = ipow(
        &[
            "--no-exact",
            "--ulps",
            "1",
            "check",
            "--n",
            "2000",
            "--seed",
            "11",
        ],
        "",
    );
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = ipow(&["--ulps", "0", "eval", "[1,2]", "[1,2]"], "");
    assert_ne!(o.status.code(), Some(0));
}

#[test]
fn bench_single_iteration() {
    let o = ipow(&["--json", "bench", "--iters", "1"], "");
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["iters"], 1);
    assert!(v["ratio"].as_f64().unwrap() > 0.0);
    let o = ipow(&["bench", "--iters", "1", "--workload", "nonneg"], "");
    assert!(stdout(&o).contains("ratio"));
}
