use std::process::{Command, Output};

fn seaweed(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_seaweed"))
        .args(args)
        .env_remove("SEAWEED_MAX_N")
        .env_remove("SEAWEED_MAX_C22_MEANDER_N")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn field<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines()
        .find_map(|l| l.strip_prefix(key).map(str::trim))
        .unwrap_or_else(|| panic!("no {key} in {text}"))
}

#[test]
fn index_reports_all_quantities() {
    let o = seaweed(&["index", "2|4/1|2|3"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert_eq!(field(&s, "index"), "0");
    assert_eq!(field(&s, "cycles"), "0");
    assert_eq!(field(&s, "paths"), "1");
    assert_eq!(field(&s, "rank"), "5");

    let s = stdout(&seaweed(&["index", "5|3/3|3|2"]));
    assert_eq!(
        (
            field(&s, "index"),
            field(&s, "dimension"),
            field(&s, "rank")
        ),
        ("1", "27", "7")
    );
}

#[test]
fn parse_errors_exit_two() {
    let o = seaweed(&["index", "2|4/1|2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("sums 6 ≠ 3"), "{}", stderr(&o));
    for bad in ["2|4", "2||4/6", "0|6/6", "a/1", ""] {
        assert_eq!(seaweed(&["wind", bad]).status.code(), Some(2), "{bad:?}");
    }
    assert_eq!(seaweed(&["verify", "everything"]).status.code(), Some(2));
    assert_eq!(
        seaweed(&["table", "c22", "--max-n", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(seaweed(&["series", "(x)/(2 - x)"]).status.code(), Some(2));
}

#[test]
fn wind_output() {
    let s = stdout(&seaweed(&["wind", "15/2|5|1|5|2"]));
    assert_eq!(s, "signature  PPC(1)C(5)C(2)\nhomotopy   H(1,5,2)\n");
    let s = stdout(&seaweed(&["wind", "1/1"]));
    assert_eq!(s, "signature  C(1)\nhomotopy   H(1)\n");
    let s = stdout(&seaweed(&["wind", "4|4/2|4|2"]));
    assert_eq!(field(&s, "homotopy"), "H(2)");
    let s = stdout(&seaweed(&["wind", "--trace", "2|4/1|2|3"]));
    assert_eq!(s.lines().count(), 9 + 2);
    assert!(s.ends_with("signature  BFBFPFRBC(1)\nhomotopy   H(1)\n"));
}

#[test]
fn table_golden_checks_and_formats() {
    for (kind, cells) in [("c21", "132"), ("c22", "110")] {
        let o = seaweed(&["table", kind, "--check-golden"]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        assert!(
            stderr(&o).contains(&format!("matches {cells} published cells")),
            "{}",
            stderr(&o)
        );
    }

    let o = seaweed(&[
        "table",
        "cnk",
        "--max-n",
        "6",
        "--format",
        "json",
        "--workers",
        "3",
    ]);
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["kind"], "cnk");
    assert_eq!(doc["rows"]["6"]["3"], 226);
    assert_eq!(doc["rows"]["1"]["0"], 1);
    assert_eq!(doc["rows"].as_object().unwrap().len(), 6);

    let s = stdout(&seaweed(&["table", "c21", "--max-n", "4"]));
    assert_eq!(
        s,
        "n,k,count\n2,0,1\n2,1,0\n3,0,2\n3,1,0\n3,2,0\n4,0,2\n4,1,1\n4,2,0\n4,3,0\n"
    );

    let s = stdout(&seaweed(&[
        "table", "c22", "--max-n", "3", "--format", "md",
    ]));
    assert_eq!(
        s,
        "| n\\k | 0 | 1 | 2 |\n|---|---|---|---|\n| 2 | 0 | 1 | 0 |\n| 3 | 2 | 0 | 2 |\n"
    );
}

#[test]
fn meander_oracle_table_matches_gcd_oracle() {
    let gcd = seaweed(&["table", "c22", "--max-n", "14"]);
    let meander = seaweed(&["table", "c22", "--max-n", "14", "--oracle", "meander"]);
    assert_eq!(gcd.stdout, meander.stdout);
}

#[test]
fn repeated_runs_are_byte_identical() {
    let a = seaweed(&["table", "cnk", "--max-n", "8", "--workers", "1"]);
    let b = seaweed(&["table", "cnk", "--max-n", "8", "--workers", "5"]);
    let c = seaweed(&["table", "cnk", "--max-n", "8", "--workers", "5"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(b.stdout, c.stdout);
    let r1 = seaweed(&["render", "15/2|5|1|5|2", "--format", "tikz"]);
    let r2 = seaweed(&["render", "15/2|5|1|5|2", "--format", "tikz"]);
    assert_eq!(r1.stdout, r2.stdout);
}

#[test]
fn limits_exit_three() {
    let o = Command::new(env!("CARGO_BIN_EXE_seaweed"))
        .args(["table", "cnk", "--max-n", "7"])
        .env("SEAWEED_MAX_N", "6")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("SEAWEED_MAX_N"));

    let o = Command::new(env!("CARGO_BIN_EXE_seaweed"))
        .args(["table", "c22", "--max-n", "9", "--oracle", "meander"])
        .env("SEAWEED_MAX_C22_MEANDER_N", "8")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));

    assert_eq!(
        seaweed(&["table", "cnk", "--max-n", "15"]).status.code(),
        Some(3)
    );
}

#[test]
fn output_files_and_io_errors() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fig.svg");
    let o = seaweed(&["render", "2|4/1|2|3", "-o", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let svg = std::fs::read_to_string(&path).unwrap();
    assert_eq!(svg.matches("<circle").count(), 6);
    assert_eq!(svg.matches(r#"class="top""#).count(), 3);
    assert_eq!(svg.matches(r#"class="bottom""#).count(), 2);
    let mut reader = quick_xml::Reader::from_str(&svg);
    while reader.read_event().expect("well-formed svg") != quick_xml::events::Event::Eof {}

    let table = dir.path().join("t.csv");
    let o = seaweed(&["table", "c21", "-o", table.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(std::fs::read_to_string(&table)
        .unwrap()
        .starts_with("n,k,count\n2,0,1\n"));

    let missing = dir.path().join("no/such/dir/out.csv");
    assert_eq!(
        seaweed(&["table", "c21", "-o", missing.to_str().unwrap()])
            .status
            .code(),
        Some(4)
    );
    assert_eq!(
        seaweed(&["render", "1/1", "-o", missing.to_str().unwrap()])
            .status
            .code(),
        Some(4)
    );
    assert_eq!(
        seaweed(&["identities", "-o", missing.to_str().unwrap()])
            .status
            .code(),
        Some(4)
    );
}

#[test]
fn render_single_dot_and_arc_counts() {
    let svg = stdout(&seaweed(&["render", "1/1"]));
    assert_eq!(svg.matches("<circle").count(), 1);
    assert!(!svg.contains("<path"));
    let svg = stdout(&seaweed(&["render", "15/2|5|1|5|2"]));
    assert_eq!(svg.matches("<circle").count(), 15);
    assert_eq!(svg.matches(r#"class="top""#).count(), 7);
    assert_eq!(svg.matches(r#"class="bottom""#).count(), 6);
}

#[test]
fn verify_suites_pass() {
    for suite in ["recursion", "gcd", "gf"] {
        let o = seaweed(&["verify", suite]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        let s = stdout(&o);
        assert!(s.starts_with(&format!("suite {suite}\n")));
        assert!(!s.contains("FAIL"));
    }
}

#[test]
fn identities_report() {
    let o = seaweed(&["identities"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert_eq!(s.lines().count(), 31);
    assert!(s
        .lines()
        .nth(3)
        .unwrap()
        .starts_with("3,8,8,true,6,4,false,6,true"));
    assert!(stderr(&o).contains("(as printed): first differs at n=2"));
}

#[test]
fn series_of_builtins_and_literals() {
    let s = stdout(&seaweed(&["series", "diag2", "--upto", "4"]));
    assert_eq!(
        s,
        "# (2x^2 - 2x^3)/(1 - 4x + 4x^2)\nn,coefficient\n0,0\n1,0\n2,2\n3,6\n4,16\n"
    );
    let s = stdout(&seaweed(&["series", "(1)/(1 - x - x^2)", "--upto", "6"]));
    assert!(s.ends_with("5,8\n6,13\n"));
}
