use std::process::{Command, Output};

use horofano::{FamilyKind, Verdict};
use horofano_cli::fixtures::Cell;
use horofano_cli::{commands, run_with, Cli, FixtureSet, ReportRecord, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE};

use clap::Parser;

fn horofano(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_horofano")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn status(out: &Output) -> u8 {
    out.status.code().unwrap() as u8
}

#[test]
fn roots_lists_every_positive_root() {
    for (ty, count) in [("G2", 6), ("B4", 16), ("F4", 24), ("A1xG2", 7), ("C5", 25)] {
        let out = horofano(&["roots", ty]);
        assert_eq!(status(&out), EXIT_OK, "{ty}");
        let text = stdout(&out);
        let rows = text.lines().filter(|l| l.trim_start().starts_with('(')).count();
        assert_eq!(rows, count, "{ty}:\n{text}");
    }
}

#[test]
fn unsupported_types_are_usage_errors() {
    for args in [
        &["roots", "E8"][..],
        &["roots", "D4"],
        &["flag", "F4", "--mark", "5"],
        &["flag", "A1xG2", "--mark", "1"],
        &["dim", "G2", "1,0,0"],
        &["dim", "G2", "-1,0"],
        &["check", "Bn:n=2"],
        &["table", "--format", "xml"],
        &["verify", "--max-n", "2"],
    ] {
        let out = horofano(args);
        assert_eq!(status(&out), EXIT_USAGE, "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn node_errors_name_the_token_and_range() {
    let out = horofano(&["flag", "F4", "--mark", "5"]);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("`5`") && err.contains("1..=4"), "{err}");
}

#[test]
fn flag_examples() {
    let text = stdout(&horofano(&["flag", "F4", "--mark", "1"]));
    assert!(text.contains("15") && text.contains("8"), "{text}");
    let text = stdout(&horofano(&["flag", "F4", "--mark", "1,3"]));
    assert!(text.contains("22") && text.contains("3ω1 + 5ω3"), "{text}");
    let text = stdout(&horofano(&["flag", "B3", "--mark", "1,2,3"]));
    assert!(text.contains("2ρ"), "{text}");
    let text = stdout(&horofano(&["flag", "A1xG2", "--mark", "1.1,2.1,2.2"]));
    assert!(text.contains("2ρ") && text.contains("7"), "{text}");
}

#[test]
fn dim_examples() {
    for (ty, w, d) in [("C3", "1,0,0", "6"), ("G2", "1,0", "7"), ("B3", "0,0,1", "8"), ("G2", "0,1", "14")] {
        let out = horofano(&["dim", ty, w]);
        assert_eq!(status(&out), EXIT_OK);
        assert_eq!(stdout(&out).trim(), d, "{ty} {w}");
    }
}

#[test]
fn table_is_deterministic() {
    for fmt in ["md", "csv", "json"] {
        let a = horofano(&["table", "--max-n", "20", "--format", fmt]);
        let b = horofano(&["table", "--max-n", "20", "--format", fmt]);
        assert_eq!(status(&a), EXIT_OK);
        assert_eq!(a.stdout, b.stdout, "{fmt}");
    }
}

#[test]
fn json_table_round_trips() {
    let text = stdout(&horofano(&["table", "--max-n", "12", "--format", "json"]));
    let parsed: Vec<ReportRecord> = serde_json::from_str(&text).unwrap();
    let expected = commands::records(12).unwrap();
    assert_eq!(parsed, expected);
    assert_eq!(parsed.len(), 81);
    for r in &parsed {
        let (mu_f, mu_theta) = r.slopes().unwrap();
        assert_eq!(Verdict::from_slopes(&mu_f, &mu_theta), r.parsed_verdict().unwrap(), "{}", r.id);
    }
}

#[test]
fn csv_table_round_trips() {
    let text = stdout(&horofano(&["table", "--max-n", "12", "--format", "csv"]));
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let parsed: Vec<ReportRecord> = reader.deserialize().collect::<Result<_, _>>().unwrap();
    assert_eq!(parsed, commands::records(12).unwrap());
}

#[test]
fn csv_examples() {
    let text = stdout(&horofano(&["table", "--max-n", "3", "--format", "csv"]));
    assert_eq!(text.lines().count(), 10);
    assert!(text.lines().any(|l| l.starts_with("F4horo,") && l.ends_with(",1/3,6/23,Unstable")));
    assert!(text.lines().any(|l| l.starts_with("G2horo,") && l.ends_with(",1/2,4/7,Stable")));
}

#[test]
fn check_reports_one_triple() {
    let out = horofano(&["check", "PasF4", "--format", "json"]);
    assert_eq!(status(&out), EXIT_OK);
    let r: ReportRecord = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!((r.dim_x, r.r_x, r.rank_f, r.c1_f), (23, 8, 8, 0));
    assert_eq!(r.verdict, "Stable");
}

#[test]
fn verify_passes_on_the_embedded_fixtures() {
    let out = horofano(&["verify"]);
    assert_eq!(status(&out), EXIT_OK);
    let text = stdout(&out);
    assert!(text.contains("bl_h_num: PASS, cf_num: PASS, cf: PASS, stab: PASS"), "{text}");
}

#[test]
fn corrupted_fixture_fails_and_names_the_cell() {
    let mut fixtures = FixtureSet::embedded();
    let table = fixtures.table_mut("cf").unwrap();
    assert!(table.set(FamilyKind::PasF4, "rank_f", |_, _| Cell::Int(9)));
    let cli = Cli::parse_from(["horofano", "verify"]);
    let out = run_with(&cli, &fixtures);
    assert_eq!(out.status, EXIT_MISMATCH);
    assert!(out.stdout.contains("cf: FAIL"), "{}", out.stdout);
    assert!(
        out.stdout.contains("cf: row PasF4, column rank_f: expected 9, actual 8"),
        "{}",
        out.stdout
    );
}
