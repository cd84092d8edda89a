use std::path::Path;
use std::process::Command;

use clap::Parser;
use lrc_cli::formats::CodeJson;
use lrc_cli::manifest::sha256_hex;
use lrc_cli::verify::{check, Property};
use lrc_cli::{run, Cli, CliError};
use lrc_core::construct_seq::moore_code;
use lrc_core::verify::{ModeRequest, VerifyOptions};
use serde_json::Value;

fn lrc(args: &[&str]) -> Result<lrc_cli::Outcome, CliError> {
    let argv: Vec<String> = std::iter::once("lrc").chain(args.iter().copied()).map(String::from).collect();
    run(&Cli::try_parse_from(&argv).expect("arguments parse"), &argv)
}

fn bin(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_lrc")).args(args).output().expect("binary runs")
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn written_code_verifies_like_the_in_memory_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("petersen.json");
    lrc(&["construct", "moore", "--r", "2", "--t", "4", "--out", s(&path)]).unwrap();
    let read = serde_json::from_str::<CodeJson>(&std::fs::read_to_string(&path).unwrap()).unwrap().to_code().unwrap();
    let mem = moore_code(2, 4).unwrap();
    assert_eq!(read.parity_check(), mem.parity_check());
    for t in [4, 5] {
        let opts = VerifyOptions { mode: ModeRequest::Exhaustive, budget: 1_000_000 };
        let want = check(&mem, Property::Seq, Some(2), Some(t), opts, 1).unwrap().passed();
        let ts = t.to_string();
        let out = lrc(&["verify", "seq", "--code", s(&path), "--t", &ts, "--mode", "exhaustive"]).unwrap();
        assert_eq!(out.exit == 0, want, "t = {t}");
    }
}

#[test]
fn jobs_do_not_change_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.json");
    lrc(&["construct", "mr-r12", "--m", "3", "--r", "2", "--out", s(&path)]).unwrap();
    let one = lrc(&["verify", "pmds", "--code", s(&path), "--mode", "exhaustive"]).unwrap();
    let four = lrc(&["verify", "pmds", "--code", s(&path), "--mode", "exhaustive", "--jobs", "4"]).unwrap();
    assert_eq!(one.exit, 0);
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn exit_codes_and_error_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.json");
    assert!(bin(&["construct", "moore", "--r", "2", "--t", "4", "--out", s(&path)]).status.success());

    let fail = bin(&["verify", "seq", "--code", s(&path), "--t", "5"]);
    assert_eq!(fail.status.code(), Some(1));
    let rep: Value = serde_json::from_slice(&fail.stdout).unwrap();
    assert_eq!(rep["verdict"], "fail");
    assert!(rep["witness"].is_object());

    let missing = bin(&["verify", "seq", "--code", s(&dir.path().join("nope.json"))]);
    assert_eq!(missing.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&missing.stderr).unwrap();
    assert_eq!(err["error"], "io");

    assert_eq!(bin(&["construct", "moore", "--r", "two"]).status.code(), Some(2));

    let over = bin(&["verify", "seq", "--code", s(&path), "--t", "4", "--mode", "exhaustive", "--budget", "10"]);
    assert_eq!(over.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&over.stderr).unwrap();
    assert_eq!(err["error"], "budget");
}

#[test]
fn unknown_fields_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.json");
    lrc(&["construct", "steiner", "--s", "3", "--out", s(&path)]).unwrap();
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    v["colour"] = Value::from("blue");
    std::fs::write(&path, v.to_string()).unwrap();
    let err = lrc(&["verify", "availability", "--code", s(&path), "--r", "2", "--t", "3"]).unwrap_err();
    assert_eq!(err.kind(), "format");
}

#[test]
fn manifest_records_digests() {
    let dir = tempfile::tempdir().unwrap();
    let code = dir.path().join("c.json");
    let man = dir.path().join("m.json");
    lrc(&["construct", "pg-plane", "--s", "2", "--out", s(&code), "--manifest", s(&man)]).unwrap();
    let m: Value = serde_json::from_str(&std::fs::read_to_string(&man).unwrap()).unwrap();
    assert_eq!(m["schema"], "lrc.manifest/v1");
    assert_eq!(m["exit_code"], 0);
    let digest = sha256_hex(&std::fs::read(&code).unwrap());
    assert_eq!(m["outputs"][0]["sha256"], Value::from(digest));
}

#[test]
fn bound_and_report_outputs() {
    let rate = lrc(&["bound", "seq-rate", "--r", "3", "--t", "5"]).unwrap();
    let v: Value = serde_json::from_str(&rate.stdout).unwrap();
    assert_eq!(v["values"]["rate"], "27/52");

    let table = lrc(&["report", "table-3.1"]).unwrap().stdout;
    assert_eq!(table, "k,r,prior_bound,new_bound,constructed_n\n5,3,9,10,10\n8,4,13,14,14\n");

    let csv = lrc(&["bound", "hamming", "--n", "31", "--r", "4", "--format", "csv"]).unwrap().stdout;
    assert_eq!(csv, "n,r,k_max\n31,4,20\n");
}
