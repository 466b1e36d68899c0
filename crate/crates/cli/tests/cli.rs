use std::process::{Command, Output};

use mirrorcheck_core::{Envelope, VerificationReport};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mirrorcheck"))
        .args(args)
        .env_remove("MIRRORCHECK_CACHE_DIR")
        .output()
        .expect("binary runs")
}

#[test]
fn verify_json_round_trips_byte_for_byte() {
    let out = run(&[
        "verify",
        "-n",
        "2",
        "-a",
        "6",
        "--json",
        "--trust-sector-criterion",
        "--no-cache",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let env: Envelope<VerificationReport> = serde_json::from_str(&text).unwrap();
    assert_eq!(env.schema, 1);
    assert_eq!(env.command, "verify");
    let mut again = serde_json::to_string_pretty(&env).unwrap();
    again.push('\n');
    assert_eq!(again, text);
}

#[test]
fn warm_cache_matches_cold_run() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let args = [
        "verify",
        "-n",
        "2",
        "-a",
        "6",
        "--json",
        "--full",
        "--cache-dir",
        d,
    ];
    let cold = run(&args);
    assert_eq!(cold.status.code(), Some(0));
    assert!(
        std::fs::read_dir(dir.path()).unwrap().count() > 0,
        "cache stays empty"
    );
    let warm = run(&args);
    assert_eq!(warm.stdout, cold.stdout);
    let uncached = run(&[
        "verify",
        "-n",
        "2",
        "-a",
        "6",
        "--json",
        "--full",
        "--no-cache",
    ]);
    assert_eq!(uncached.stdout, cold.stdout);
}

#[test]
fn cache_dir_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_mirrorcheck"))
        .args(["hh", "-n", "2", "-a", "6", "--trust-sector-criterion"])
        .env("MIRRORCHECK_CACHE_DIR", dir.path())
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(std::fs::read_dir(dir.path()).unwrap().count() > 0);
}

#[test]
fn low_degree_is_a_check_failure() {
    let out = run(&[
        "verify",
        "-n",
        "2",
        "-a",
        "5",
        "--trust-sector-criterion",
        "--no-cache",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("bound high-degree"));
    assert!(text.contains("result: FAIL"));
}

#[test]
fn exit_codes() {
    assert_eq!(
        run(&["verify", "-n", "1", "-a", "6", "--no-cache"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        run(&["homs", "-n", "2", "-a", "6", "--from", "0,1,1", "--to", "1,1,1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["homs", "-n", "4", "-a", "12", "--full"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        run(&["bounds", "-n", "2", "-a", "6"]).status.code(),
        Some(0)
    );
    let out = run(&["verify", "-n", "1", "-a", "6", "--json", "--no-cache"]);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["error"]["exit_code"], 2);
}

#[test]
fn subcommands_produce_output() {
    let homs = run(&[
        "homs", "-n", "2", "-a", "6", "--from", "1,1,1", "--to", "2,1,2",
    ]);
    assert!(String::from_utf8(homs.stdout)
        .unwrap()
        .contains("dbar1*dbar3"));
    let koszul = run(&["koszul", "-n", "2", "-a", "6", "--json"]);
    assert!(koszul.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&koszul.stdout).unwrap();
    assert_eq!(doc["result"]["report"]["pass"], true);
    let milnor = run(&[
        "milnor", "-n", "2", "-a", "6", "--fermat", "--global", "--order", "lex",
    ]);
    assert!(String::from_utf8(milnor.stdout).unwrap().contains("625"));
    let milnor = run(&["milnor", "-n", "2", "-a", "6"]);
    assert!(String::from_utf8(milnor.stdout).unwrap().contains("193"));
    let hodge = run(&["hodge", "-n", "3", "-a", "8", "--json"]);
    let doc: serde_json::Value = serde_json::from_slice(&hodge.stdout).unwrap();
    assert_eq!(doc["result"]["report"]["qh_dim"], 2104);
    assert_eq!(
        run(&["homs", "-n", "2", "-a", "4", "--full"]).status.code(),
        Some(0)
    );
}

#[test]
fn sweep_csv_and_budget() {
    let out = run(&[
        "sweep",
        "--n-min",
        "2",
        "--n-max",
        "2",
        "--a-min",
        "6",
        "--a-max",
        "8",
        "--csv",
        "--trust-sector-criterion",
        "--no-cache",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 4);
    assert!(text.starts_with("n,a,hh_even"));

    let out = run(&[
        "sweep",
        "--a-min",
        "6",
        "--a-max",
        "7",
        "--budget-seconds",
        "0",
        "--json",
        "--no-cache",
    ]);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["result"]["truncated"], true);
    assert_eq!(doc["result"]["rows"].as_array().unwrap().len(), 0);
}

#[test]
fn honest_sectors_for_the_threefold() {
    let out = run(&["verify", "-n", "3", "-a", "8", "--json", "--no-cache"]);
    assert_eq!(out.status.code(), Some(0));
    let env: Envelope<VerificationReport> = serde_json::from_slice(&out.stdout).unwrap();
    assert!(!env.result.hh.trusted_sector_criterion);
    assert_eq!((env.result.hh.hh_even, env.result.hh.hh_odd), (4, 2100));
}
