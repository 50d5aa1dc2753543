use std::process::Command;

use dyckstat::cli::{run, Outcome, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

fn dyckstat(args: &str) -> Outcome {
    run(std::iter::once("dyckstat").chain(args.split_whitespace()))
}

fn first_line(o: &Outcome) -> &str {
    o.stdout.lines().next().unwrap_or("")
}

#[test]
fn series_prints_fine_numbers() {
    let o = dyckstat("series --stat peak --k 1 --r 0 --order 6");
    assert_eq!(o.status, EXIT_OK, "{}", o.stderr);
    assert_eq!(o.stdout, "1,0,1,2,6,18,57\n");
}

#[test]
fn count_of_empty_path() {
    let o = dyckstat("count --stat valley --k 0 --r 0 --n 0 --method enum");
    assert_eq!(o.stdout, "1\n");
}

#[test]
fn count_methods_agree() {
    for method in ["enum", "dp", "gf"] {
        let o = dyckstat(&format!("count --stat peak --k 2 --r 1 --n 9 --method {method}"));
        assert_eq!(o.status, EXIT_OK, "{}", o.stderr);
        let dp = dyckstat("count --stat peak --k 2 --r 1 --n 9 --method dp");
        assert_eq!(o.stdout, dp.stdout, "{method}");
    }
}

#[test]
fn psi_exchanges_peak_for_valley() {
    let o = dyckstat("bijection --map psi --k 2 --path UUDD");
    assert_eq!(o.status, EXIT_OK, "{}", o.stderr);
    assert_eq!(first_line(&o), "UDUD");
    assert!(o.stdout.contains("input  UUDD  peaks {2: 1} valleys {} max 2"));
    assert!(o.stdout.contains("image  UDUD  peaks {1: 2} valleys {0: 1} max 1"));
}

#[test]
fn theta_maps() {
    assert_eq!(first_line(&dyckstat("bijection --map theta --path UUDUDD")), "UDUD");
    let o = dyckstat("bijection --map theta --path UDUD");
    assert_eq!(o.status, EXIT_USAGE);
    assert!(o.stderr.contains("valley at height 0"), "{}", o.stderr);
    let o = run(["dyckstat", "bijection", "--map", "theta", "--path", ""]);
    assert_eq!(first_line(&o), "none", "{}", o.stderr);
    assert_eq!(first_line(&dyckstat("bijection --map theta-inverse --path (())")), "UUUDDD");
}

#[test]
fn json_counts_are_strings() {
    let o = dyckstat("count --stat valley --k 3 --r 2 --n 40 --method dp --format json");
    let v: Value = serde_json::from_str(&o.stdout).unwrap();
    assert!(v["count"].is_string());
    assert_eq!(v["n"], 40);
}

#[test]
fn table_csv() {
    let o = dyckstat("table --n-max 3 --k-max 1 --method gf --format csv");
    assert_eq!(o.status, EXIT_OK, "{}", o.stderr);
    assert!(o.stdout.starts_with("n,k,r,kind,count\n"));
    assert!(o.stdout.contains("3,1,0,peak,2\n"));
}

#[test]
fn cfrac_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("uniform.json");
    std::fs::write(&path, r#"{"depth": 8, "default_lambda": "x", "default_mu": "x"}"#).unwrap();
    let o = dyckstat(&format!("cfrac --spec {} --order 6 --z-order 0", path.display()));
    assert_eq!(o.status, EXIT_OK, "{}", o.stderr);
    assert_eq!(o.stdout, "z^0: 1,1,2,5,14,42,132\n");

    std::fs::write(&path, r#"{"depth": 3, "lambdas": ["x"]}"#).unwrap();
    let o = dyckstat(&format!("cfrac --spec {}", path.display()));
    assert_eq!(o.status, EXIT_USAGE);
    assert!(o.stderr.starts_with("error:"), "{}", o.stderr);
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        "",
        "series --stat peak --k 1",
        "series --stat hill --k 1 --r 0",
        "count --stat peak --k 1 --r 0 --n 20 --method enum",
        "bijection --map psi --k 2 --path UDX",
        "bijection --map psi --k 1 --path UD",
        "cfrac --spec /nonexistent/weights.json",
    ] {
        let o = dyckstat(args);
        assert_eq!(o.status, EXIT_USAGE, "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn help_succeeds() {
    let o = dyckstat("--help");
    assert_eq!(o.status, EXIT_OK);
    assert!(o.stdout.contains("verify"));
}

#[test]
fn verify_is_deterministic() {
    let args = "verify --n-max 6 --k-max 3 --r-max 2 --order 10 --z-order 2";
    let a = dyckstat(args);
    let b = dyckstat(args);
    assert_eq!(a.status, EXIT_OK, "{}", a.stdout);
    assert_eq!(a.stdout, b.stdout);
    assert!(a.stdout.contains("WARN height-one-printed-form"));
    assert!(a.stdout.ends_with("fail\n"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_dyckstat");
    let out = Command::new(bin)
        .args(["series", "--stat", "valley", "--k", "0", "--r", "0", "--order", "7"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "1,1,1,2,5,14,42,132\n");
    let out = Command::new(bin).args(["table", "--n-max"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}
