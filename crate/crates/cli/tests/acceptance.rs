//! Acceptance criterion 10: consecutive suite runs emit byte-identical JSON
//! reports, and the canonical ordering is independent of the worker count.

use std::process::{Command, Output};

fn leibcap(args: &[&str], threads: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_leibcap"));
    cmd.args(args);
    match threads {
        Some(t) => cmd.env("LEIBCAP_THREADS", t),
        None => cmd.env_remove("LEIBCAP_THREADS"),
    };
    cmd.output().expect("binary runs")
}

#[test]
fn criterion_10_suite_reports_are_byte_identical() {
    let args = ["suite", "--dim-max", "2", "--seed", "17", "--format", "json"];
    let first = leibcap(&args, None);
    let second = leibcap(&args, None);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(second.status.code(), Some(0));
    let ok = first.stdout == second.stdout && !first.stdout.is_empty();
    println!(
        "criterion 10: {} — two consecutive suite runs are byte-identical",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok);

    // worker fan-out must not affect the canonical output
    let threaded = leibcap(&args, Some("4"));
    assert_eq!(threaded.status.code(), Some(0));
    assert_eq!(first.stdout, threaded.stdout);
}
