//! Black-box tests of the `ccx` binary: exit codes, stdout/stderr
//! discipline, and the documented behaviors of every subcommand.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use ccx::testing::{chat_completion, MockServer};

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_ccx"));
    cmd.current_dir(workspace_root());
    cmd.env_remove("CCX_API_KEY");
    cmd
}

fn workspace_root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..").canonicalize().unwrap()
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).unwrap()
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("process exited")
}

#[test]
fn query_file_answers_yes() {
    let output = run(&[
        "query",
        "--policy",
        "fixtures/o1/policy.pl",
        "--query",
        "fixtures/o1/queries/q7.pl",
    ]);
    assert_eq!(stdout(&output), "yes\n");
    assert_eq!(code(&output), 0);
}

#[test]
fn query_goal_answers_no_outside_the_policy_term() {
    let output = run(&[
        "query",
        "--policy",
        "fixtures/o1/policy.pl",
        "--goal",
        "claim_covered(400, 0, 0, sickness, 30)",
    ]);
    assert_eq!(stdout(&output), "no\n");
    assert_eq!(code(&output), 0);
}

#[test]
fn query_reports_parse_errors_with_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.pl");
    std::fs::write(&path, "p :- (").unwrap();
    let output = run(&["query", "--policy", path.to_str().unwrap(), "--goal", "p"]);
    assert_eq!(stdout(&output), "error(parse)\n");
    assert_eq!(code(&output), 1);
    // The diagnostic explaining the outcome goes to stderr.
    assert!(stderr(&output).contains("line 1"), "{}", stderr(&output));
}

#[test]
fn query_undefined_goal_is_an_existence_error() {
    let output = run(&[
        "query",
        "--policy",
        "fixtures/o1/policy.pl",
        "--goal",
        "no_such_predicate(1)",
    ]);
    assert_eq!(stdout(&output), "error(existence)\n");
    assert_eq!(code(&output), 1);
}

#[test]
fn validate_clean_and_dirty_policies() {
    let output = run(&["validate", "--policy", "fixtures/o1/policy.pl"]);
    assert_eq!(stdout(&output), "no findings\n");
    assert_eq!(code(&output), 0);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("dirty.pl");
    std::fs::write(&path, "p :- q.\n").unwrap();
    let output = run(&["validate", "--policy", path.to_str().unwrap()]);
    assert_eq!(code(&output), 2);
    assert!(stdout(&output).contains("q/0"), "{}", stdout(&output));
}

#[test]
fn graph_output_is_deterministic_dot() {
    let first = run(&["graph", "--policy", "fixtures/o1/policy.pl"]);
    let second = run(&["graph", "--policy", "fixtures/o1/policy.pl"]);
    assert_eq!(code(&first), 0);
    assert_eq!(stdout(&first), stdout(&second));
    let dot = stdout(&first);
    assert!(dot.starts_with("digraph"), "{dot}");
    assert!(dot.contains("\"claim_covered/5\" [shape=box]"), "{dot}");
    assert!(dot.contains("style=dashed"), "{dot}");
}

#[test]
fn bench_replays_both_fixture_sets() {
    let output = run(&["bench", "--replay", "fixtures/o1"]);
    assert_eq!(code(&output), 0);
    assert!(stdout(&output).contains("9 | mean 9.0"), "{}", stdout(&output));

    let output = run(&["bench", "--replay", "fixtures/4o"]);
    assert_eq!(code(&output), 0);
    assert!(stdout(&output).contains("7 | mean 7.0"), "{}", stdout(&output));
}

#[test]
fn bench_writes_result_files_when_asked() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("run");
    let output = run(&["bench", "--replay", "fixtures/o1", "--out", out.to_str().unwrap()]);
    assert_eq!(code(&output), 0);
    let summary = std::fs::read_to_string(out.join("summary.json")).unwrap();
    let value: serde_json::Value = serde_json::from_str(&summary).unwrap();
    assert_eq!(value["mean"], 9.0);
    assert!(out.join("scores.csv").is_file());
}

#[test]
fn bench_rejects_zero_trials_as_usage() {
    let output = run(&["bench", "--replay", "fixtures/o1", "--trials", "0"]);
    assert_eq!(code(&output), 64);
}

#[test]
fn usage_errors_exit_64_and_help_exits_0() {
    assert_eq!(code(&run(&[])), 64);
    assert_eq!(code(&run(&["query", "--policy", "x"])), 64); // neither --query nor --goal
    assert_eq!(code(&run(&["bench"])), 64); // neither --replay nor --model
    assert_eq!(code(&run(&["--help"])), 0);
    assert_eq!(code(&run(&["graph", "--policy", "x", "--format", "svg"])), 64);
}

#[test]
fn limits_flag_caps_the_search() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("loop.pl");
    std::fs::write(&path, "p :- p.\n").unwrap();
    let output = run(&[
        "query",
        "--policy",
        path.to_str().unwrap(),
        "--goal",
        "p",
        "--limits",
        "100",
    ]);
    assert_eq!(stdout(&output), "error(resource_limit)\n");
    assert_eq!(code(&output), 1);

    let output = run(&["query", "--policy", path.to_str().unwrap(), "--goal", "p", "--limits", "oops"]);
    assert_eq!(code(&output), 64);
}

#[test]
fn encode_writes_validates_and_reports() {
    // A mock endpoint returning the reference encoding: exit 0, file parses.
    let policy = std::fs::read_to_string(workspace_root().join("fixtures/o1/policy.pl")).unwrap();
    let server = MockServer::start(vec![chat_completion(&format!("```prolog\n{policy}```"))]).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("encoding.pl");
    let output = bin()
        .args([
            "encode",
            "--contract",
            "fixtures/contract/simplified_policy.txt",
            "--model",
            "mock-model",
            "--base-url",
            &server.base_url(),
            "--out",
            out.to_str().unwrap(),
        ])
        .env("CCX_API_KEY", "test-key")
        .output()
        .unwrap();
    assert_eq!(code(&output), 0, "stderr: {}", stderr(&output));
    let written = std::fs::read_to_string(&out).unwrap();
    assert!(written.contains("claim_covered"), "{written}");
    assert!(stderr(&output).contains("no findings"), "{}", stderr(&output));

    // A mock returning an encoding with an undefined predicate: exit 2.
    let server = MockServer::start(vec![chat_completion("p :- q.")]).unwrap();
    let output = bin()
        .args([
            "encode",
            "--contract",
            "fixtures/contract/simplified_policy.txt",
            "--model",
            "mock-model",
            "--base-url",
            &server.base_url(),
        ])
        .env("CCX_API_KEY", "test-key")
        .output()
        .unwrap();
    assert_eq!(code(&output), 2, "stderr: {}", stderr(&output));
    assert_eq!(stdout(&output), "p :- q.\n");
    assert!(stderr(&output).contains("q/0"), "{}", stderr(&output));
}

#[test]
fn encode_without_api_key_fails_cleanly() {
    let output = run(&[
        "encode",
        "--contract",
        "fixtures/contract/simplified_policy.txt",
        "--model",
        "mock-model",
    ]);
    assert_eq!(code(&output), 1);
    assert!(stderr(&output).contains("CCX_API_KEY"), "{}", stderr(&output));
}

#[test]
fn encode_with_unreadable_contract_names_the_path() {
    let output = run(&["encode", "--contract", "no/such/file.txt", "--model", "m"]);
    assert_eq!(code(&output), 1);
    assert!(stderr(&output).contains("no/such/file.txt"), "{}", stderr(&output));
}

#[test]
fn config_file_supplies_endpoint_settings() {
    let policy = std::fs::read_to_string(workspace_root().join("fixtures/o1/policy.pl")).unwrap();
    let server = MockServer::start(vec![chat_completion(&policy)]).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("ccx.toml");
    std::fs::write(
        &config,
        format!(
            "base_url = \"{}\"\nmodel = \"file-model\"\napi_key = \"file-key\"\n",
            server.base_url()
        ),
    )
    .unwrap();
    let output = bin()
        .args([
            "encode",
            "--contract",
            "fixtures/contract/simplified_policy.txt",
            "--config",
            config.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(code(&output), 0, "stderr: {}", stderr(&output));
    let requests = server.requests();
    assert_eq!(requests[0].authorization.as_deref(), Some("Bearer file-key"));
    assert_eq!(requests[0].body["model"], "file-model");
}

#[test]
fn repl_answers_goals_and_recovers_from_garbage() {
    let mut child = bin()
        .args(["repl", "--policy", "fixtures/o1/policy.pl"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(b"claim_covered(150, 0, 0, sickness, 65).\ngarbage((\nX is 2 + 3.\n:quit\n")
        .unwrap();
    let output = child.wait_with_output().unwrap();
    assert_eq!(code(&output), 0);
    let out = stdout(&output);
    assert_eq!(out, "yes\nyes: X = 5\n");
    assert!(stderr(&output).contains("parse error"), "{}", stderr(&output));
}

#[test]
fn repl_exits_cleanly_on_eof() {
    let mut child = bin()
        .args(["repl", "--policy", "fixtures/o1/policy.pl"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    drop(child.stdin.take());
    let output = child.wait_with_output().unwrap();
    assert_eq!(code(&output), 0);
}

#[test]
fn repl_graph_command_prints_dot() {
    let mut child = bin()
        .args(["repl", "--policy", "fixtures/o1/policy.pl"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.as_mut().unwrap().write_all(b":graph\n:quit\n").unwrap();
    let output = child.wait_with_output().unwrap();
    assert_eq!(code(&output), 0);
    assert!(stdout(&output).starts_with("digraph"), "{}", stdout(&output));
}
