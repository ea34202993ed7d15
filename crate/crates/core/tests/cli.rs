use std::io::Write;
use std::process::{Command, Stdio};

fn rexlab(args: &[&str], stdin: &str) -> (i32, String, String) {
    rexlab_env(args, stdin, &[])
}

fn rexlab_env(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> (i32, String, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_rexlab"))
        .args(args)
        .envs(env.iter().copied())
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn ok(args: &[&str], stdin: &str) -> String {
    let (code, out, err) = rexlab(args, stdin);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

#[test]
fn automata_pipe_through_stdin() {
    let nfa = ok(&["--alphabet", "ab", "to-nfa", "(a|b)*a(a|b)"], "");
    assert!(nfa.starts_with("automaton v1\n"));
    let dfa = ok(&["to-dfa", "--minimize", "-"], &nfa);
    assert!(dfa.contains("states: 4\n"), "{dfa}");
    let regex = ok(&["to-regex", "-"], &dfa);
    let (code, out, _) = rexlab(&["--alphabet", "ab", "verify", "--equiv", regex.trim(), "(a|b)*a(a|b)"], "");
    assert_eq!((code, out.as_str()), (0, "equivalent\n"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["--alphabet", "ab", "to-dfa", "--minimize", "(a|b)*a(a|b)(a|b)"][..],
        &["--alphabet", "ab", "complement", "a(a|b)*"],
        &["witness", "--family", "k-dfa", "--n", "3"],
        &["bench", "--family", "m-sore-pair", "--pipeline", "intersect-sore", "--n", "1..3", "--no-time"],
    ] {
        assert_eq!(ok(args, ""), ok(args, ""), "{args:?}");
    }
}

#[test]
fn witness_output_feeds_other_verbs() {
    let k = ok(&["witness", "--family", "k-dfa", "--n", "2"], "");
    let (code, out, _) = rexlab(&["verify", "-", "--accepts", "1$0#0$1#"], &k);
    assert_eq!((code, out.as_str()), (0, "accept\n"));
    let (code, out, _) = rexlab(&["verify", "-", "--accepts", "1$0#0$0#"], &k);
    assert_eq!((code, out.as_str()), (1, "reject\n"));
    let cw = ok(&["witness", "--family", "complement-witness", "--n", "1"], "");
    let complement = ok(&["--alphabet", "0,1,$,#", "complement", "--force-naive", cw.trim()], "");
    let (code, out, _) = rexlab(&["--alphabet", "0,1,$,#", "verify", "--equiv", complement.trim(), "-"], &k);
    assert_eq!((code, out.as_str()), (0, "equivalent\n"));
}

#[test]
fn classify_reports_a_fork() {
    let out = ok(&["classify", "a*a"], "");
    assert_eq!(out, "one-unambiguous: false\nwitness: prefix=ε x=a_1 y=a_2\nsore: false\n");
}

#[test]
fn exit_codes() {
    let (code, _, err) = rexlab(&["parse", "a|("], "");
    assert_eq!(code, 2, "{err}");
    let (code, _, _) = rexlab(&["frobnicate"], "");
    assert_eq!(code, 2);
    let (code, out, _) = rexlab(&["--alphabet", "ab", "verify", "--equiv", "a*", "(a|b)*"], "");
    assert_eq!(code, 1);
    assert_eq!(out, "divergent: b\n");
    let (code, _, err) = rexlab(&["--alphabet", "ab", "--max-states", "3", "to-dfa", "(a|b)*a(a|b)(a|b)"], "");
    assert_eq!(code, 3, "{err}");
    let (code, _, err) = rexlab(&["--alphabet", "ab", "complement", "--force-unambiguous", "a*a"], "");
    assert_eq!(code, 2, "{err}");
}

#[test]
fn time_budget_from_the_environment() {
    let args = ["bench", "--family", "complement-witness", "--pipeline", "complement-naive", "--n", "1..3", "--no-time"];
    let (code, _, err) = rexlab_env(&args, "", &[("REXLAB_BUDGET_MS", "not-a-number")]);
    assert_eq!(code, 2, "{err}");
    let (code, out, _) = rexlab_env(&args, "", &[("REXLAB_BUDGET_MS", "60000")]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().next(), Some("family,n,input_size,output_size,wall_ms"));
}
