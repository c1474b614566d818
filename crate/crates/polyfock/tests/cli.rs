use std::process::{Command, Output};

fn polyfock(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polyfock")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = polyfock(args);
    assert_eq!(out.status.code(), Some(0), "{:?}: {}", args, String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn act() {
    assert_eq!(
        stdout(&["act", "--p", "3", "--word", "f0", "--start", ""]),
        "{\"p\":3,\"terms\":[{\"coeff\":1,\"partition\":\"1\"}]}\n"
    );
    assert_eq!(
        stdout(&["act", "--p", "2", "--word", "f1 f0", "--start", ""]),
        "{\"p\":2,\"terms\":[{\"coeff\":1,\"partition\":\"2\"},{\"coeff\":1,\"partition\":\"1,1\"}]}\n"
    );
    assert_eq!(
        stdout(&["act", "--p", "3", "--word", "e2", "--start", "2,1"]),
        "{\"p\":3,\"terms\":[{\"coeff\":1,\"partition\":\"2\"}]}\n"
    );
    // f_0^2 s_∅ = 0 at p = 2 but h_0 scales s_(1) by -1
    assert_eq!(stdout(&["act", "--p", "2", "--word", "f0 f0"]), "{\"p\":2,\"terms\":[]}\n");
    assert_eq!(
        stdout(&["act", "--p", "2", "--word", "h0", "--start", "1"]),
        "{\"p\":2,\"terms\":[{\"coeff\":-1,\"partition\":\"1\"}]}\n"
    );
}

#[test]
fn thin_wrappers() {
    assert_eq!(stdout(&["pcore", "--p", "3", "2,1"]), "{\"core\":\"\",\"p_weight\":1}\n");
    assert_eq!(stdout(&["pcore", "--p", "2", "4,1"]), "{\"core\":\"2,1\",\"p_weight\":1}\n");
    assert_eq!(stdout(&["wt", "--p", "3", "2,1"]), "{\"lambda0\":1,\"m\":{\"0\":1,\"1\":1,\"2\":1},\"p\":3}\n");
    let blocks = stdout(&["blocks", "--p", "2", "--d", "6"]);
    assert!(blocks.starts_with("{\"blocks\":[{\"core\":\"\",\"members\":[\"6\",\"5,1\","));
    assert!(blocks.ends_with("{\"core\":\"3,2,1\",\"members\":[\"3,2,1\"],\"p_weight\":0}],\"d\":6,\"p\":2}\n"));
}

#[test]
fn crystal_dot_has_seven_nodes() {
    let dot = stdout(&["crystal", "--p", "2", "--depth", "4", "--format", "dot"]);
    let nodes: Vec<&str> = dot.lines().filter(|l| l.contains("[label=") && !l.contains("->")).collect();
    assert_eq!(nodes.len(), 7);
    assert!(dot.starts_with("digraph crystal {"));
    assert!(dot.contains("n4 [label=\"2,1\"];"));
}

#[test]
fn verify_examples_pass() {
    for args in [
        &["verify", "commutators", "--p", "3", "--max-size", "12"][..],
        &["verify", "hecke", "--n", "1", "--m", "2", "--d", "3", "--field", "q"],
        &["verify", "klesh", "--p", "2", "--d", "10"],
    ] {
        let report: serde_json::Value = serde_json::from_str(&stdout(args)).unwrap();
        let entries = report.as_array().unwrap();
        assert!(!entries.is_empty());
        assert!(entries.iter().all(|e| e["pass"] == true), "{:?}", args);
    }
}

#[test]
fn exit_codes() {
    let bad_word = polyfock(&["act", "--p", "3", "--word", "f0 q2"]);
    assert_eq!(bad_word.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad_word.stderr).contains("position"));
    assert_eq!(polyfock(&["act", "--p", "3", "--word", "f3"]).status.code(), Some(2));
    assert_eq!(polyfock(&["verify", "casimir", "--n", "3", "--d", "6"]).status.code(), Some(2));
    assert_eq!(polyfock(&["verify", "casimir", "--field", "f2"]).status.code(), Some(2));
    assert_eq!(polyfock(&["pcore", "--p", "0", "2,1"]).status.code(), Some(2));
    assert_eq!(polyfock(&["wt", "--p", "3", "1,2"]).status.code(), Some(2));
    assert_eq!(polyfock(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(polyfock(&["--help"]).status.code(), Some(0));
}

#[test]
fn mixed_word() {
    assert_eq!(
        stdout(&["act", "--p", "3", "--word", "d f1 f0 h0 e2", "--start", "3,1"]),
        "{\"p\":3,\"terms\":[{\"coeff\":2,\"partition\":\"5\"},{\"coeff\":2,\"partition\":\"2,2,1\"}]}\n"
    );
}
