use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dcoset")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("dcoset-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn complete_prints_the_free_powers_system() {
    let o = run(&["complete", &fixture("free_powers.pres")]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("# status: complete"));
    let rules = text.lines().filter(|l| l.contains("->")).count();
    assert_eq!(rules, 10);
    for r in ["H a a a a -> H A A", "H A A A -> H a a a", "a a a K -> A K", "A A K -> a a K", "H a a K -> H K", "H A K -> H a K"] {
        assert!(text.contains(r), "{r}");
    }
}

#[test]
fn limited_completion_exits_two() {
    let o = run(&["complete", &fixture("trefoil_dc.pres"), "--limit", "10", "--logged"]);
    assert_eq!(o.status.code(), Some(2));
    let text = stdout(&o);
    assert!(text.contains("partial"));
    for r in ["H x -> H", "Y K -> K", "y K -> K", "H y y -> H [b5]", "H Y -> H y [b6]"] {
        assert!(text.contains(r), "{r}");
    }
    assert!(text.contains("b5 = H a5^-1 . b2 x x . b2 x . b2"));
}

#[test]
fn unorientable_rule_is_an_error() {
    let path = temp("bad.pres");
    std::fs::write(&path, "generators: a\nrules: a -> a\n").unwrap();
    let o = run(&["complete", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cannot orient"));
}

#[test]
fn bad_arguments_are_errors() {
    assert_ne!(run(&["complete", &fixture("free_powers.pres"), "--limit", "0"]).status.code(), Some(0));
    assert_eq!(run(&["complete", "/nonexistent.pres"]).status.code(), Some(1));
    assert_eq!(run(&["decide", &fixture("free_powers.pres"), "H a", "id"]).status.code(), Some(1));
    assert_eq!(run(&["decide", &fixture("free_powers.pres"), "q", "id"]).status.code(), Some(1));
}

#[test]
fn decide_reports_verdicts_and_witnesses() {
    let o = run(&["decide", &fixture("free_powers.pres"), "a a", "id"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().take(3).collect::<Vec<_>>(), ["SAME", "H K", "H K"]);

    let o = run(&["decide", &fixture("free_powers.pres"), "a", "id"]);
    assert_eq!(stdout(&o).lines().take(3).collect::<Vec<_>>(), ["DIFFERENT", "H a K", "H K"]);

    let o = run(&["decide", &fixture("free_powers.pres"), "a b", "a b", "--witness"]);
    assert!(stdout(&o).contains("h = id\nk = id"));

    let o = run(&["decide", &fixture("trefoil_dc.pres"), "Y", "id", "--limit", "10", "--witness"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("SAME\nH K\nH K\nh = (x) (x) (x)\nk = (y)^-1"));
}

#[test]
fn undecided_queries_exit_two() {
    // x y and y x are in different double cosets only if the limited system says so; it cannot.
    let o = run(&["decide", &fixture("trefoil_dc.pres"), "y x", "id", "--limit", "10"]);
    let text = stdout(&o);
    assert!(text.starts_with("UNKNOWN"), "{text}");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn acceptor_writes_table_and_dot() {
    let (table, dot) = (temp("e7.table"), temp("e7.dot"));
    let o = run(&[
        "acceptor",
        &fixture("free_powers.pres"),
        "--table",
        table.to_str().unwrap(),
        "--dot",
        dot.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("nfa 22, determinized 24, minimal 15"));
    let written = dcoset::parse_table(&std::fs::read_to_string(&table).unwrap()).unwrap();
    let expected = dcoset::parse_table(dcoset::fixtures::FREE_POWERS_TABLE).unwrap();
    assert!(written.is_isomorphic(&expected));
    assert!(std::fs::read_to_string(&dot).unwrap().starts_with("digraph"));
}

#[test]
fn regex_is_equivalent_to_the_known_trefoil_expression() {
    let o = run(&["regex", &fixture("trefoil.pres"), "--group"]);
    assert_eq!(o.status.code(), Some(0));
    let syms: Vec<String> = ["x", "X", "y", "Y"].map(String::from).to_vec();
    let got = dcoset::Regex::parse(stdout(&o).trim(), &syms).unwrap();
    let want = dcoset::Regex::parse(dcoset::fixtures::TREFOIL_REGEX, &syms).unwrap();
    let a = dcoset::automata::regex_to_dfa(&got, &syms).unwrap();
    let b = dcoset::automata::regex_to_dfa(&want, &syms).unwrap();
    assert!(a.equivalent(&b).unwrap());
}

#[test]
fn enum_lists_s3_representatives() {
    let o = run(&["enum", &fixture("s3.pres"), "--maxlen", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let words: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(words.len(), 2);
    assert!(text.contains("# counts by length: 0 0 1 0 1 0 0"));
}

#[test]
fn enum_with_imported_acceptor() {
    let o = run(&[
        "enum",
        &fixture("triangle.pres"),
        "--import-acceptor",
        &fixture("triangle_group_acceptor.table"),
        "--max-rules",
        "40",
        "--maxlen",
        "5",
        "--counts",
    ]);
    assert!(matches!(o.status.code(), Some(0 | 2)));
    // H K; H a K, H A K; H b A K, H A b K; H A b A K, H A B A K
    assert_eq!(stdout(&o).trim(), "# counts by length: 0 0 1 2 2 2");
}

#[test]
fn verify_passes_on_free_powers() {
    let o = run(&["verify", &fixture("free_powers.pres"), "--maxlen", "10"]);
    let text = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{text}");
    assert!(text.contains("failed 0"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn saved_systems_load_back() {
    let saved = temp("trefoil.sys");
    let o = run(&["complete", &fixture("trefoil.pres")]);
    std::fs::write(&saved, o.stdout).unwrap();
    let o = run(&["reduce", saved.to_str().unwrap(), "X"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "x x Y Y");
}

#[test]
fn reduce_with_log_and_seed() {
    let o = run(&["reduce", &fixture("free_powers.pres"), "H a a a a a a a K", "--logged"]);
    let text = stdout(&o);
    assert_eq!(text.lines().next(), Some("H a K"));
    assert!(text.lines().nth(1).unwrap().starts_with("# "));
    let o = run(&["reduce", &fixture("free_powers.pres"), "H a a a a a a a K", "--seed", "3"]);
    assert_eq!(stdout(&o).trim(), "H a K");
}

#[test]
fn outputs_are_deterministic() {
    for args in [
        vec!["complete".to_string(), fixture("trefoil_dc.pres"), "--limit".into(), "10".into(), "--logged".into()],
        vec!["regex".to_string(), fixture("free_powers.pres")],
        vec!["acceptor".to_string(), fixture("trefoil.pres"), "--group".into()],
        vec!["verify".to_string(), fixture("s3.pres"), "--seed".into(), "5".into()],
    ] {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        assert_eq!(run(&args).stdout, run(&args).stdout, "{args:?}");
    }
}
