use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn reference_lexicon() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data/reference_lexicon.json")
}

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_josushi"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn lex_arg() -> String {
    reference_lexicon().to_str().unwrap().to_owned()
}

#[test]
fn table_matches_golden() {
    let out = run(&["table", "--lexicon", &lex_arg()], "");
    assert_eq!(out.status.code(), Some(0));
    let golden = std::fs::read_to_string(fixture("tables.tsv")).unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), golden);
}

#[test]
fn translate_matches_golden() {
    let input = std::fs::read_to_string(fixture("examples.in")).unwrap();
    let expected = std::fs::read_to_string(fixture("examples.out")).unwrap();
    let out = run(
        &["translate", "--lexicon", &lex_arg(), "--agreement"],
        &input,
    );
    assert_eq!(out.status.code(), Some(1));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert_eq!(stdout, expected);
    assert_eq!(stdout.lines().count(), input.lines().count());

    let stderr = String::from_utf8(out.stderr).unwrap();
    let errs: Vec<&str> = stderr.lines().collect();
    assert_eq!(errs.len(), 3, "{stderr}");
    assert!(errs[0].starts_with("line 22: NoRealization"));
    assert!(errs[1].starts_with("line 23: ") && errs[1].contains("hiki"));
    assert!(errs[2].starts_with("line 24: ") && errs[2].contains("'neko'"));
}

#[test]
fn translate_clean_input_exits_zero() {
    let out = run(&["translate", "--lexicon", &lex_arg()], "1 tsu no kagu\n");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(out.stdout, b"1 piece of furniture\n");
    assert!(out.stderr.is_empty());
}

#[test]
fn translate_roles() {
    let input = "10 m no takasa\n10 en no nedan\n";
    for (role, expected) in [
        ("referential", "a height of 10m\na price of 10 yen\n"),
        ("ascriptive", "10m high\n10 yen in price\n"),
        ("premodifier", "10m high\n10 yen in price\n"),
    ] {
        let out = run(
            &["translate", "--lexicon", &lex_arg(), "--role", role],
            input,
        );
        assert_eq!(String::from_utf8(out.stdout).unwrap(), expected, "{role}");
    }
}

#[test]
fn lint_exit_codes() {
    let out = run(&["lint", "--lexicon", &lex_arg()], "");
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());

    let dir = tempfile::tempdir().unwrap();
    let dead_end = dir.path().join("dead_end.json");
    std::fs::write(
        &dead_end,
        r#"{"nouns":[{"ja":"zubon","en":"trousers","countability":"pluralia_tantum"}],"classifiers":[]}"#,
    )
    .unwrap();
    let out = run(&["lint", "--lexicon", dead_end.to_str().unwrap()], "");
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 1);

    let broken = dir.path().join("broken.json");
    std::fs::write(&broken, "{\"nouns\": [").unwrap();
    for sub in ["lint", "table", "translate"] {
        let out = run(
            &[sub, "--lexicon", broken.to_str().unwrap()],
            "1 hiki no inu\n",
        );
        assert_eq!(out.status.code(), Some(2), "{sub}");
        assert!(out.stdout.is_empty(), "{sub}");
    }
}

#[test]
fn lexicon_flag_is_required() {
    let out = run(&["translate"], "");
    assert_eq!(out.status.code(), Some(2));
}
