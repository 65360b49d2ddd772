//! Command-line front end: `translate`, `table` and `lint`.
//!
//! Exit codes: 0 on success, 1 when any input line fails or lint finds
//! something, 2 when the lexicon cannot be loaded or is missing lemmas.

use std::io::{self, BufRead, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::lexicon::{lint_lexicon, Lexicon};
use crate::realizer::{convert_attribute_np, EnglishNP, Role};
use crate::table::render_tables;
use crate::translate;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FINDINGS: i32 = 1;
pub const EXIT_LOAD: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "josushi",
    version,
    about = "Translate Japanese numeral-classifier phrases into English"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Translate one phrase per stdin line.
    Translate(TranslateArgs),
    /// Print the countability-by-classifier tables.
    Table(LexiconArgs),
    /// Report lexicon warnings.
    Lint(LexiconArgs),
}

#[derive(Debug, Args)]
pub struct LexiconArgs {
    /// Lexicon JSON document.
    #[arg(long, value_name = "PATH")]
    pub lexicon: PathBuf,
}

#[derive(Debug, Args)]
pub struct TranslateArgs {
    #[command(flatten)]
    pub lexicon: LexiconArgs,
    /// Append the default verb agreement (sg|pl).
    #[arg(long)]
    pub agreement: bool,
    /// Append the transfer decisions as key=value pairs.
    #[arg(long)]
    pub explain: bool,
    /// Role for measured-attribute phrases.
    #[arg(long, value_enum, default_value_t = Role::Referential)]
    pub role: Role,
}

/// Outcome of one input line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranslationRecord {
    pub input: String,
    pub output: Result<EnglishNP, String>,
    pub trace: Option<String>,
}

impl TranslationRecord {
    pub fn new(input: &str, lex: &Lexicon, role: Role, explain: bool) -> Self {
        match translate(input, lex) {
            Ok(t) => {
                let trace = explain.then(|| t.explain());
                let mut english = t.english;
                if english.measured.is_some() {
                    if let Ok(surface) = convert_attribute_np(&english, role) {
                        english.surface = surface;
                    }
                }
                TranslationRecord {
                    input: input.to_owned(),
                    output: Ok(english),
                    trace,
                }
            }
            Err(e) => TranslationRecord {
                input: input.to_owned(),
                output: Err(e.to_string()),
                trace: None,
            },
        }
    }
}

fn load(args: &LexiconArgs, err: &mut dyn Write) -> Option<Lexicon> {
    let loaded = std::fs::read(&args.lexicon)
        .map_err(crate::lexicon::LexiconError::from)
        .and_then(|bytes| Lexicon::from_slice(&bytes));
    match loaded {
        Ok(lex) => Some(lex),
        Err(e) => {
            let _ = writeln!(err, "error: {}: {e}", args.lexicon.display());
            None
        }
    }
}

pub fn cmd_translate(
    args: &TranslateArgs,
    input: impl BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<i32> {
    let Some(lex) = load(&args.lexicon, err) else {
        return Ok(EXIT_LOAD);
    };
    let mut code = EXIT_OK;
    for (idx, line) in input.lines().enumerate() {
        let line = line?;
        let line = line.strip_suffix('\r').unwrap_or(&line);
        let record = TranslationRecord::new(line, &lex, args.role, args.explain);
        match &record.output {
            Ok(english) => {
                let mut row = english.surface.clone();
                if args.agreement {
                    row.push('\t');
                    row.push_str(english.agreement.short());
                }
                if let Some(trace) = &record.trace {
                    row.push('\t');
                    row.push_str(trace);
                }
                writeln!(out, "{row}")?;
            }
            Err(msg) => {
                code = EXIT_FINDINGS;
                writeln!(out, "ERROR")?;
                writeln!(err, "line {}: {msg}", idx + 1)?;
            }
        }
    }
    Ok(code)
}

pub fn cmd_table(args: &LexiconArgs, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<i32> {
    let Some(lex) = load(args, err) else {
        return Ok(EXIT_LOAD);
    };
    match render_tables(&lex) {
        Ok(text) => {
            out.write_all(text.as_bytes())?;
            Ok(EXIT_OK)
        }
        Err(e) => {
            let what = if e.is_missing_lemma() {
                "lexicon lacks a reference lemma"
            } else {
                "cannot render table"
            };
            writeln!(err, "error: {what}: {e}")?;
            Ok(EXIT_LOAD)
        }
    }
}

pub fn cmd_lint(args: &LexiconArgs, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<i32> {
    let Some(lex) = load(args, err) else {
        return Ok(EXIT_LOAD);
    };
    let diags = lint_lexicon(&lex);
    for d in &diags {
        writeln!(out, "{d}")?;
    }
    Ok(if diags.is_empty() {
        EXIT_OK
    } else {
        EXIT_FINDINGS
    })
}

pub fn run(cli: &Cli) -> i32 {
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let mut err = io::stderr();
    let result = match &cli.command {
        Command::Translate(args) => cmd_translate(args, io::stdin().lock(), &mut out, &mut err),
        Command::Table(args) => cmd_table(args, &mut out, &mut err),
        Command::Lint(args) => cmd_lint(args, &mut out, &mut err),
    };
    match result.and_then(|code| out.flush().map(|_| code)) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_LOAD
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_support::REFERENCE_LEXICON;

    fn lexicon_file(bytes: &[u8]) -> (tempfile::NamedTempFile, LexiconArgs) {
        let mut file = tempfile::NamedTempFile::new().unwrap();
        file.write_all(bytes).unwrap();
        let args = LexiconArgs {
            lexicon: file.path().to_path_buf(),
        };
        (file, args)
    }

    fn translate_lines(
        input: &str,
        agreement: bool,
        explain: bool,
        role: Role,
    ) -> (i32, String, String) {
        let (_tmp, lexicon) = lexicon_file(REFERENCE_LEXICON);
        let args = TranslateArgs {
            lexicon,
            agreement,
            explain,
            role,
        };
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = cmd_translate(&args, input.as_bytes(), &mut out, &mut err).unwrap();
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn translate_ok() {
        let (code, out, err) = translate_lines("1 tsu no kagu\n", false, false, Role::Referential);
        assert_eq!(
            (code, out.as_str(), err.as_str()),
            (0, "1 piece of furniture\n", "")
        );
    }

    #[test]
    fn translate_agreement_column() {
        let (code, out, _) = translate_lines(
            "2 kg no kami\n2 hako no kami\n",
            true,
            false,
            Role::Referential,
        );
        assert_eq!(code, 0);
        assert_eq!(out, "2 kg of paper\tsg\n2 boxes of paper\tpl\n");
    }

    #[test]
    fn translate_error_line() {
        let (code, out, err) = translate_lines(
            "1 kire no hasami\n1 hiki no inu\n",
            false,
            false,
            Role::Referential,
        );
        assert_eq!(code, 1);
        assert_eq!(out, "ERROR\n1 dog\n");
        assert!(err.starts_with("line 1: NoRealization"), "{err}");
    }

    #[test]
    fn translate_role_only_touches_attribute_phrases() {
        let (_, out, _) = translate_lines(
            "10 m no takasa\n1 hiki no inu\n1 pai no nedan\n",
            false,
            false,
            Role::Ascriptive,
        );
        assert_eq!(out, "10m high\n1 dog\nthe price of 1 cup\n");
    }

    #[test]
    fn translate_crlf_and_explain() {
        let (_, out, _) = translate_lines("1 hiki no inu\r\n", true, true, Role::Referential);
        let cols: Vec<&str> = out.trim_end().split('\t').collect();
        assert_eq!(cols.len(), 3);
        assert_eq!(cols[0], "1 dog");
        assert_eq!(cols[1], "sg");
        assert!(cols[2].starts_with("pattern=XCnoN;"));
    }

    #[test]
    fn missing_lexicon_is_exit_2() {
        let args = TranslateArgs {
            lexicon: LexiconArgs {
                lexicon: "/nonexistent/lexicon.json".into(),
            },
            agreement: false,
            explain: false,
            role: Role::Referential,
        };
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = cmd_translate(&args, &b"1 hiki no inu\n"[..], &mut out, &mut err).unwrap();
        assert_eq!(code, 2);
        assert!(out.is_empty());
    }

    #[test]
    fn lint_codes() {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let (_t, args) = lexicon_file(REFERENCE_LEXICON);
        assert_eq!(cmd_lint(&args, &mut out, &mut err).unwrap(), 0);
        assert!(out.is_empty());

        let (_t, args) = lexicon_file(
            br#"{"nouns":[{"ja":"zubon","en":"trousers","countability":"pluralia_tantum"}],"classifiers":[]}"#,
        );
        assert_eq!(cmd_lint(&args, &mut out, &mut err).unwrap(), 1);
        assert_eq!(String::from_utf8(out.clone()).unwrap().lines().count(), 1);

        let (_t, args) = lexicon_file(b"{ not json");
        assert_eq!(cmd_lint(&args, &mut out, &mut err).unwrap(), 2);
    }

    #[test]
    fn table_needs_reference_lemmas() {
        let (_t, args) = lexicon_file(br#"{"nouns":[],"classifiers":[]}"#);
        let (mut out, mut err) = (Vec::new(), Vec::new());
        assert_eq!(cmd_table(&args, &mut out, &mut err).unwrap(), 2);
        assert!(out.is_empty());
    }
}
