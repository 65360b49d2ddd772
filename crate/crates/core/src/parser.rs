//! Parsing of romanized, space-segmented quantified noun phrases.
//!
//! Two shapes are accepted:
//!
//! ```text
//! num cls no noun      2 hiki no inu
//! noun no cls          pen no hako
//! ```
//!
//! `num` is a decimal numeral without leading zeros, `suu` (some) or
//! `nan` (how many). The shapes differ in token count, so one token of
//! lookahead is enough to pick the rule.

use std::fmt;
use std::num::NonZeroU64;

use thiserror::Error;

use crate::lexicon::{ClassifierEntry, Lexicon, NounEntry};

pub const QUANTIFIER_TOKEN: &str = "suu";
pub const INTERROGATIVE_TOKEN: &str = "nan";
pub const LINKER_TOKEN: &str = "no";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NumeralSpec {
    Count(NonZeroU64),
    Some,
    Interrogative,
}

impl NumeralSpec {
    pub fn count(n: u64) -> Option<Self> {
        NonZeroU64::new(n).map(NumeralSpec::Count)
    }

    /// True for anything that makes the English head plural: a count above
    /// one, "some" or "how many".
    pub fn is_plural(self) -> bool {
        match self {
            NumeralSpec::Count(n) => n.get() > 1,
            NumeralSpec::Some | NumeralSpec::Interrogative => true,
        }
    }
}

impl fmt::Display for NumeralSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NumeralSpec::Count(n) => write!(f, "{n}"),
            NumeralSpec::Some => f.write_str(QUANTIFIER_TOKEN),
            NumeralSpec::Interrogative => f.write_str(INTERROGATIVE_TOKEN),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pattern {
    /// `X C no N`
    XCnoN,
    /// `N no C`
    NnoC,
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Pattern::XCnoN => "XCnoN",
            Pattern::NnoC => "NnoC",
        })
    }
}

/// A parsed source phrase borrowing its entries from the lexicon.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SourceNP<'a> {
    pub pattern: Pattern,
    /// Present exactly when `pattern` is `XCnoN`.
    pub numeral: Option<NumeralSpec>,
    pub classifier: &'a ClassifierEntry,
    pub noun: &'a NounEntry,
}

impl SourceNP<'_> {
    /// Canonical single-spaced token form of the phrase.
    pub fn to_line(&self) -> String {
        match (self.pattern, self.numeral) {
            (Pattern::XCnoN, Some(num)) => {
                format!(
                    "{num} {} {LINKER_TOKEN} {}",
                    self.classifier.ja, self.noun.ja
                )
            }
            _ => format!("{} {LINKER_TOKEN} {}", self.noun.ja, self.classifier.ja),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LemmaKind {
    Noun,
    Classifier,
}

impl fmt::Display for LemmaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LemmaKind::Noun => "nouns",
            LemmaKind::Classifier => "classifiers",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unknown lemma '{token}' (searched {searched})")]
    UnknownLemma { token: String, searched: LemmaKind },
    #[error("'{line}' matches neither `num cls no noun` nor `noun no cls`")]
    PatternMismatch { line: String },
    #[error("'{quantifier}' cannot be used in a `noun no cls` phrase")]
    QuantifierInNnoC { quantifier: String },
    #[error("jōsushi '{classifier}' cannot head a `noun no cls` phrase")]
    JosushiHead { classifier: String },
    #[error("numeral '{token}' is not positive")]
    NonPositiveNumeral { token: String },
    #[error("malformed numeral '{token}'")]
    MalformedNumeral { token: String },
}

fn is_quantifier(tok: &str) -> bool {
    tok == QUANTIFIER_TOKEN || tok == INTERROGATIVE_TOKEN
}

fn looks_numeric(tok: &str) -> bool {
    let digits = tok.strip_prefix('-').unwrap_or(tok);
    !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
}

fn parse_numeral(tok: &str) -> Result<NumeralSpec, ParseError> {
    match tok {
        QUANTIFIER_TOKEN => return Ok(NumeralSpec::Some),
        INTERROGATIVE_TOKEN => return Ok(NumeralSpec::Interrogative),
        _ => {}
    }
    if tok.starts_with('-') || tok.bytes().all(|b| b == b'0') {
        return Err(ParseError::NonPositiveNumeral { token: tok.into() });
    }
    if tok.starts_with('0') {
        return Err(ParseError::MalformedNumeral { token: tok.into() });
    }
    tok.parse::<u64>()
        .ok()
        .and_then(NumeralSpec::count)
        .ok_or_else(|| ParseError::MalformedNumeral { token: tok.into() })
}

fn noun<'a>(lex: &'a Lexicon, tok: &str) -> Result<&'a NounEntry, ParseError> {
    lex.noun(tok).ok_or_else(|| ParseError::UnknownLemma {
        token: tok.into(),
        searched: LemmaKind::Noun,
    })
}

fn classifier<'a>(lex: &'a Lexicon, tok: &str) -> Result<&'a ClassifierEntry, ParseError> {
    lex.classifier(tok).ok_or_else(|| ParseError::UnknownLemma {
        token: tok.into(),
        searched: LemmaKind::Classifier,
    })
}

/// Parses one input line against the lexicon.
pub fn parse_np<'a>(line: &str, lex: &'a Lexicon) -> Result<SourceNP<'a>, ParseError> {
    let tokens: Vec<&str> = line.split(' ').filter(|t| !t.is_empty()).collect();
    let mismatch = || ParseError::PatternMismatch { line: line.into() };
    match tokens.as_slice() {
        [num, cls, LINKER_TOKEN, n] if is_quantifier(num) || looks_numeric(num) => {
            let numeral = parse_numeral(num)?;
            let classifier = classifier(lex, cls)?;
            let noun = noun(lex, n)?;
            Ok(SourceNP {
                pattern: Pattern::XCnoN,
                numeral: Some(numeral),
                classifier,
                noun,
            })
        }
        [q, LINKER_TOKEN, _] if is_quantifier(q) => Err(ParseError::QuantifierInNnoC {
            quantifier: (*q).into(),
        }),
        [n, LINKER_TOKEN, cls] => {
            let noun = noun(lex, n)?;
            let classifier = classifier(lex, cls)?;
            if !classifier.pos.can_head_np() {
                return Err(ParseError::JosushiHead {
                    classifier: classifier.ja.clone(),
                });
            }
            Ok(SourceNP {
                pattern: Pattern::NnoC,
                numeral: None,
                classifier,
                noun,
            })
        }
        _ => Err(mismatch()),
    }
}
