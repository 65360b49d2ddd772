//! Translation of Japanese numeral-classifier noun phrases into English.
//!
//! The pipeline has three stages over a shared, immutable [`Lexicon`]:
//!
//! 1. [`parse_np`] reads a romanized `2 hiki no inu` / `pen no hako` line;
//! 2. [`plan`] decides the English construction from the classifier type
//!    and the noun's countability preference;
//! 3. [`realize`] produces the surface string and number features.
//!
//! ```
//! use josushi::{translate, Lexicon};
//!
//! let lex = Lexicon::from_slice(br#"{
//!     "nouns": [{"ja": "kagu", "en": "furniture", "countability": "uncountable"}],
//!     "classifiers": [{"ja": "tsu", "type": "unit_general", "en": "piece"}]
//! }"#).unwrap();
//! let t = translate("3 tsu no kagu", &lex).unwrap();
//! assert_eq!(t.english.surface, "3 pieces of furniture");
//! ```

pub mod cli;
pub mod lexicon;
pub mod parser;
pub mod realizer;
pub mod table;
pub mod transfer;

use std::fmt::Write as _;

use thiserror::Error;

pub use lexicon::{
    lint_lexicon, load_lexicon, ClassifierEntry, ClassifierType, Countability, Diagnostic, Lexicon,
    LexiconError, NounEntry, PartOfSpeech,
};
pub use parser::{parse_np, NumeralSpec, ParseError, Pattern, SourceNP};
pub use realizer::{convert_attribute_np, realize, EnglishNP, NumberFeature, Role};
pub use transfer::{plan, Strategy, TransferError, TransferPlan};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TranslateError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Transfer(#[from] TransferError),
}

/// A successfully translated line with everything that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Translation<'a> {
    pub source: SourceNP<'a>,
    pub plan: TransferPlan,
    pub english: EnglishNP,
}

impl Translation<'_> {
    /// Compact `key=value` trace of the decisions behind the output.
    pub fn explain(&self) -> String {
        let plan = &self.plan;
        let mut out = format!(
            "pattern={};ctype={};countability={};construction={}",
            self.source.pattern,
            plan.classifier_type,
            self.source.noun.countability,
            plan.construction,
        );
        let cls = plan
            .classifier
            .as_ref()
            .map_or("-", |c| c.word.base.as_str());
        let _ = write!(
            out,
            ";classifier={cls};noun={};embedded={};agreement={}",
            plan.noun.word.base, plan.embedded_number, plan.agreement
        );
        if let Some(attr) = &plan.attribute {
            let _ = write!(out, ";attribute={};dimension={}", attr.kind, attr.dimension);
            if attr.unit.is_none() {
                out.push_str(";elided=thing");
            }
        }
        out.push_str(";fallback=");
        if plan.fallback.is_empty() {
            out.push_str("none");
        } else {
            let steps: Vec<String> = plan.fallback.iter().map(ToString::to_string).collect();
            out.push_str(&steps.join(","));
        }
        out
    }
}

/// Parses, plans and realizes one input line.
pub fn translate<'a>(line: &str, lex: &'a Lexicon) -> Result<Translation<'a>, TranslateError> {
    let source = parse_np(line, lex)?;
    let plan = plan(&source)?;
    let english = realize(&source, &plan);
    Ok(Translation {
        source,
        plan,
        english,
    })
}
