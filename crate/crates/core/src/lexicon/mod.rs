//! The bilingual lexicon: noun and classifier entries keyed by romanized lemma.
//!
//! A lexicon is loaded from a single JSON document with two arrays, `nouns`
//! and `classifiers`. The schema is closed: unknown fields, unknown enum
//! strings and missing required fields are load errors. After the document
//! parses, every entry is checked against the cross-field rules in
//! [`validate`] and the result is immutable.

mod lint;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::io::Read;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

pub use lint::{lint_lexicon, Diagnostic};

/// Countability preference of an English noun.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Countability {
    FullyCountable,
    StronglyCountable,
    WeaklyCountable,
    Uncountable,
    PluraliaTantum,
}

impl Countability {
    pub const ALL: [Countability; 5] = [
        Countability::FullyCountable,
        Countability::StronglyCountable,
        Countability::WeaklyCountable,
        Countability::Uncountable,
        Countability::PluraliaTantum,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Countability::FullyCountable => "fully_countable",
            Countability::StronglyCountable => "strongly_countable",
            Countability::WeaklyCountable => "weakly_countable",
            Countability::Uncountable => "uncountable",
            Countability::PluraliaTantum => "pluralia_tantum",
        }
    }
}

impl fmt::Display for Countability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The seven leaves of the classifier taxonomy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassifierType {
    UnitGeneral,
    UnitTypical,
    UnitSpecial,
    MetricMeasure,
    MetricContainer,
    Group,
    Species,
}

impl ClassifierType {
    pub const ALL: [ClassifierType; 7] = [
        ClassifierType::UnitGeneral,
        ClassifierType::UnitTypical,
        ClassifierType::UnitSpecial,
        ClassifierType::MetricMeasure,
        ClassifierType::MetricContainer,
        ClassifierType::Group,
        ClassifierType::Species,
    ];

    pub fn is_unit(self) -> bool {
        matches!(
            self,
            ClassifierType::UnitGeneral | ClassifierType::UnitTypical | ClassifierType::UnitSpecial
        )
    }

    pub fn is_metric(self) -> bool {
        matches!(
            self,
            ClassifierType::MetricMeasure | ClassifierType::MetricContainer
        )
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ClassifierType::UnitGeneral => "unit_general",
            ClassifierType::UnitTypical => "unit_typical",
            ClassifierType::UnitSpecial => "unit_special",
            ClassifierType::MetricMeasure => "metric_measure",
            ClassifierType::MetricContainer => "metric_container",
            ClassifierType::Group => "group",
            ClassifierType::Species => "species",
        }
    }
}

impl fmt::Display for ClassifierType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Japanese part of speech of a classifier lemma.
///
/// A jōsushi cannot head a noun phrase on its own, so only `Noun` and `Both`
/// entries may appear as the head of an `N no C` phrase.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PartOfSpeech {
    #[default]
    #[serde(rename = "josushi")]
    JosushiOnly,
    #[serde(rename = "noun")]
    NounOnly,
    #[serde(rename = "both")]
    Both,
}

impl PartOfSpeech {
    pub fn can_head_np(self) -> bool {
        !matches!(self, PartOfSpeech::JosushiOnly)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AttributeSpec {
    pub dimension: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub adjective: Option<String>,
}

/// Alternative (non plural-only) translation used when a pluralia tantum
/// noun has no default classifier.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AltTranslation {
    pub en: String,
    pub countability: Countability,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub plural: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NounEntry {
    pub ja: String,
    pub en: String,
    pub countability: Countability,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub plural: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub default_classifier: Option<String>,
    #[serde(default, skip_serializing_if = "BTreeSet::is_empty")]
    pub semcats: BTreeSet<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub attribute: Option<AttributeSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alt: Option<AltTranslation>,
}

impl NounEntry {
    /// A bare entry with no optional fields set.
    pub fn new(ja: impl Into<String>, en: impl Into<String>, countability: Countability) -> Self {
        NounEntry {
            ja: ja.into(),
            en: en.into(),
            countability,
            plural: None,
            default_classifier: None,
            semcats: BTreeSet::new(),
            attribute: None,
            alt: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SemcatRule {
    pub semcat: String,
    pub en: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassifierEntry {
    pub ja: String,
    #[serde(rename = "type")]
    pub ctype: ClassifierType,
    #[serde(default)]
    pub pos: PartOfSpeech,
    pub en: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub plural: Option<String>,
    /// Consulted in order before `en`; first rule whose tag the noun carries wins.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub by_semcat: Vec<SemcatRule>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub measures: Option<String>,
    /// Symbol units ("m") attach to the numeral with no space and never pluralize.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub joined: bool,
}

impl ClassifierEntry {
    pub fn new(ja: impl Into<String>, ctype: ClassifierType, en: impl Into<String>) -> Self {
        ClassifierEntry {
            ja: ja.into(),
            ctype,
            pos: PartOfSpeech::JosushiOnly,
            en: en.into(),
            plural: None,
            by_semcat: Vec::new(),
            measures: None,
            joined: false,
        }
    }
}

#[derive(Debug, Error)]
pub enum LexiconError {
    #[error("cannot read lexicon: {0}")]
    Io(#[from] std::io::Error),
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("schema violation in {entry}: {message}")]
    Schema { entry: String, message: String },
    #[error("invalid entry {entry}: {rule}")]
    Invariant { entry: String, rule: String },
}

/// Immutable noun and classifier store. A lemma may be present in both maps.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Lexicon {
    nouns: BTreeMap<String, NounEntry>,
    classifiers: BTreeMap<String, ClassifierEntry>,
}

#[derive(Serialize)]
struct DocumentOut<'a> {
    nouns: Vec<&'a NounEntry>,
    classifiers: Vec<&'a ClassifierEntry>,
}

impl Lexicon {
    /// Builds a lexicon from entries, applying the same checks as loading.
    pub fn from_entries(
        nouns: impl IntoIterator<Item = NounEntry>,
        classifiers: impl IntoIterator<Item = ClassifierEntry>,
    ) -> Result<Self, LexiconError> {
        let mut lex = Lexicon::default();
        for noun in nouns {
            validate::noun(&noun)?;
            if lex.nouns.contains_key(&noun.ja) {
                return Err(duplicate("noun", &noun.ja));
            }
            lex.nouns.insert(noun.ja.clone(), noun);
        }
        for cls in classifiers {
            validate::classifier(&cls)?;
            if lex.classifiers.contains_key(&cls.ja) {
                return Err(duplicate("classifier", &cls.ja));
            }
            lex.classifiers.insert(cls.ja.clone(), cls);
        }
        Ok(lex)
    }

    pub fn from_slice(bytes: &[u8]) -> Result<Self, LexiconError> {
        let doc: Value = serde_json::from_slice(bytes).map_err(|e| LexiconError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        let obj = doc.as_object().ok_or_else(|| LexiconError::Schema {
            entry: "document".into(),
            message: "top level must be an object".into(),
        })?;
        if let Some(extra) = obj.keys().find(|k| *k != "nouns" && *k != "classifiers") {
            return Err(LexiconError::Schema {
                entry: "document".into(),
                message: format!("unknown field `{extra}`"),
            });
        }
        let nouns = entries::<NounEntry>(obj.get("nouns"), "nouns")?;
        let classifiers = entries::<ClassifierEntry>(obj.get("classifiers"), "classifiers")?;
        Lexicon::from_entries(nouns, classifiers)
    }

    pub fn from_reader(mut reader: impl Read) -> Result<Self, LexiconError> {
        let mut buf = Vec::new();
        reader.read_to_end(&mut buf)?;
        Lexicon::from_slice(&buf)
    }

    /// Serializes back to the document format accepted by [`Lexicon::from_slice`].
    pub fn to_json(&self) -> String {
        let doc = DocumentOut {
            nouns: self.nouns.values().collect(),
            classifiers: self.classifiers.values().collect(),
        };
        serde_json::to_string_pretty(&doc).expect("lexicon serialization is infallible")
    }

    pub fn noun(&self, ja: &str) -> Option<&NounEntry> {
        self.nouns.get(ja)
    }

    pub fn classifier(&self, ja: &str) -> Option<&ClassifierEntry> {
        self.classifiers.get(ja)
    }

    pub fn nouns(&self) -> impl Iterator<Item = &NounEntry> {
        self.nouns.values()
    }

    pub fn classifiers(&self) -> impl Iterator<Item = &ClassifierEntry> {
        self.classifiers.values()
    }

    pub fn noun_count(&self) -> usize {
        self.nouns.len()
    }

    pub fn classifier_count(&self) -> usize {
        self.classifiers.len()
    }
}

/// Parses a lexicon document.
pub fn load_lexicon(source: impl Read) -> Result<Lexicon, LexiconError> {
    Lexicon::from_reader(source)
}

fn duplicate(kind: &str, ja: &str) -> LexiconError {
    LexiconError::Invariant {
        entry: format!("{kind} '{ja}'"),
        rule: "duplicate lemma".into(),
    }
}

fn entries<T: serde::de::DeserializeOwned>(
    value: Option<&Value>,
    field: &str,
) -> Result<Vec<T>, LexiconError> {
    let arr = value
        .ok_or_else(|| LexiconError::Schema {
            entry: "document".into(),
            message: format!("missing field `{field}`"),
        })?
        .as_array()
        .ok_or_else(|| LexiconError::Schema {
            entry: "document".into(),
            message: format!("field `{field}` must be an array"),
        })?;
    arr.iter()
        .enumerate()
        .map(|(i, item)| {
            T::deserialize(item).map_err(|e| {
                let key = item.get("ja").and_then(Value::as_str).unwrap_or("?");
                LexiconError::Schema {
                    entry: format!("{field}[{i}] '{key}'"),
                    message: e.to_string(),
                }
            })
        })
        .collect()
}

mod validate {
    use std::collections::HashSet;

    use super::*;

    fn fail(kind: &str, ja: &str, rule: impl Into<String>) -> LexiconError {
        LexiconError::Invariant {
            entry: format!("{kind} '{ja}'"),
            rule: rule.into(),
        }
    }

    fn lemma(kind: &str, ja: &str) -> Result<(), LexiconError> {
        if ja.is_empty() || ja.chars().any(char::is_whitespace) {
            return Err(fail(
                kind,
                ja,
                "lemma must be a non-empty token without whitespace",
            ));
        }
        Ok(())
    }

    fn word(kind: &str, ja: &str, field: &str, value: &str) -> Result<(), LexiconError> {
        if value.trim().is_empty() || value.trim() != value {
            return Err(fail(
                kind,
                ja,
                format!("`{field}` must be non-empty and trimmed"),
            ));
        }
        Ok(())
    }

    pub(super) fn noun(n: &NounEntry) -> Result<(), LexiconError> {
        lemma("noun", &n.ja)?;
        word("noun", &n.ja, "en", &n.en)?;
        for (field, v) in [
            ("plural", &n.plural),
            ("default_classifier", &n.default_classifier),
        ] {
            if let Some(v) = v {
                word("noun", &n.ja, field, v)?;
            }
        }
        if n.countability == Countability::PluraliaTantum && n.plural.is_some() {
            return Err(fail(
                "noun",
                &n.ja,
                "pluralia tantum noun must not carry an explicit plural",
            ));
        }
        if let Some(attr) = &n.attribute {
            if attr.dimension.is_empty() {
                return Err(fail("noun", &n.ja, "attribute dimension must be non-empty"));
            }
            if let Some(adj) = &attr.adjective {
                word("noun", &n.ja, "attribute.adjective", adj)?;
            }
        }
        if let Some(alt) = &n.alt {
            word("noun", &n.ja, "alt.en", &alt.en)?;
            if alt.countability == Countability::PluraliaTantum {
                return Err(fail(
                    "noun",
                    &n.ja,
                    "alt translation must not be pluralia tantum",
                ));
            }
        }
        Ok(())
    }

    pub(super) fn classifier(c: &ClassifierEntry) -> Result<(), LexiconError> {
        lemma("classifier", &c.ja)?;
        word("classifier", &c.ja, "en", &c.en)?;
        if let Some(p) = &c.plural {
            word("classifier", &c.ja, "plural", p)?;
        }
        if c.measures.is_some() && c.ctype != ClassifierType::MetricMeasure {
            return Err(fail(
                "classifier",
                &c.ja,
                "`measures` is only allowed on metric_measure classifiers",
            ));
        }
        if matches!(&c.measures, Some(m) if m.is_empty()) {
            return Err(fail("classifier", &c.ja, "`measures` must be non-empty"));
        }
        if c.joined && c.ctype != ClassifierType::MetricMeasure {
            return Err(fail(
                "classifier",
                &c.ja,
                "`joined` is only allowed on metric_measure classifiers",
            ));
        }
        let mut seen = HashSet::new();
        for rule in &c.by_semcat {
            word("classifier", &c.ja, "by_semcat.en", &rule.en)?;
            if !seen.insert(rule.semcat.as_str()) {
                return Err(fail(
                    "classifier",
                    &c.ja,
                    format!("semcat '{}' appears twice in by_semcat", rule.semcat),
                ));
            }
        }
        Ok(())
    }
}
