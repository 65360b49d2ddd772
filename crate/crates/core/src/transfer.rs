//! Transfer: from a parsed source phrase to a plan for the English phrase.
//!
//! The plan fixes everything the realizer needs to know: which English
//! construction to use, the resolved classifier word, the noun form and the
//! number it takes inside the partitive, and the default verb agreement.
//! The numeral value is never consulted here; only the realizer looks at it.

use std::fmt;

use thiserror::Error;

use crate::lexicon::{ClassifierEntry, ClassifierType, Countability, NounEntry};
use crate::parser::SourceNP;

/// How a unit classifier phrase is rendered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// `X N`: the classifier is dropped.
    Individuate,
    /// `X C of N` with the classifier's own translation.
    Part,
    /// `X C of N` with the noun's default classifier.
    Default,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Individuate => "individuate",
            Strategy::Part => "part",
            Strategy::Default => "default",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Construction {
    Unit(Strategy),
    Measure,
    Container,
    Group,
    Species,
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Construction::Unit(s) => s.fmt(f),
            Construction::Measure => f.write_str("measure"),
            Construction::Container => f.write_str("container"),
            Construction::Group => f.write_str("group"),
            Construction::Species => f.write_str("species"),
        }
    }
}

/// Number of the noun embedded under `of`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EmbeddedNumber {
    SingularBare,
    Plural,
    /// Same number as the classifier head ("1 kind of dog", "2 kinds of dogs").
    AgreeWithHead,
}

impl fmt::Display for EmbeddedNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EmbeddedNumber::SingularBare => "singular_bare",
            EmbeddedNumber::Plural => "plural",
            EmbeddedNumber::AgreeWithHead => "agree_with_head",
        })
    }
}

/// Default verb agreement of the finished phrase.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Agreement {
    Singular,
    FollowNumber,
}

impl fmt::Display for Agreement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Agreement::Singular => "singular",
            Agreement::FollowNumber => "follow_number",
        })
    }
}

/// An English word with an optional irregular plural.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnglishWord {
    pub base: String,
    pub plural: Option<String>,
}

/// The English classifier word chosen for the phrase.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassifierWord {
    pub word: EnglishWord,
    pub joined: bool,
}

/// The English noun after any pluralia tantum substitution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NounForm {
    pub word: EnglishWord,
    pub countability: Countability,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AttributeKind {
    /// `the N of X C`: the classifier is read as an ordinary counted thing.
    AmountOfUnit,
    /// `a N of X C`: the classifier measures the noun's own dimension.
    SameDimensionMeasure,
}

impl fmt::Display for AttributeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AttributeKind::AmountOfUnit => "amount_of_unit",
            AttributeKind::SameDimensionMeasure => "same_dimension_measure",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AttributePlan {
    pub kind: AttributeKind,
    pub dimension: String,
    pub adjective: Option<String>,
    /// Unit word following the numeral; `None` for general classifiers,
    /// which leave the counted thing implicit ("the price of 1").
    pub unit: Option<ClassifierWord>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FallbackStep {
    /// The noun's own default classifier replaced the classifier.
    DefaultClassifier(String),
    /// Planning restarted with the noun's alternative translation.
    AltTranslation(String),
    /// No alternative: keep `X C of N` with the plural-only noun.
    BarePlural,
}

impl fmt::Display for FallbackStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FallbackStep::DefaultClassifier(w) => write!(f, "default_classifier:{w}"),
            FallbackStep::AltTranslation(w) => write!(f, "alt:{w}"),
            FallbackStep::BarePlural => f.write_str("bare_plural"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransferPlan {
    pub classifier_type: ClassifierType,
    pub construction: Construction,
    /// Absent exactly when the construction is `Unit(Individuate)`.
    pub classifier: Option<ClassifierWord>,
    pub noun: NounForm,
    pub embedded_number: EmbeddedNumber,
    pub agreement: Agreement,
    pub attribute: Option<AttributePlan>,
    pub fallback: Vec<FallbackStep>,
}

impl TransferPlan {
    pub fn strategy(&self) -> Option<Strategy> {
        match self.construction {
            Construction::Unit(s) => Some(s),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransferError {
    #[error(
        "NoRealization: {classifier_type} classifier '{classifier}' has no rendering for pluralia tantum noun '{noun}'"
    )]
    NoRealization {
        classifier: String,
        classifier_type: ClassifierType,
        noun: String,
    },
}

/// Chooses the unit-classifier strategy from classifier type and countability.
///
/// # Panics
///
/// If `ctype` is not a unit classifier type.
pub fn select_strategy(ctype: ClassifierType, c: Countability) -> Strategy {
    use Countability::*;
    match ctype {
        ClassifierType::UnitGeneral => match c {
            FullyCountable | StronglyCountable | WeaklyCountable => Strategy::Individuate,
            Uncountable | PluraliaTantum => Strategy::Default,
        },
        ClassifierType::UnitTypical => match c {
            FullyCountable => Strategy::Individuate,
            _ => Strategy::Part,
        },
        ClassifierType::UnitSpecial => Strategy::Part,
        other => panic!("select_strategy called with non-unit classifier type {other}"),
    }
}

fn semcat_match<'c>(cls: &'c ClassifierEntry, noun: &NounEntry) -> Option<&'c str> {
    cls.by_semcat
        .iter()
        .find(|r| noun.semcats.contains(&r.semcat))
        .map(|r| r.en.as_str())
}

/// English translation of a classifier for a given noun: the first
/// `by_semcat` rule matching one of the noun's categories, else `cls.en`.
pub fn resolve_classifier_en<'c>(cls: &'c ClassifierEntry, noun: &NounEntry) -> &'c str {
    semcat_match(cls, noun).unwrap_or(&cls.en)
}

pub const FALLBACK_DEFAULT_CLASSIFIER: &str = "piece";

pub fn default_classifier_for(noun: &NounEntry) -> &str {
    noun.default_classifier
        .as_deref()
        .unwrap_or(FALLBACK_DEFAULT_CLASSIFIER)
}

fn classifier_word(cls: &ClassifierEntry, word: &str) -> ClassifierWord {
    ClassifierWord {
        word: EnglishWord {
            base: word.to_owned(),
            // the irregular plural belongs to the entry's own translation only
            plural: (word == cls.en).then(|| cls.plural.clone()).flatten(),
        },
        joined: cls.joined,
    }
}

fn plain_word(word: &str) -> ClassifierWord {
    ClassifierWord {
        word: EnglishWord {
            base: word.to_owned(),
            plural: None,
        },
        joined: false,
    }
}

fn noun_form(noun: &NounEntry) -> NounForm {
    NounForm {
        word: EnglishWord {
            base: noun.en.clone(),
            plural: noun.plural.clone(),
        },
        countability: noun.countability,
    }
}

/// Unit plan for a noun that is not pluralia tantum.
fn unit_plan(cls: &ClassifierEntry, noun: &NounEntry, form: NounForm) -> TransferPlan {
    let strategy = select_strategy(cls.ctype, form.countability);
    let classifier = match strategy {
        Strategy::Individuate => None,
        Strategy::Part => Some(classifier_word(cls, resolve_classifier_en(cls, noun))),
        // a category-specific translation of the classifier beats the noun's default
        Strategy::Default => Some(match semcat_match(cls, noun) {
            Some(w) => classifier_word(cls, w),
            None => plain_word(default_classifier_for(noun)),
        }),
    };
    let embedded_number = match strategy {
        Strategy::Individuate => EmbeddedNumber::AgreeWithHead,
        Strategy::Part | Strategy::Default => EmbeddedNumber::SingularBare,
    };
    TransferPlan {
        classifier_type: cls.ctype,
        construction: Construction::Unit(strategy),
        classifier,
        noun: form,
        embedded_number,
        agreement: Agreement::FollowNumber,
        attribute: None,
        fallback: Vec::new(),
    }
}

/// Completes a unit plan for a pluralia tantum noun.
///
/// The noun's default classifier is tried first (not for special
/// classifiers), then its alternative translation, then `X C of N` with the
/// plural-only form. Special classifiers without an alternative have no
/// rendering at all.
pub fn pluralia_fallback(
    plan: TransferPlan,
    noun: &NounEntry,
    cls: &ClassifierEntry,
) -> Result<TransferPlan, TransferError> {
    debug_assert_eq!(noun.countability, Countability::PluraliaTantum);
    debug_assert!(cls.ctype.is_unit());
    let special = cls.ctype == ClassifierType::UnitSpecial;

    if let (Some(dc), false) = (&noun.default_classifier, special) {
        return Ok(TransferPlan {
            construction: Construction::Unit(Strategy::Default),
            classifier: Some(plain_word(dc)),
            embedded_number: EmbeddedNumber::SingularBare,
            fallback: vec![FallbackStep::DefaultClassifier(dc.clone())],
            ..plan
        });
    }
    if let Some(alt) = &noun.alt {
        let form = NounForm {
            word: EnglishWord {
                base: alt.en.clone(),
                plural: alt.plural.clone(),
            },
            countability: alt.countability,
        };
        let mut replanned = unit_plan(cls, noun, form);
        replanned
            .fallback
            .push(FallbackStep::AltTranslation(alt.en.clone()));
        return Ok(replanned);
    }
    if special {
        return Err(TransferError::NoRealization {
            classifier: cls.ja.clone(),
            classifier_type: cls.ctype,
            noun: noun.ja.clone(),
        });
    }
    let mut plan = plan;
    if plan.strategy() == Some(Strategy::Individuate) {
        // unreachable through select_strategy, but never individuate here
        plan.construction = Construction::Unit(Strategy::Default);
        plan.classifier = Some(plain_word(default_classifier_for(noun)));
        plan.embedded_number = EmbeddedNumber::SingularBare;
    }
    plan.fallback.push(FallbackStep::BarePlural);
    Ok(plan)
}

fn attribute_plan(cls: &ClassifierEntry, noun: &NounEntry) -> Option<AttributePlan> {
    let attr = noun.attribute.as_ref()?;
    let same_dimension = cls.ctype == ClassifierType::MetricMeasure
        && cls.measures.as_deref() == Some(attr.dimension.as_str());
    let unit = (cls.ctype != ClassifierType::UnitGeneral)
        .then(|| classifier_word(cls, resolve_classifier_en(cls, noun)));
    Some(AttributePlan {
        kind: if same_dimension {
            AttributeKind::SameDimensionMeasure
        } else {
            AttributeKind::AmountOfUnit
        },
        dimension: attr.dimension.clone(),
        adjective: attr.adjective.clone(),
        unit,
    })
}

/// Plans the English rendering of a parsed phrase.
pub fn plan(np: &SourceNP<'_>) -> Result<TransferPlan, TransferError> {
    use Countability::*;
    let cls = np.classifier;
    let noun = np.noun;

    if let Some(attribute) = attribute_plan(cls, noun) {
        let construction = match cls.ctype {
            t if t.is_unit() => Construction::Unit(select_strategy(t, noun.countability)),
            ClassifierType::MetricMeasure => Construction::Measure,
            ClassifierType::MetricContainer => Construction::Container,
            ClassifierType::Group => Construction::Group,
            _ => Construction::Species,
        };
        return Ok(TransferPlan {
            classifier_type: cls.ctype,
            construction,
            classifier: attribute.unit.clone(),
            noun: noun_form(noun),
            embedded_number: EmbeddedNumber::SingularBare,
            agreement: Agreement::Singular,
            attribute: Some(attribute),
            fallback: Vec::new(),
        });
    }

    let c = noun.countability;
    let partitive = |construction, embedded_number, agreement| TransferPlan {
        classifier_type: cls.ctype,
        construction,
        classifier: Some(classifier_word(cls, resolve_classifier_en(cls, noun))),
        noun: noun_form(noun),
        embedded_number,
        agreement,
        attribute: None,
        fallback: Vec::new(),
    };
    let plural_if = |cond: bool| {
        if cond {
            EmbeddedNumber::Plural
        } else {
            EmbeddedNumber::SingularBare
        }
    };

    Ok(match cls.ctype {
        ClassifierType::UnitGeneral | ClassifierType::UnitTypical | ClassifierType::UnitSpecial => {
            let plan = unit_plan(cls, noun, noun_form(noun));
            if c == PluraliaTantum {
                pluralia_fallback(plan, noun, cls)?
            } else {
                plan
            }
        }
        ClassifierType::MetricMeasure => partitive(
            Construction::Measure,
            plural_if(matches!(c, FullyCountable | PluraliaTantum)),
            Agreement::Singular,
        ),
        ClassifierType::MetricContainer => partitive(
            Construction::Container,
            plural_if(matches!(c, FullyCountable | PluraliaTantum)),
            Agreement::FollowNumber,
        ),
        ClassifierType::Group => partitive(
            Construction::Group,
            plural_if(matches!(
                c,
                FullyCountable | StronglyCountable | PluraliaTantum
            )),
            Agreement::FollowNumber,
        ),
        ClassifierType::Species => partitive(
            Construction::Species,
            match c {
                FullyCountable | StronglyCountable => EmbeddedNumber::AgreeWithHead,
                _ => EmbeddedNumber::SingularBare,
            },
            Agreement::FollowNumber,
        ),
    })
}
