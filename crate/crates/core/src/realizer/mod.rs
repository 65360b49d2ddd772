//! Surface realization of transfer plans as English noun phrases.

mod morphology;

use std::fmt;

use thiserror::Error;

pub use morphology::{indefinite_article, pluralize};

use crate::lexicon::Countability;
use crate::parser::{NumeralSpec, Pattern, SourceNP};
use crate::transfer::{
    Agreement, AttributeKind, ClassifierWord, Construction, EmbeddedNumber, EnglishWord, NounForm,
    Strategy, TransferPlan,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NumberFeature {
    Singular,
    Plural,
}

impl NumberFeature {
    fn from_plural(plural: bool) -> Self {
        if plural {
            NumberFeature::Plural
        } else {
            NumberFeature::Singular
        }
    }

    pub fn short(self) -> &'static str {
        match self {
            NumberFeature::Singular => "sg",
            NumberFeature::Plural => "pl",
        }
    }
}

impl fmt::Display for NumberFeature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short())
    }
}

/// Pieces of a measured-attribute phrase ("a height of 10m") kept for role
/// conversion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeasuredAttribute {
    pub noun: String,
    pub adjective: Option<String>,
    pub quantity: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnglishNP {
    pub surface: String,
    pub head_number: NumberFeature,
    /// Default verb agreement.
    pub agreement: NumberFeature,
    pub measured: Option<MeasuredAttribute>,
}

/// Syntactic role a measured-attribute phrase is used in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, clap::ValueEnum)]
pub enum Role {
    /// "a height of 10m"
    #[default]
    Referential,
    /// "it is 10m high"
    Ascriptive,
    /// "a 10m high building"
    Premodifier,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("role conversion requested on '{surface}', which is not a measured attribute phrase")]
pub struct RoleError {
    pub surface: String,
}

/// English rendering of a numeral. `head_countable` selects "how many"
/// over "how much" for interrogatives.
pub fn render_numeral(n: NumeralSpec, head_countable: bool) -> String {
    match n {
        NumeralSpec::Count(v) => v.to_string(),
        NumeralSpec::Some => "some".to_owned(),
        NumeralSpec::Interrogative if head_countable => "how many".to_owned(),
        NumeralSpec::Interrogative => "how much".to_owned(),
    }
}

/// What occupies the slot in front of the head: a numeral, or for
/// `N no C` phrases an indefinite article.
#[derive(Debug, Clone, Copy)]
enum Determiner {
    Numeral(NumeralSpec),
    Article,
}

impl Determiner {
    fn plural(self) -> bool {
        match self {
            Determiner::Numeral(n) => n.is_plural(),
            Determiner::Article => false,
        }
    }
}

fn word_form(word: &EnglishWord, plural: bool) -> String {
    if plural {
        pluralize(&word.base, word.plural.as_deref())
    } else {
        word.base.clone()
    }
}

fn noun_surface(noun: &NounForm, plural: bool) -> String {
    // plural-only nouns are stored in their plural form
    let plural = plural && noun.countability != Countability::PluraliaTantum;
    word_form(&noun.word, plural)
}

/// Determiner plus (optional) unit word: "2 boxes", "10m", "a box", "1".
fn quantity(det: Determiner, unit: Option<&ClassifierWord>) -> String {
    let plural = det.plural();
    let Some(unit) = unit else {
        return match det {
            Determiner::Numeral(n) => render_numeral(n, true),
            Determiner::Article => "one".to_owned(),
        };
    };
    let word = word_form(&unit.word, plural && !unit.joined);
    match det {
        Determiner::Numeral(n @ NumeralSpec::Count(_)) if unit.joined => {
            format!("{}{word}", render_numeral(n, true))
        }
        Determiner::Numeral(n) => format!("{} {word}", render_numeral(n, true)),
        Determiner::Article => format!("{} {word}", indefinite_article(&word)),
    }
}

/// Builds the English phrase for a planned source phrase.
pub fn realize(np: &SourceNP<'_>, plan: &TransferPlan) -> EnglishNP {
    let det = match (np.pattern, np.numeral) {
        (Pattern::XCnoN, Some(n)) => Determiner::Numeral(n),
        _ => Determiner::Article,
    };
    let head_plural = det.plural();

    if let Some(attr) = &plan.attribute {
        let qty = quantity(det, attr.unit.as_ref());
        let noun = &plan.noun.word.base;
        let (surface, measured) = match attr.kind {
            AttributeKind::AmountOfUnit => (format!("the {noun} of {qty}"), None),
            AttributeKind::SameDimensionMeasure => (
                format!("{} {noun} of {qty}", indefinite_article(noun)),
                Some(MeasuredAttribute {
                    noun: noun.clone(),
                    adjective: attr.adjective.clone(),
                    quantity: qty,
                }),
            ),
        };
        return EnglishNP {
            surface,
            head_number: NumberFeature::Singular,
            agreement: NumberFeature::Singular,
            measured,
        };
    }

    let surface = match (plan.construction, &plan.classifier) {
        (Construction::Unit(Strategy::Individuate), _) | (_, None) => {
            let noun = noun_surface(&plan.noun, head_plural);
            let det_text = match det {
                Determiner::Numeral(n) => {
                    render_numeral(n, plan.noun.countability != Countability::Uncountable)
                }
                Determiner::Article => indefinite_article(&noun).to_owned(),
            };
            format!("{det_text} {noun}")
        }
        (_, Some(cls)) => {
            let embedded_plural = match plan.embedded_number {
                EmbeddedNumber::SingularBare => false,
                EmbeddedNumber::Plural => true,
                EmbeddedNumber::AgreeWithHead => head_plural,
            };
            format!(
                "{} of {}",
                quantity(det, Some(cls)),
                noun_surface(&plan.noun, embedded_plural)
            )
        }
    };
    let head_number = NumberFeature::from_plural(head_plural);
    let agreement = match plan.agreement {
        Agreement::Singular => NumberFeature::Singular,
        Agreement::FollowNumber => head_number,
    };
    EnglishNP {
        surface,
        head_number,
        agreement,
        measured: None,
    }
}

/// Re-shapes a measured-attribute phrase for the role it is used in.
pub fn convert_attribute_np(np: &EnglishNP, role: Role) -> Result<String, RoleError> {
    let m = np.measured.as_ref().ok_or_else(|| RoleError {
        surface: np.surface.clone(),
    })?;
    Ok(match role {
        Role::Referential => np.surface.clone(),
        Role::Ascriptive | Role::Premodifier => match &m.adjective {
            Some(adj) => format!("{} {adj}", m.quantity),
            None => format!("{} in {}", m.quantity, m.noun),
        },
    })
}
