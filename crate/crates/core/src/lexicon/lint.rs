use std::fmt;

use super::{ClassifierType, Countability, Lexicon};

/// A non-fatal lexicon finding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Diagnostic {
    /// Pluralia tantum noun with neither a default classifier nor an
    /// alternative translation; parting or defaulting ends in a bare plural.
    PluraliaTantumDeadEnd { noun: String },
    /// Uncountable noun without a default classifier; defaulting uses "piece".
    UncountableWithoutDefault { noun: String },
    /// Measure unit with no `measures` tag while some attribute dimension
    /// is measured by no unit at all.
    MeasureWithoutDimension {
        classifier: String,
        unmeasured: Vec<String>,
    },
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnostic::PluraliaTantumDeadEnd { noun } => write!(
                f,
                "warning: noun '{noun}': pluralia tantum with neither default_classifier nor alt"
            ),
            Diagnostic::UncountableWithoutDefault { noun } => write!(
                f,
                "warning: noun '{noun}': uncountable without default_classifier (falls back to \"piece\")"
            ),
            Diagnostic::MeasureWithoutDimension {
                classifier,
                unmeasured,
            } => write!(
                f,
                "warning: classifier '{classifier}': metric_measure without `measures` while no unit measures {}",
                unmeasured.join(", ")
            ),
        }
    }
}

pub fn lint_lexicon(lex: &Lexicon) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    for noun in lex.nouns() {
        match noun.countability {
            Countability::PluraliaTantum
                if noun.default_classifier.is_none() && noun.alt.is_none() =>
            {
                out.push(Diagnostic::PluraliaTantumDeadEnd {
                    noun: noun.ja.clone(),
                });
            }
            Countability::Uncountable if noun.default_classifier.is_none() => {
                out.push(Diagnostic::UncountableWithoutDefault {
                    noun: noun.ja.clone(),
                });
            }
            _ => {}
        }
    }

    let measured: Vec<&str> = lex
        .classifiers()
        .filter_map(|c| c.measures.as_deref())
        .collect();
    let mut unmeasured: Vec<String> = lex
        .nouns()
        .filter_map(|n| n.attribute.as_ref())
        .map(|a| a.dimension.clone())
        .filter(|d| !measured.contains(&d.as_str()))
        .collect();
    unmeasured.sort();
    unmeasured.dedup();
    if !unmeasured.is_empty() {
        for cls in lex
            .classifiers()
            .filter(|c| c.ctype == ClassifierType::MetricMeasure && c.measures.is_none())
        {
            out.push(Diagnostic::MeasureWithoutDimension {
                classifier: cls.ja.clone(),
                unmeasured: unmeasured.clone(),
            });
        }
    }
    out
}
