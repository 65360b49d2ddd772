use std::collections::BTreeSet;

use josushi::lexicon::{AltTranslation, AttributeSpec, SemcatRule};
use josushi::{
    parse_np, translate, ClassifierEntry, ClassifierType, Countability, Lexicon, NounEntry,
    PartOfSpeech,
};
use proptest::prelude::*;

const REFERENCE: &[u8] = include_bytes!("../data/reference_lexicon.json");

fn token() -> impl Strategy<Value = String> {
    "[a-z]{1,8}".prop_filter("reserved", |s| s != "no" && s != "suu" && s != "nan")
}

fn word() -> impl Strategy<Value = String> {
    "[a-z]{1,10}"
}

fn countability() -> impl Strategy<Value = Countability> {
    prop::sample::select(Countability::ALL.to_vec())
}

fn noun() -> impl Strategy<Value = NounEntry> {
    (
        token(),
        word(),
        countability(),
        prop::option::of(word()),
        prop::option::of(word()),
        prop::collection::btree_set("[a-z-]{1,6}", 0..3),
        prop::option::of((word(), prop::option::of(word()))),
        prop::option::of((word(), countability(), prop::option::of(word()))),
    )
        .prop_map(|(ja, en, c, plural, dc, semcats, attr, alt)| NounEntry {
            ja,
            en,
            countability: c,
            plural: plural.filter(|_| c != Countability::PluraliaTantum),
            default_classifier: dc,
            semcats,
            attribute: attr.map(|(dimension, adjective)| AttributeSpec {
                dimension,
                adjective,
            }),
            alt: alt
                .filter(|(_, c, _)| *c != Countability::PluraliaTantum)
                .map(|(en, countability, plural)| AltTranslation {
                    en,
                    countability,
                    plural,
                }),
        })
}

fn classifier() -> impl Strategy<Value = ClassifierEntry> {
    (
        token(),
        prop::sample::select(ClassifierType::ALL.to_vec()),
        prop::sample::select(vec![
            PartOfSpeech::JosushiOnly,
            PartOfSpeech::NounOnly,
            PartOfSpeech::Both,
        ]),
        word(),
        prop::option::of(word()),
        prop::collection::btree_map("[a-z-]{1,6}", word(), 0..3),
        prop::option::of(word()),
        any::<bool>(),
    )
        .prop_map(|(ja, ctype, pos, en, plural, rules, measures, joined)| {
            let measure = ctype == ClassifierType::MetricMeasure;
            ClassifierEntry {
                ja,
                ctype,
                pos,
                en,
                plural,
                by_semcat: rules
                    .into_iter()
                    .map(|(semcat, en)| SemcatRule { semcat, en })
                    .collect(),
                measures: measures.filter(|_| measure),
                joined: joined && measure,
            }
        })
}

fn lexicon() -> impl Strategy<Value = Lexicon> {
    (
        prop::collection::vec(noun(), 0..6),
        prop::collection::vec(classifier(), 0..6),
    )
        .prop_map(|(nouns, classifiers)| {
            let mut seen = BTreeSet::new();
            let nouns: Vec<_> = nouns
                .into_iter()
                .filter(|n| seen.insert(n.ja.clone()))
                .collect();
            let mut seen = BTreeSet::new();
            let classifiers: Vec<_> = classifiers
                .into_iter()
                .filter(|c| seen.insert(c.ja.clone()))
                .collect();
            Lexicon::from_entries(nouns, classifiers).expect("generated entries are valid")
        })
}

proptest! {
    #[test]
    fn lexicon_round_trips(lex in lexicon()) {
        let again = Lexicon::from_slice(lex.to_json().as_bytes()).unwrap();
        prop_assert_eq!(&again, &lex);
        // identical bytes, identical lexicon
        prop_assert_eq!(Lexicon::from_slice(lex.to_json().as_bytes()).unwrap(), again);
    }

    #[test]
    fn parsed_lines_render_back_verbatim(
        num in prop_oneof![
            (1u64..100_000).prop_map(|n| n.to_string()),
            Just("suu".to_owned()),
            Just("nan".to_owned()),
        ],
        n_idx in any::<prop::sample::Index>(),
        c_idx in any::<prop::sample::Index>(),
        nnoc in any::<bool>(),
    ) {
        let lex = Lexicon::from_slice(REFERENCE).unwrap();
        let nouns: Vec<_> = lex.nouns().collect();
        let classifiers: Vec<_> = lex.classifiers().collect();
        let n = n_idx.get(&nouns);
        let c = c_idx.get(&classifiers);
        let line = if nnoc {
            format!("{} no {}", n.ja, c.ja)
        } else {
            format!("{num} {} no {}", c.ja, n.ja)
        };
        match parse_np(&line, &lex) {
            Ok(np) => prop_assert_eq!(np.to_line(), line),
            Err(_) => prop_assert!(nnoc && c.pos == PartOfSpeech::JosushiOnly),
        }
    }

    #[test]
    fn surfaces_are_well_formed(
        num in 1u64..1000,
        n_idx in any::<prop::sample::Index>(),
        c_idx in any::<prop::sample::Index>(),
    ) {
        let lex = Lexicon::from_slice(REFERENCE).unwrap();
        let nouns: Vec<_> = lex.nouns().collect();
        let classifiers: Vec<_> = lex.classifiers().collect();
        let line = format!("{num} {} no {}", c_idx.get(&classifiers).ja, n_idx.get(&nouns).ja);
        if let Ok(t) = translate(&line, &lex) {
            let s = &t.english.surface;
            prop_assert!(!s.is_empty());
            prop_assert_eq!(s.trim(), s.as_str());
            prop_assert!(!s.contains("  "));
        }
    }
}
