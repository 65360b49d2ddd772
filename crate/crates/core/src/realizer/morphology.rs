//! English noun morphology and article choice.

/// Regular English plural, unless an explicit plural is supplied.
pub fn pluralize(word: &str, explicit: Option<&str>) -> String {
    if let Some(p) = explicit {
        return p.to_owned();
    }
    let lower = word.to_ascii_lowercase();
    if ["s", "x", "z", "ch", "sh"]
        .iter()
        .any(|s| lower.ends_with(s))
    {
        return format!("{word}es");
    }
    let mut rev = lower.chars().rev();
    if let (Some('y'), Some(prev)) = (rev.next(), rev.next()) {
        if !is_vowel(prev) {
            return format!("{}ies", &word[..word.len() - 1]);
        }
    }
    format!("{word}s")
}

fn is_vowel(c: char) -> bool {
    matches!(c, 'a' | 'e' | 'i' | 'o' | 'u')
}

// Vowel letter, consonant sound.
const A_PREFIXES: &[&str] = &[
    "eu", "ewe", "one", "once", "ubiq", "ufo", "uga", "uku", "uni", "ura", "ure", "uri", "uro",
    "usa", "use", "usu", "uta", "ute", "uti", "uto",
];

// Consonant letter, vowel sound; also "un-" words that the "uni" rule would catch.
const AN_PREFIXES: &[&str] = &[
    "heir", "honest", "honor", "honour", "hour", "unid", "unim", "unin",
];

/// "a" or "an" for the word that follows.
pub fn indefinite_article(word: &str) -> &'static str {
    let lower = word.to_ascii_lowercase();
    let longest = |list: &[&str]| {
        list.iter()
            .filter(|p| lower.starts_with(*p))
            .map(|p| p.len())
            .max()
    };
    match (longest(A_PREFIXES), longest(AN_PREFIXES)) {
        (Some(a), Some(an)) => return if an > a { "an" } else { "a" },
        (Some(_), None) => return "a",
        (None, Some(_)) => return "an",
        (None, None) => {}
    }
    match lower.chars().next() {
        Some(c) if is_vowel(c) => "an",
        _ => "a",
    }
}
