//! Number-word lexicon. Tokens are mapped to grammar atoms; German compounds
//! ("zweihundertfünfundvierzig") decompose into several atoms.

use crate::locale::Language;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Atom {
    /// 0..=9
    Digit(u8),
    /// 10..=19
    Teen(u8),
    /// 20, 30, .., 90
    Tens(u8),
    Hundred,
    /// Power-of-ten exponent: 3, 6, 9 or 12.
    Scale(u8),
    /// EN "and", DE "und"
    And,
    /// EN "point", DE "Komma"
    Point,
    /// EN "oh" as a zero digit ("nineteen oh five")
    Oh,
}

impl Atom {
    pub fn is_connector(self) -> bool {
        matches!(self, Atom::And | Atom::Point | Atom::Oh)
    }

    /// 0..=9 value when the atom can be read as a single decimal digit.
    pub fn digit_value(self) -> Option<u8> {
        match self {
            Atom::Digit(d) => Some(d),
            Atom::Oh => Some(0),
            _ => None,
        }
    }
}

const EN_WORDS: &[(&str, Atom)] = &[
    ("zero", Atom::Digit(0)),
    ("one", Atom::Digit(1)),
    ("two", Atom::Digit(2)),
    ("three", Atom::Digit(3)),
    ("four", Atom::Digit(4)),
    ("five", Atom::Digit(5)),
    ("six", Atom::Digit(6)),
    ("seven", Atom::Digit(7)),
    ("eight", Atom::Digit(8)),
    ("nine", Atom::Digit(9)),
    ("ten", Atom::Teen(10)),
    ("eleven", Atom::Teen(11)),
    ("twelve", Atom::Teen(12)),
    ("thirteen", Atom::Teen(13)),
    ("fourteen", Atom::Teen(14)),
    ("fifteen", Atom::Teen(15)),
    ("sixteen", Atom::Teen(16)),
    ("seventeen", Atom::Teen(17)),
    ("eighteen", Atom::Teen(18)),
    ("nineteen", Atom::Teen(19)),
    ("twenty", Atom::Tens(20)),
    ("thirty", Atom::Tens(30)),
    ("forty", Atom::Tens(40)),
    ("fifty", Atom::Tens(50)),
    ("sixty", Atom::Tens(60)),
    ("seventy", Atom::Tens(70)),
    ("eighty", Atom::Tens(80)),
    ("ninety", Atom::Tens(90)),
    ("hundred", Atom::Hundred),
    ("thousand", Atom::Scale(3)),
    ("million", Atom::Scale(6)),
    ("billion", Atom::Scale(9)),
    ("trillion", Atom::Scale(12)),
    ("and", Atom::And),
    ("point", Atom::Point),
    ("oh", Atom::Oh),
];

/// German morphemes. Longer entries must win over their prefixes, which the
/// backtracking decomposition below guarantees regardless of order.
const DE_MORPHEMES: &[(&str, Atom)] = &[
    ("null", Atom::Digit(0)),
    ("eins", Atom::Digit(1)),
    ("ein", Atom::Digit(1)),
    ("zwei", Atom::Digit(2)),
    ("zwo", Atom::Digit(2)),
    ("drei", Atom::Digit(3)),
    ("vier", Atom::Digit(4)),
    ("fünf", Atom::Digit(5)),
    ("sechs", Atom::Digit(6)),
    ("sieben", Atom::Digit(7)),
    ("acht", Atom::Digit(8)),
    ("neun", Atom::Digit(9)),
    ("zehn", Atom::Teen(10)),
    ("elf", Atom::Teen(11)),
    ("zwölf", Atom::Teen(12)),
    ("dreizehn", Atom::Teen(13)),
    ("vierzehn", Atom::Teen(14)),
    ("fünfzehn", Atom::Teen(15)),
    ("sechzehn", Atom::Teen(16)),
    ("siebzehn", Atom::Teen(17)),
    ("achtzehn", Atom::Teen(18)),
    ("neunzehn", Atom::Teen(19)),
    ("zwanzig", Atom::Tens(20)),
    ("dreißig", Atom::Tens(30)),
    ("dreissig", Atom::Tens(30)),
    ("vierzig", Atom::Tens(40)),
    ("fünfzig", Atom::Tens(50)),
    ("sechzig", Atom::Tens(60)),
    ("siebzig", Atom::Tens(70)),
    ("achtzig", Atom::Tens(80)),
    ("neunzig", Atom::Tens(90)),
    ("hundert", Atom::Hundred),
    ("tausend", Atom::Scale(3)),
    ("und", Atom::And),
];

/// German words that only occur as whole tokens.
const DE_WORDS: &[(&str, Atom)] = &[
    ("eine", Atom::Digit(1)),
    ("million", Atom::Scale(6)),
    ("millionen", Atom::Scale(6)),
    ("milliarde", Atom::Scale(9)),
    ("milliarden", Atom::Scale(9)),
    ("billion", Atom::Scale(12)),
    ("billionen", Atom::Scale(12)),
    ("komma", Atom::Point),
];

/// Standalone German article forms of "ein". They read as 1 only inside
/// larger numbers ("eine Million") or before currency/time words.
pub const DE_ARTICLES: &[&str] = &["ein", "eine", "einen", "einem", "einer", "eines"];

/// Canonical spelling of a magnitude word, for the given exponent.
pub fn magnitude_word(language: Language, exponent: u8, plural: bool) -> Option<&'static str> {
    Some(match (language, exponent, plural) {
        (Language::En, 6, _) => "million",
        (Language::En, 9, _) => "billion",
        (Language::En, 12, _) => "trillion",
        (Language::De, 6, false) => "Million",
        (Language::De, 6, true) => "Millionen",
        (Language::De, 9, false) => "Milliarde",
        (Language::De, 9, true) => "Milliarden",
        (Language::De, 12, false) => "Billion",
        (Language::De, 12, true) => "Billionen",
        _ => return None,
    })
}

/// Exponent of a spoken magnitude word.
pub fn magnitude_exponent(word: &str, language: Language) -> Option<u8> {
    match atoms_for(&word.to_lowercase(), language)?.as_slice() {
        [Atom::Scale(e)] if *e >= 6 => Some(*e),
        _ => None,
    }
}

/// Maps a lowercased token to its atoms, or `None` if it is not a number word.
pub fn atoms_for(word: &str, language: Language) -> Option<Vec<Atom>> {
    match language {
        Language::En => EN_WORDS
            .iter()
            .find(|(w, _)| *w == word)
            .map(|&(_, a)| vec![a]),
        Language::De => {
            if let Some(&(_, a)) = DE_WORDS.iter().find(|(w, _)| *w == word) {
                return Some(vec![a]);
            }
            let mut out = Vec::new();
            decompose_de(word, &mut out).then_some(out)
        }
    }
}

fn decompose_de(rest: &str, out: &mut Vec<Atom>) -> bool {
    if rest.is_empty() {
        return !out.is_empty();
    }
    let mut candidates: Vec<&(&str, Atom)> =
        DE_MORPHEMES.iter().filter(|(m, _)| rest.starts_with(m)).collect();
    candidates.sort_by_key(|(m, _)| std::cmp::Reverse(m.len()));
    for &&(m, atom) in &candidates {
        out.push(atom);
        if decompose_de(&rest[m.len()..], out) {
            return true;
        }
        out.pop();
    }
    false
}

/// True if the token is a number word in the given language (connectors such
/// as "and" or "point" alone do not count).
pub fn is_number_word(word: &str, language: Language) -> bool {
    match atoms_for(word, language) {
        Some(atoms) => !(atoms.len() == 1 && atoms[0].is_connector()),
        None => false,
    }
}
