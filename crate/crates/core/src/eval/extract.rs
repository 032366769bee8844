//! Regex detection of numeric literals in formatted text.

use std::ops::Range;

use regex::Regex;

use crate::classify::ExpressionType;
use crate::grammar::{lexicon, tokenize};
use crate::locale::{Language, Locale};

const NUMBER: &str = r"\b(?:\d{1,3}(?:[.,]\d{3})+(?:[.,]\d+)?|\d+(?:[.,]\d+)?)";
const MAGNITUDE: &str =
    r"(?:[Mm]illion(?:en|s)?|[Bb]illion(?:en|s)?|[Tt]rillion(?:s)?|[Mm]illiarden?)\b";
const MERIDIEM: &str = r"(?:[AaPp]\.[Mm]\.|[AaPp][Mm]\b)";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiteralMatch {
    /// Character offsets into the searched text.
    pub chars: Range<usize>,
    /// Byte offsets into the searched text.
    pub bytes: Range<usize>,
    pub text: String,
    pub guessed: ExpressionType,
}

/// Compiled literal patterns for a set of currency symbols.
#[derive(Debug, Clone)]
pub struct Extractor {
    pattern: Regex,
}

impl Default for Extractor {
    fn default() -> Self {
        Extractor::for_locales(&[Locale::en(), Locale::de()])
    }
}

impl Extractor {
    pub fn new<S: AsRef<str>>(symbols: &[S]) -> Self {
        let mut symbols: Vec<String> = symbols.iter().map(|s| regex::escape(s.as_ref())).collect();
        // longest first so "US$" wins over "$"
        symbols.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
        symbols.dedup();
        let currency = if symbols.is_empty() {
            // matches nothing
            String::from(r"[^\s\S]")
        } else {
            format!("(?:{})", symbols.join("|"))
        };
        let pattern = format!(
            r"(?P<prefix>{currency}{NUMBER}(?:\s{MAGNITUDE})?)|(?P<suffix>{NUMBER}(?:\s{MAGNITUDE})?\s?{currency})|(?P<meridiem>\b\d{{1,2}}(?::\d{{2}})?\s?{MERIDIEM})|(?P<clock>\b\d{{1,2}}:\d{{2}}\b)|(?P<number>{NUMBER}(?:\s{MAGNITUDE})?)"
        );
        Extractor { pattern: Regex::new(&pattern).expect("literal pattern compiles") }
    }

    pub fn for_locales(locales: &[Locale]) -> Self {
        let symbols: Vec<&str> =
            locales.iter().flat_map(|l| l.currencies.iter().map(|c| c.symbol.as_str())).collect();
        Extractor::new(&symbols)
    }

    pub fn extract(&self, text: &str) -> Vec<LiteralMatch> {
        let mut out = Vec::new();
        // running byte → char conversion; matches arrive in order
        let (mut byte_pos, mut char_pos) = (0, 0);
        let mut to_char = |b: usize| {
            char_pos += text[byte_pos..b].chars().count();
            byte_pos = b;
            char_pos
        };
        for caps in self.pattern.captures_iter(text) {
            let m = caps.get(0).expect("group 0 always present");
            let guessed = if caps.name("prefix").is_some() || caps.name("suffix").is_some() {
                ExpressionType::Currency
            } else if caps.name("meridiem").is_some() || caps.name("clock").is_some() {
                ExpressionType::Timestamp
            } else if is_year(m.as_str()) {
                ExpressionType::Year
            } else {
                ExpressionType::Quantity
            };
            let start = to_char(m.start());
            let end = to_char(m.end());
            out.push(LiteralMatch {
                chars: start..end,
                bytes: m.range(),
                text: m.as_str().to_string(),
                guessed,
            });
        }
        out
    }
}

fn is_year(s: &str) -> bool {
    s.len() == 4 && s.parse::<u32>().is_ok_and(|y| (1000..=2100).contains(&y))
}

/// Literals found with the preset currency symbols.
pub fn extract_numeric_literals(text: &str) -> Vec<LiteralMatch> {
    static DEFAULT: once_cell::sync::Lazy<Extractor> = once_cell::sync::Lazy::new(Extractor::default);
    DEFAULT.extract(text)
}

/// A literal, or a number word of `language` other than a bare German
/// article ("ein Hund").
pub fn contains_numeric_expression(text: &str, language: Language) -> bool {
    !extract_numeric_literals(text).is_empty()
        || tokenize(text).iter().any(|t| {
            t.is_word
                && lexicon::is_number_word(&t.lowercased, language)
                && !(language == Language::De && lexicon::DE_ARTICLES.contains(&t.lowercased.as_str()))
        })
}
