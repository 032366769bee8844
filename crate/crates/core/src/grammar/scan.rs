//! Greedy left-to-right driver over the three phrase parsers.

use super::cardinal::malformed_run_end;
use super::clock::parse_clock_phrase;
use super::currency::parse_currency_phrase;
use super::lexicon::{is_number_word, DE_ARTICLES};
use super::token::{tokenize, Token};
use super::{parse_cardinal, CandidateKind, CandidateParse};
use crate::locale::{Language, Locale};

const EN_FUNCTION_WORDS: &[&str] = &[
    "a", "about", "above", "after", "again", "against", "all", "also", "am", "an", "and", "any",
    "are", "as", "at", "be", "because", "been", "before", "being", "below", "between", "both",
    "but", "by", "can", "could", "did", "do", "does", "down", "during", "each", "either", "else",
    "ever", "every", "few", "for", "from", "further", "had", "has", "have", "he", "her", "here",
    "hers", "him", "his", "how", "i", "if", "in", "into", "is", "it", "its", "just", "less", "may",
    "me", "might", "more", "most", "must", "my", "no", "nor", "not", "now", "o'clock", "of", "off",
    "on", "once", "only", "or", "other", "our", "out", "over", "past", "per", "same", "shall", "she",
    "should", "since", "so", "some", "such", "than", "that", "the", "their", "them", "then",
    "there", "these", "they", "this", "those", "through", "till", "times", "to", "too", "under",
    "until", "up", "us", "very", "was", "we", "were", "what", "when", "where", "which", "while",
    "who", "whom", "why", "will", "with", "would", "yet", "you", "your", "pm", "a.m", "p.m",
    "quarter", "half",
];

const DE_FUNCTION_WORDS: &[&str] = &[
    "aber", "als", "am", "an", "auch", "auf", "aus", "bei", "bin", "bis", "bist", "da", "dann",
    "das", "dass", "dem", "den", "der", "des", "die", "dies", "diese", "doch", "durch", "er", "es",
    "für", "gegen", "hat", "haben", "ich", "ihr", "im", "in", "ins", "ist", "ja", "mal", "man",
    "mit", "nach", "nicht", "noch", "nur", "ob", "oder", "ohne", "pro", "schon", "sehr", "sein",
    "seit", "sie", "sind", "so", "über", "um", "und", "uhr", "unter", "viertel", "dreiviertel", "halb", "vom",
    "von", "vor", "war", "waren", "was", "wenn", "wie", "wir", "wird", "zu", "zum", "zur",
];

/// The unit noun directly after a number, if any ("pieces", "Teile").
pub(crate) fn unit_word_after(tokens: &[Token], end: usize, language: Language) -> Option<&Token> {
    let t = tokens.get(end)?;
    if !t.is_word || !t.surface.chars().all(|c| c.is_alphabetic() || c == '\'' || c == '-') {
        return None;
    }
    if is_number_word(&t.lowercased, language) || t.lowercased == "point" || t.lowercased == "komma" {
        return None;
    }
    let ok = match language {
        Language::En => !EN_FUNCTION_WORDS.contains(&t.lowercased.as_str()),
        Language::De => {
            t.surface.chars().next().is_some_and(char::is_uppercase)
                && !DE_FUNCTION_WORDS.contains(&t.lowercased.as_str())
        }
    };
    ok.then_some(t)
}

/// A lone "one" or German article is a pronoun/article far more often than
/// a quantity; it is only taken as a number before a unit noun ("one piece").
fn is_lone_article(c: &CandidateParse, tokens: &[Token], language: Language) -> bool {
    if c.span.len() != 1 || c.kind != CandidateKind::Cardinal {
        return false;
    }
    let w = tokens[c.span.start].lowercased.as_str();
    match language {
        Language::En => w == "one" && unit_word_after(tokens, c.span.end, language).is_none(),
        Language::De => DE_ARTICLES.contains(&w),
    }
}

pub fn scan_tokens(tokens: &[Token], locale: &Locale) -> Vec<CandidateParse> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < tokens.len() {
        if !tokens[i].is_word {
            i += 1;
            continue;
        }
        // priority order breaks ties on equal span length
        let options = [
            parse_currency_phrase(tokens, i, locale),
            parse_clock_phrase(tokens, i, locale),
            parse_cardinal(tokens, i, locale).filter(|c| !is_lone_article(c, tokens, locale.language)),
        ];
        let best = options
            .into_iter()
            .flatten()
            .fold(None::<CandidateParse>, |acc, c| match acc {
                Some(a) if a.span.end >= c.span.end => Some(a),
                _ => Some(c),
            });
        match best {
            Some(c) => {
                i = c.span.end;
                out.push(c);
            }
            None => i = malformed_run_end(tokens, i, locale.language).unwrap_or(i + 1),
        }
    }
    out
}

pub fn scan_sentence(sentence: &str, locale: &Locale) -> Vec<CandidateParse> {
    scan_tokens(&tokenize(sentence), locale)
}
