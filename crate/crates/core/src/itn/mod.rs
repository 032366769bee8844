//! Sentence-level normalization (number words → literals) and its inverse.

mod literal;
mod phrasing;
pub mod spell;
mod verbalize;

use std::ops::Range;

use serde::{Deserialize, Serialize};

pub use phrasing::{
    enumerate_timestamp_phrasings, verbalize_time, TimeFamily, TimestampPhrasing, PROMPT_MINUTE_OFFSET,
};
pub use literal::{parse_literal, parse_numeral, verbalize_sentence};
pub use verbalize::{verbalize_value, verbalize_with};

use crate::classify::{classify, ParsedExpression};
use crate::format::format_expression;
use crate::grammar::{scan_tokens, tokenize, CandidateKind, Token};
use crate::locale::{Language, Locale};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalizeOptions {
    /// Keep day-period phrases ("in the evening") after a formatted time.
    pub keep_period_phrases: bool,
}

/// One replaced expression. `source` indexes the input sentence and
/// `output` the normalized text, both in bytes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizedExpression {
    pub expression: ParsedExpression,
    pub surface: String,
    pub original: String,
    pub source: Range<usize>,
    pub output: Range<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizationResult {
    pub text: String,
    /// Sorted by position, non-overlapping.
    pub expressions: Vec<NormalizedExpression>,
}

impl NormalizationResult {
    /// Puts every original span back in place of its formatted surface.
    pub fn restore(&self) -> String {
        let mut out = String::with_capacity(self.text.len());
        let mut pos = 0;
        for e in &self.expressions {
            out.push_str(&self.text[pos..e.output.start]);
            out.push_str(&e.original);
            pos = e.output.end;
        }
        out.push_str(&self.text[pos..]);
        out
    }
}

#[derive(Debug, Clone)]
pub struct Normalizer {
    locale: Locale,
    options: NormalizeOptions,
}

fn byte_range(tokens: &[Token], start: usize, end: usize) -> Range<usize> {
    tokens[start].range.start..tokens[end - 1].range.end
}

impl Normalizer {
    pub fn new(locale: Locale) -> Self {
        Normalizer { locale, options: NormalizeOptions::default() }
    }

    pub fn with_options(locale: Locale, options: NormalizeOptions) -> Self {
        Normalizer { locale, options }
    }

    pub fn locale(&self) -> &Locale {
        &self.locale
    }

    pub fn normalize(&self, sentence: &str) -> NormalizationResult {
        let tokens = tokenize(sentence);
        let mut text = String::with_capacity(sentence.len());
        let mut expressions = Vec::new();
        let mut pos = 0;
        for candidate in scan_tokens(&tokens, &self.locale) {
            let expression = classify(&candidate, &tokens, &self.locale);
            let Ok(surface) = format_expression(&expression, &self.locale) else {
                continue;
            };
            let mut end = expression.span.end;
            if let (Some(period), true) = (candidate.period_span, self.options.keep_period_phrases) {
                end = period.start;
            }
            if candidate.kind == CandidateKind::ClockPhrase
                && self.locale.language == Language::De
                && tokens.get(end).is_some_and(|t| t.is_word && t.lowercased == "uhr")
            {
                end += 1;
            }
            let source = byte_range(&tokens, expression.span.start, end);
            text.push_str(&sentence[pos..source.start]);
            let output = text.len()..text.len() + surface.len();
            text.push_str(&surface);
            pos = source.end;
            expressions.push(NormalizedExpression {
                expression,
                surface,
                original: sentence[source.clone()].to_string(),
                source,
                output,
            });
        }
        text.push_str(&sentence[pos..]);
        NormalizationResult { text, expressions }
    }
}

/// Normalizes with default options: day-period phrases are folded into
/// the formatted time and German "Uhr" after a time is dropped.
pub fn normalize_sentence(sentence: &str, locale: &Locale) -> NormalizationResult {
    Normalizer::new(locale.clone()).normalize(sentence)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn norm(s: &str, locale: &Locale) -> String {
        normalize_sentence(s, locale).text
    }

    #[test]
    fn examples() {
        let en = Locale::en();
        let de = Locale::de();
        assert_eq!(norm("The meeting is at quarter to eight in the evening.", &en), "The meeting is at 19:45.");
        assert_eq!(norm("Ich habe bis fünfzehn Uhr fünfundvierzig Zeit.", &de), "Ich habe bis 15:45 Zeit.");
        assert_eq!(norm("hello world", &en), "hello world");
        assert_eq!(norm("in nineteen forty-five", &en), "in 1945");
        assert_eq!(norm("two thousand pieces", &en), "2,000 pieces");
        assert_eq!(norm("zweitausend Teile", &de), "2.000 Teile");
        assert_eq!(norm("one thousand dollars and fifty cents", &en), "$1,000.50");
        assert_eq!(norm("eintausend Euro und fünfzig Cent", &de), "1.000,50€");
        assert_eq!(norm("at 4pm as you can at 10am", &en), "at 16:00 as you can at 10:00");
        assert_eq!(norm("The bus leaves at five past seven.", &en), "The bus leaves at 7:05.");
        assert_eq!(norm("It made nine point one million dollars.", &en), "It made $9.1 million.");
    }

    #[test]
    fn keep_period_option() {
        let n = Normalizer::with_options(Locale::en(), NormalizeOptions { keep_period_phrases: true });
        assert_eq!(n.normalize("at quarter to eight in the evening").text, "at 19:45 in the evening");
    }

    #[test]
    fn uhr_after_halb_is_dropped() {
        assert_eq!(norm("um halb acht Uhr abends", &Locale::de()), "um 19:30");
        assert_eq!(norm("um halb acht Uhr", &Locale::de()), "um 7:30");
    }

    #[test]
    fn restore_reconstructs_input() {
        let s = "From nineteen ninety-nine until two thousand five we sold two thousand pieces at quarter to one.";
        let r = normalize_sentence(s, &Locale::en());
        assert_eq!(r.restore(), s);
        for e in &r.expressions {
            assert_eq!(&r.text[e.output.clone()], e.surface);
            assert_eq!(&s[e.source.clone()], e.original);
        }
    }
}
