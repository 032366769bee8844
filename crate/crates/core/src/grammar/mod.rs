//! Number-word grammar: tokenizer, lexicon and the cardinal, clock and
//! currency phrase parsers for English and German.

mod cardinal;
mod clock;
mod currency;
pub mod lexicon;
mod scan;
mod token;
mod value;

pub use clock::parse_clock_phrase;
pub use currency::parse_currency_phrase;
pub use scan::{scan_sentence, scan_tokens};
pub(crate) use scan::unit_word_after;
pub use token::{reconstruct, tokenize, Span, Token};
pub use value::{NumericValue, PeriodHint, TimeOfDay, INTEGER_LIMIT, MAX_SCALE};

use crate::locale::Locale;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CandidateKind {
    Cardinal,
    ClockPhrase,
    CurrencyPhrase,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CandidateValue {
    Number(NumericValue),
    Time(TimeOfDay),
    Money {
        major: NumericValue,
        minor: NumericValue,
        /// Major (or minor, for "fifty cents") unit word as spoken.
        unit_word: String,
        /// ISO code resolved through the locale.
        currency: String,
    },
}

/// A number-word phrase found in a token stream, before classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateParse {
    /// Every token the phrase covers, including a trailing day-period phrase.
    pub span: Span,
    /// Trailing day-period phrase ("in the evening") inside `span`, if any.
    pub period_span: Option<Span>,
    pub kind: CandidateKind,
    pub value: CandidateValue,
    /// million/billion/Millionen... as spoken, for cardinal and currency kinds.
    pub magnitude_word: Option<String>,
    /// Parsed as a year-style reading ("nineteen forty-five").
    pub year_reading: bool,
}

/// Longest cardinal starting at token `at`.
pub fn parse_cardinal(tokens: &[Token], at: usize, locale: &Locale) -> Option<CandidateParse> {
    let m = cardinal::match_cardinal(tokens, at, locale.language, true)?;
    Some(CandidateParse {
        span: Span::new(at, m.end),
        period_span: None,
        kind: CandidateKind::Cardinal,
        value: CandidateValue::Number(m.value),
        magnitude_word: m.magnitude_word,
        year_reading: m.year_reading,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cardinal(text: &str, locale: &Locale) -> Option<NumericValue> {
        let toks = tokenize(text);
        match parse_cardinal(&toks, 0, locale)?.value {
            CandidateValue::Number(v) => Some(v),
            _ => None,
        }
    }

    #[test]
    fn spec_examples() {
        let en = Locale::en();
        assert_eq!(cardinal("nineteen forty-five", &en), Some(NumericValue::integer(1945)));
        assert_eq!(cardinal("zero", &en), Some(NumericValue::integer(0)));
        assert_eq!(cardinal("zweitausend", &Locale::de()), Some(NumericValue::integer(2000)));
        assert_eq!(
            cardinal("two hundred thirty-four thousand five hundred sixty-seven", &en),
            Some(NumericValue::integer(234_567))
        );
        assert_eq!(cardinal("two thousand million thousand", &en), None);
        assert_eq!(cardinal("neun Komma eins", &Locale::de()), Some(NumericValue::new(91, 1).unwrap()));
    }

    #[test]
    fn not_at_number_word() {
        let toks = tokenize("hello two");
        assert!(parse_cardinal(&toks, 0, &Locale::en()).is_none());
        assert!(parse_cardinal(&toks, 1, &Locale::en()).is_some());
    }
}
