use super::cardinal::match_cardinal;
use super::token::{Span, Token};
use super::value::NumericValue;
use super::{CandidateKind, CandidateParse, CandidateValue};
use crate::locale::{Language, Locale};

fn word(tokens: &[Token], i: usize) -> Option<&str> {
    tokens.get(i).filter(|t| t.is_word).map(|t| t.lowercased.as_str())
}

/// `<cardinal> <unit> [and <cardinal> <minor unit>]` or `<cardinal> <minor unit>`.
pub fn parse_currency_phrase(tokens: &[Token], at: usize, locale: &Locale) -> Option<CandidateParse> {
    let m = match_cardinal(tokens, at, locale.language, true)?;
    let unit_word = word(tokens, m.end)?;
    let candidate = |end: usize, major, minor, code: &str| CandidateParse {
        span: Span::new(at, end),
        period_span: None,
        kind: CandidateKind::CurrencyPhrase,
        value: CandidateValue::Money {
            major,
            minor,
            unit_word: tokens[m.end].surface.clone(),
            currency: code.to_string(),
        },
        magnitude_word: m.magnitude_word.clone(),
        year_reading: m.year_reading,
    };

    if let Some(unit) = locale.currency_by_word(unit_word) {
        if m.magnitude_word.is_none() && m.value.scale() > unit.minor_unit_digits {
            return None;
        }
        let major_end = m.end + 1;
        let plain_major = m.magnitude_word.is_none() && m.value.is_integer();
        if plain_major && unit.minor_unit_digits > 0 {
            let conj = match locale.language {
                Language::En => "and",
                Language::De => "und",
            };
            let j = if word(tokens, major_end) == Some(conj) { major_end + 1 } else { major_end };
            if let Some(minor) = match_cardinal(tokens, j, locale.language, false) {
                let is_minor_word = word(tokens, minor.end)
                    .is_some_and(|w| unit.minor_words.iter().any(|mw| mw == w));
                if is_minor_word && minor.magnitude_word.is_none() && minor.value.is_integer() {
                    if minor.value.mantissa() >= 100 {
                        return None;
                    }
                    return Some(candidate(minor.end + 1, m.value, minor.value, &unit.code));
                }
            }
        }
        return Some(candidate(major_end, m.value, NumericValue::integer(0), &unit.code));
    }

    // minor unit only: "fifty cents"
    let unit = locale
        .currencies
        .iter()
        .find(|c| c.minor_unit_digits > 0 && c.minor_words.iter().any(|w| w == unit_word))?;
    if m.magnitude_word.is_some() || !m.value.is_integer() || m.value.mantissa() >= 100 {
        return None;
    }
    Some(candidate(m.end + 1, NumericValue::integer(0), m.value, &unit.code))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::token::tokenize;

    fn money(text: &str, locale: &Locale) -> Option<(usize, String, String, String, Option<String>)> {
        let toks = tokenize(text);
        let c = parse_currency_phrase(&toks, 0, locale)?;
        match c.value {
            CandidateValue::Money { major, minor, currency, .. } => Some((
                c.span.end,
                major.to_string(),
                minor.to_string(),
                currency,
                c.magnitude_word,
            )),
            _ => unreachable!(),
        }
    }

    #[test]
    fn english_amounts() {
        let en = Locale::en();
        assert_eq!(
            money("one thousand dollars and fifty cents", &en),
            Some((6, "1000".into(), "50".into(), "USD".into(), None))
        );
        assert_eq!(
            money("nine point one million dollars", &en),
            Some((5, "9.1".into(), "0".into(), "USD".into(), Some("million".into())))
        );
        assert_eq!(
            money("nineteen forty-five dollars", &en),
            Some((4, "1945".into(), "0".into(), "USD".into(), None))
        );
        assert_eq!(money("fifty cents", &en), Some((2, "0".into(), "50".into(), "USD".into(), None)));
        assert_eq!(money("five euros fifty cents", &en).map(|m| (m.2, m.3)), Some(("50".into(), "EUR".into())));
        assert_eq!(money("one pound", &en).map(|m| m.3), Some("GBP".into()));
    }

    #[test]
    fn german_amounts() {
        let de = Locale::de();
        assert_eq!(
            money("eintausend Euro und fünfzig Cent", &de),
            Some((5, "1000".into(), "50".into(), "EUR".into(), None))
        );
        assert_eq!(money("ein Euro", &de).map(|m| m.1), Some("1".into()));
    }

    #[test]
    fn rejections() {
        let en = Locale::en();
        assert_eq!(money("five dollars and one hundred cents", &en), None);
        assert_eq!(money("one hundred cents", &en), None);
        assert_eq!(money("nine point one two five dollars", &en), None);
        assert_eq!(money("five apples", &en), None);
        // a dangling tail is left alone
        assert_eq!(money("five dollars and six apples", &en).map(|m| m.0), Some(2));
    }
}
