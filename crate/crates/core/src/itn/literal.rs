//! Formatted literals back into payloads, for sentence verbalization.

use super::verbalize::verbalize_value;
use crate::classify::{resolve_time, ExpressionType, ParsedExpression, Payload, YEAR_MAX, YEAR_MIN};
use crate::eval::{Extractor, LiteralMatch};
use crate::grammar::{NumericValue, PeriodHint, Span, TimeOfDay, MAX_SCALE};
use crate::locale::Locale;

/// Reads a numeral written with the locale's separators.
pub fn parse_numeral(text: &str, locale: &Locale) -> Option<NumericValue> {
    let (int, frac) = match text.split_once(locale.decimal_mark) {
        Some((i, f)) => (i, f),
        None => (text, ""),
    };
    let int: String = int.chars().filter(|&c| c != locale.thousands_separator).collect();
    if int.is_empty() || !int.bytes().all(|b| b.is_ascii_digit()) || !frac.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    if frac.len() > MAX_SCALE as usize {
        return None;
    }
    let mantissa: u128 = format!("{int}{frac}").parse().ok()?;
    NumericValue::new(mantissa, frac.len() as u8).ok()
}

/// Splits "9.1 million" into numeral and magnitude word.
fn split_magnitude(text: &str) -> (&str, Option<&str>) {
    match text.split_once(char::is_whitespace) {
        Some((n, m)) if m.chars().all(char::is_alphabetic) => (n, Some(m)),
        _ => (text, None),
    }
}

fn parse_time(text: &str) -> Option<TimeOfDay> {
    let lower = text.to_lowercase().replace(['.', ' '], "");
    let (clock, period) = if let Some(c) = lower.strip_suffix("am") {
        (c, PeriodHint::ExplicitAm)
    } else if let Some(c) = lower.strip_suffix("pm") {
        (c, PeriodHint::ExplicitPm)
    } else {
        (lower.as_str(), PeriodHint::Unspecified)
    };
    let (h, m) = clock.split_once(':').unwrap_or((clock, "0"));
    let t = TimeOfDay::new(h.parse().ok()?, m.parse().ok()?, period).ok()?;
    Some(resolve_time(t))
}

fn parse_money(text: &str, locale: &Locale) -> Option<Payload> {
    let text = text.trim();
    let (unit, amount) = locale.currencies.iter().find_map(|c| {
        text.strip_prefix(c.symbol.as_str())
            .or_else(|| text.strip_suffix(c.symbol.as_str()))
            .map(|rest| (c, rest.trim()))
    })?;
    let (numeral, magnitude) = split_magnitude(amount);
    let value = parse_numeral(numeral, locale)?;
    let digits = unit.minor_unit_digits;
    let (major, minor) = if magnitude.is_none() && digits > 0 && value.scale() == digits {
        let minor = (value.mantissa() % 10u128.pow(digits as u32)) as u64;
        (NumericValue::new(value.integer_part(), 0).ok()?, NumericValue::integer(minor))
    } else {
        (value, NumericValue::integer(0))
    };
    Some(Payload::Money {
        major,
        minor,
        currency: unit.code.clone(),
        magnitude_word: magnitude.map(str::to_string),
    })
}

pub fn parse_literal(m: &LiteralMatch, locale: &Locale) -> Option<ParsedExpression> {
    let payload = match m.guessed {
        ExpressionType::Year => {
            let y: u16 = m.text.parse().ok()?;
            ((YEAR_MIN..=YEAR_MAX).contains(&(y as u64))).then_some(Payload::Year(y))?
        }
        ExpressionType::Timestamp => Payload::Time(parse_time(&m.text)?),
        ExpressionType::Currency => parse_money(&m.text, locale)?,
        ExpressionType::Quantity => {
            let (numeral, magnitude) = split_magnitude(&m.text);
            Payload::Quantity {
                value: parse_numeral(numeral, locale)?,
                unit_word: String::new(),
                magnitude_word: magnitude.map(str::to_string),
            }
        }
    };
    Some(ParsedExpression { span: Span::new(m.chars.start, m.chars.end.max(m.chars.start + 1)), payload })
}

/// Replaces every literal that parses under `locale` with number words.
/// Anything unparseable is left in place.
pub fn verbalize_sentence(sentence: &str, locale: &Locale) -> String {
    let extractor = Extractor::for_locales(std::slice::from_ref(locale));
    let mut out = String::with_capacity(sentence.len() * 2);
    let mut pos = 0;
    for m in extractor.extract(sentence) {
        let Some(words) = parse_literal(&m, locale).and_then(|e| verbalize_value(&e, locale).ok()) else {
            continue;
        };
        out.push_str(&sentence[pos..m.bytes.start]);
        out.push_str(&words);
        pos = m.bytes.end;
    }
    out.push_str(&sentence[pos..]);
    out
}
