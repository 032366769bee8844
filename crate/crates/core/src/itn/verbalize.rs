//! Payload → number words, the inverse of normalization.

use super::phrasing::{verbalize_time, TimeFamily};
use super::spell;
use crate::classify::{ParsedExpression, Payload, YEAR_MAX, YEAR_MIN};
use crate::error::{Error, Result};
use crate::grammar::NumericValue;
use crate::locale::{Language, Locale};

fn capitalize(word: &str) -> String {
    let mut chars = word.chars();
    match chars.next() {
        Some(c) => c.to_uppercase().chain(chars).collect(),
        None => String::new(),
    }
}

fn noun(word: &str, language: Language) -> String {
    match language {
        Language::En => word.to_string(),
        Language::De => capitalize(word),
    }
}

fn is_one(v: &NumericValue) -> bool {
    v.scale() == 0 && v.mantissa() == 1
}

/// Number words for `v` followed by an optional magnitude word. German
/// uses "eine" before Million/Milliarde and "ein" before other nouns.
fn amount_words(v: &NumericValue, magnitude: Option<&str>, before_noun: bool, language: Language) -> String {
    match magnitude {
        Some(m) if is_one(v) => format!("{} {m}", spell::integer_attributive(1, language, true)),
        Some(m) => format!("{} {m}", spell::value(v, language)),
        None if before_noun && is_one(v) => spell::integer_attributive(1, language, false),
        None => spell::value(v, language),
    }
}

/// Verbalizes with the default timestamp family for the minute.
pub fn verbalize_value(expr: &ParsedExpression, locale: &Locale) -> Result<String> {
    verbalize_with(expr, locale, None)
}

/// Verbalizes `expr`; `family` selects the timestamp style and is ignored
/// for other payloads.
pub fn verbalize_with(expr: &ParsedExpression, locale: &Locale, family: Option<TimeFamily>) -> Result<String> {
    let language = locale.language;
    match &expr.payload {
        Payload::Year(y) => {
            if !(YEAR_MIN..=YEAR_MAX).contains(&(*y as u64)) {
                return Err(Error::contract(format!("year {y} outside {YEAR_MIN}..={YEAR_MAX}")));
            }
            Ok(spell::year(*y, language))
        }
        Payload::Time(t) => {
            let family = family.unwrap_or_else(|| TimeFamily::default_for(t.minute));
            verbalize_time(*t, locale, family)
        }
        Payload::Money { major, minor, currency, magnitude_word } => {
            if major.is_negative() || minor.is_negative() {
                return Err(Error::contract("negative amounts are not verbalized"));
            }
            let unit = locale
                .currency(currency)
                .ok_or_else(|| Error::contract(format!("currency {currency} not in locale {locale}")))?;
            if minor.integer_part() >= 100 || minor.scale() > 0 {
                return Err(Error::contract(format!("minor amount {minor} not in 0..100")));
            }
            let singular = magnitude_word.is_none() && is_one(major);
            let mut out = format!(
                "{} {}",
                amount_words(major, magnitude_word.as_deref(), true, language),
                noun(unit.word_for(singular), language)
            );
            if !minor.is_zero() {
                let word = unit
                    .minor_word_for(is_one(minor))
                    .ok_or_else(|| Error::contract(format!("currency {currency} has no minor unit word")))?;
                let and = match language {
                    Language::En => "and",
                    Language::De => "und",
                };
                out.push_str(&format!(
                    " {and} {} {}",
                    amount_words(minor, None, true, language),
                    noun(word, language)
                ));
            }
            Ok(out)
        }
        Payload::Quantity { value, unit_word, magnitude_word } => {
            if value.is_negative() {
                return Err(Error::contract("negative quantities are not verbalized"));
            }
            let mut out = amount_words(value, magnitude_word.as_deref(), !unit_word.is_empty(), language);
            if !unit_word.is_empty() {
                out.push(' ');
                out.push_str(unit_word);
            }
            Ok(out)
        }
    }
}
