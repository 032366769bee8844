//! Locale-aware rendering of classified expressions as numeric literals.

use crate::classify::{ParsedExpression, Payload, YEAR_MAX, YEAR_MIN};
use crate::error::{Error, Result};
use crate::grammar::{NumericValue, TimeOfDay};
use crate::locale::{CurrencyPlacement, CurrencyUnit, Locale};

/// Inserts `separator` every three digits from the right.
pub fn group_thousands(digits: &str, separator: char) -> String {
    let n = digits.len();
    let mut out = String::with_capacity(n + n / 3);
    for (i, c) in digits.chars().enumerate() {
        if i > 0 && (n - i).is_multiple_of(3) {
            out.push(separator);
        }
        out.push(c);
    }
    out
}

pub fn format_year(year: u32) -> Result<String> {
    if !(YEAR_MIN..=YEAR_MAX).contains(&(year as u64)) {
        return Err(Error::contract(format!("year {year} outside {YEAR_MIN}..={YEAR_MAX}")));
    }
    Ok(year.to_string())
}

/// `H:MM`, hour unpadded, in both locales.
pub fn format_time(t: TimeOfDay) -> String {
    format!("{}:{:02}", t.hour, t.minute)
}

/// Grouped integer part, locale decimal mark and the spoken fraction digits.
pub fn format_number(v: &NumericValue, locale: &Locale) -> String {
    let mut out = String::new();
    if v.is_negative() {
        out.push('-');
    }
    out.push_str(&group_thousands(&v.integer_part().to_string(), locale.thousands_separator));
    if v.scale() > 0 {
        out.push(locale.decimal_mark);
        out.push_str(&v.fraction_digits());
    }
    out
}

fn place_symbol(amount: &str, symbol: &str, spaced: bool, locale: &Locale) -> String {
    match (locale.currency_placement, spaced) {
        (CurrencyPlacement::Prefix, _) => format!("{symbol}{amount}"),
        (CurrencyPlacement::Suffix, false) => format!("{amount}{symbol}"),
        (CurrencyPlacement::Suffix, true) => format!("{amount} {symbol}"),
    }
}

/// Renders a money amount. A fractional tail appears only when cents were
/// spoken (`minor > 0`) or the major amount itself has decimals; magnitude
/// words are kept as words (`$9.1 million`).
pub fn format_currency(
    major: &NumericValue,
    minor: &NumericValue,
    unit: &CurrencyUnit,
    magnitude_word: Option<&str>,
    locale: &Locale,
) -> String {
    if let Some(word) = magnitude_word {
        let amount = format!("{} {}", format_number(major, locale), word);
        return place_symbol(&amount, &unit.symbol, true, locale);
    }
    let digits = unit.minor_unit_digits as usize;
    let mut amount = group_thousands(&major.integer_part().to_string(), locale.thousands_separator);
    if digits > 0 && major.scale() > 0 {
        let mut frac = major.fraction_digits();
        while frac.len() < digits {
            frac.push('0');
        }
        amount.push(locale.decimal_mark);
        amount.push_str(&frac);
    } else if digits > 0 && !minor.is_zero() {
        amount.push(locale.decimal_mark);
        amount.push_str(&format!("{:0width$}", minor.integer_part(), width = digits));
    }
    place_symbol(&amount, &unit.symbol, false, locale)
}

pub fn format_quantity(
    value: &NumericValue,
    unit_word: &str,
    magnitude_word: Option<&str>,
    locale: &Locale,
) -> String {
    let mut out = format_number(value, locale);
    if let Some(m) = magnitude_word {
        out.push(' ');
        out.push_str(m);
    }
    if !unit_word.is_empty() {
        out.push(' ');
        out.push_str(unit_word);
    }
    out
}

pub fn format_expression(expr: &ParsedExpression, locale: &Locale) -> Result<String> {
    match &expr.payload {
        Payload::Year(y) => format_year(*y as u32),
        Payload::Time(t) => Ok(format_time(*t)),
        Payload::Money { major, minor, currency, magnitude_word } => {
            let unit = locale
                .currency(currency)
                .ok_or_else(|| Error::contract(format!("currency {currency} not in locale {locale}")))?;
            Ok(format_currency(major, minor, unit, magnitude_word.as_deref(), locale))
        }
        Payload::Quantity { value, unit_word, magnitude_word } => {
            Ok(format_quantity(value, unit_word, magnitude_word.as_deref(), locale))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(v: u64) -> NumericValue {
        NumericValue::integer(v)
    }

    #[test]
    fn grouping() {
        assert_eq!(group_thousands("1000000", ','), "1,000,000");
        assert_eq!(group_thousands("999", '.'), "999");
        assert_eq!(group_thousands("1234567", '.'), "1.234.567");
        assert_eq!(group_thousands("0", ','), "0");
    }

    #[test]
    fn years() {
        assert_eq!(format_year(1945).unwrap(), "1945");
        assert_eq!(format_year(2000).unwrap(), "2000");
        assert_eq!(format_year(1000).unwrap(), "1000");
        assert!(format_year(999).is_err());
        assert!(format_year(2101).is_err());
    }

    #[test]
    fn times() {
        assert_eq!(format_time(TimeOfDay::hm(19, 45)), "19:45");
        assert_eq!(format_time(TimeOfDay::hm(16, 0)), "16:00");
        assert_eq!(format_time(TimeOfDay::hm(7, 5)), "7:05");
        assert_eq!(format_time(TimeOfDay::hm(0, 0)), "0:00");
    }

    #[test]
    fn currency() {
        let en = Locale::en();
        let de = Locale::de();
        let usd = en.currency("USD").unwrap();
        let eur = de.currency("EUR").unwrap();
        assert_eq!(format_currency(&n(1000), &n(50), usd, None, &en), "$1,000.50");
        assert_eq!(format_currency(&n(1000), &n(50), eur, None, &de), "1.000,50€");
        let nine_one = NumericValue::new(91, 1).unwrap();
        assert_eq!(format_currency(&nine_one, &n(0), usd, Some("million"), &en), "$9.1 million");
        assert_eq!(format_currency(&n(0), &n(0), usd, None, &en), "$0");
        assert_eq!(format_currency(&n(0), &n(5), usd, None, &en), "$0.05");
        let nine_five = NumericValue::new(95, 1).unwrap();
        assert_eq!(format_currency(&nine_five, &n(0), usd, None, &en), "$9.50");
        assert_eq!(
            format_currency(&nine_one, &n(0), eur, Some("Millionen"), &de),
            "9,1 Millionen €"
        );
    }

    #[test]
    fn quantities() {
        let en = Locale::en();
        let de = Locale::de();
        assert_eq!(format_quantity(&n(2000), "pieces", None, &en), "2,000 pieces");
        assert_eq!(format_quantity(&n(2000), "Teile", None, &de), "2.000 Teile");
        assert_eq!(format_quantity(&n(7), "", None, &en), "7");
        assert_eq!(
            format_quantity(&NumericValue::new(12345, 1).unwrap(), "", None, &de),
            "1.234,5"
        );
        assert_eq!(format_quantity(&n(2), "people", Some("million"), &en), "2 million people");
    }

    proptest::proptest! {
        #[test]
        fn grouping_is_reversible(v in 0u64..=1_000_000_000) {
            for loc in [Locale::en(), Locale::de()] {
                let s = format_quantity(&n(v), "", None, &loc);
                let stripped: String = s.chars().filter(|c| *c != loc.thousands_separator).collect();
                proptest::prop_assert_eq!(stripped, v.to_string());
            }
        }

        #[test]
        fn locales_differ_only_in_separators(v in 0u128..10_000_000_000, scale in 0u8..4) {
            let value = NumericValue::new(v, scale).unwrap();
            let en = format_quantity(&value, "", None, &Locale::en());
            let de = format_quantity(&value, "", None, &Locale::de());
            let swapped: String = de
                .chars()
                .map(|c| match c { '.' => ',', ',' => '.', c => c })
                .collect();
            proptest::prop_assert_eq!(en, swapped);
        }

        #[test]
        fn time_shape(h in 0u8..24, m in 0u8..60) {
            let s = format_time(TimeOfDay::hm(h, m));
            let re = regex::Regex::new(r"^\d{1,2}:\d{2}$").unwrap();
            proptest::prop_assert!(re.is_match(&s));
        }
    }
}
