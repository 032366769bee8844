//! Locale presets: separators, currency placement and currency units.
//!
//! Two presets ship built in (`en`, `de`). Further presets are loaded from a
//! TOML file that names a base language and overrides or extends it:
//!
//! ```toml
//! name = "en-gb"
//! base = "en"
//! [[currencies]]
//! code = "CHF"
//! symbol = "CHF"
//! minor_unit_digits = 2
//! words = ["franc", "francs"]
//! minor_words = ["rappen"]
//! ```

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Language {
    En,
    De,
}

impl Language {
    pub fn code(self) -> &'static str {
        match self {
            Language::En => "en",
            Language::De => "de",
        }
    }
}

impl FromStr for Language {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "en" | "english" => Ok(Language::En),
            "de" | "german" | "deutsch" => Ok(Language::De),
            other => Err(Error::Config(format!("unknown language `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CurrencyPlacement {
    /// `$1,000.50`
    Prefix,
    /// `1.000,50€`
    Suffix,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurrencyUnit {
    pub code: String,
    pub symbol: String,
    pub minor_unit_digits: u8,
    /// Spoken names of the major unit, lowercase (`dollar`, `dollars`).
    #[serde(default)]
    pub words: Vec<String>,
    /// Spoken names of the minor unit, lowercase (`cent`, `cents`).
    #[serde(default)]
    pub minor_words: Vec<String>,
}

impl CurrencyUnit {
    fn new(code: &str, symbol: &str, words: &[&str], minor_words: &[&str]) -> Self {
        CurrencyUnit {
            code: code.to_string(),
            symbol: symbol.to_string(),
            minor_unit_digits: 2,
            words: words.iter().map(|w| w.to_string()).collect(),
            minor_words: minor_words.iter().map(|w| w.to_string()).collect(),
        }
    }

    fn validate(&self) -> Result<()> {
        if self.symbol.is_empty() {
            return Err(Error::Config(format!("currency {} has an empty symbol", self.code)));
        }
        if self.symbol.chars().any(|c| c.is_ascii_digit() || c.is_whitespace()) {
            return Err(Error::Config(format!(
                "currency {} symbol `{}` may not contain digits or whitespace",
                self.code, self.symbol
            )));
        }
        if !matches!(self.minor_unit_digits, 0 | 2) {
            return Err(Error::Config(format!(
                "currency {} minor_unit_digits must be 0 or 2",
                self.code
            )));
        }
        if self.words.is_empty() {
            return Err(Error::Config(format!("currency {} has no spoken names", self.code)));
        }
        Ok(())
    }

    /// Spoken major-unit name for a given amount (singular for exactly one).
    pub fn word_for(&self, one: bool) -> &str {
        pick_number(&self.words, one)
    }

    pub fn minor_word_for(&self, one: bool) -> Option<&str> {
        if self.minor_words.is_empty() {
            None
        } else {
            Some(pick_number(&self.minor_words, one))
        }
    }
}

fn pick_number(words: &[String], one: bool) -> &str {
    if one || words.len() == 1 {
        &words[0]
    } else {
        &words[1]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Locale {
    pub name: String,
    pub language: Language,
    pub thousands_separator: char,
    pub decimal_mark: char,
    pub currency_placement: CurrencyPlacement,
    pub currencies: Vec<CurrencyUnit>,
}

impl Locale {
    pub fn en() -> Self {
        Locale {
            name: "en".into(),
            language: Language::En,
            thousands_separator: ',',
            decimal_mark: '.',
            currency_placement: CurrencyPlacement::Prefix,
            currencies: vec![
                CurrencyUnit::new("USD", "$", &["dollar", "dollars"], &["cent", "cents"]),
                CurrencyUnit::new("EUR", "€", &["euro", "euros"], &["cent", "cents"]),
                CurrencyUnit::new("GBP", "£", &["pound", "pounds"], &["penny", "pence"]),
            ],
        }
    }

    pub fn de() -> Self {
        Locale {
            name: "de".into(),
            language: Language::De,
            thousands_separator: '.',
            decimal_mark: ',',
            currency_placement: CurrencyPlacement::Suffix,
            currencies: vec![
                CurrencyUnit::new("EUR", "€", &["euro"], &["cent"]),
                CurrencyUnit::new("USD", "$", &["dollar"], &["cent"]),
                CurrencyUnit::new("GBP", "£", &["pfund"], &["penny", "pence"]),
            ],
        }
    }

    pub fn preset(language: Language) -> Self {
        match language {
            Language::En => Self::en(),
            Language::De => Self::de(),
        }
    }

    pub fn currency(&self, code: &str) -> Option<&CurrencyUnit> {
        self.currencies.iter().find(|c| c.code == code)
    }

    pub fn currency_by_symbol(&self, symbol: &str) -> Option<&CurrencyUnit> {
        self.currencies.iter().find(|c| c.symbol == symbol)
    }

    /// Currency whose major-unit name matches the lowercase word.
    pub fn currency_by_word(&self, word: &str) -> Option<&CurrencyUnit> {
        self.currencies.iter().find(|c| c.words.iter().any(|w| w == word))
    }

    pub fn validate(&self) -> Result<()> {
        if self.thousands_separator == self.decimal_mark {
            return Err(Error::Config(
                "thousands separator and decimal mark must differ".into(),
            ));
        }
        for sep in [self.thousands_separator, self.decimal_mark] {
            if sep.is_alphanumeric() {
                return Err(Error::Config(format!("separator `{sep}` must not be alphanumeric")));
            }
        }
        for (i, c) in self.currencies.iter().enumerate() {
            c.validate()?;
            if self.currencies[..i].iter().any(|o| o.code == c.code) {
                return Err(Error::Config(format!("duplicate currency code {}", c.code)));
            }
        }
        Ok(())
    }

    pub fn from_config_str(text: &str) -> Result<Self> {
        let cfg: LocaleConfig =
            toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        cfg.build()
    }

    pub fn from_config_file(path: impl AsRef<Path>) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_config_str(&text)
    }
}

impl FromStr for Locale {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(Locale::preset(s.parse()?))
    }
}

impl fmt::Display for Locale {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct LocaleConfig {
    name: Option<String>,
    base: Language,
    thousands_separator: Option<char>,
    decimal_mark: Option<char>,
    currency_placement: Option<CurrencyPlacement>,
    #[serde(default)]
    currencies: Vec<CurrencyUnit>,
}

impl LocaleConfig {
    fn build(self) -> Result<Locale> {
        let mut locale = Locale::preset(self.base);
        if let Some(name) = self.name {
            locale.name = name;
        }
        if let Some(c) = self.thousands_separator {
            locale.thousands_separator = c;
        }
        if let Some(c) = self.decimal_mark {
            locale.decimal_mark = c;
        }
        if let Some(p) = self.currency_placement {
            locale.currency_placement = p;
        }
        for mut unit in self.currencies {
            unit.words.iter_mut().for_each(|w| *w = w.to_lowercase());
            unit.minor_words.iter_mut().for_each(|w| *w = w.to_lowercase());
            match locale.currencies.iter_mut().find(|c| c.code == unit.code) {
                Some(existing) => *existing = unit,
                None => locale.currencies.push(unit),
            }
        }
        locale.validate()?;
        Ok(locale)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_are_valid() {
        Locale::en().validate().unwrap();
        Locale::de().validate().unwrap();
        assert_eq!(Locale::en().thousands_separator, ',');
        assert_eq!(Locale::de().decimal_mark, ',');
    }

    #[test]
    fn config_adds_currency() {
        let loc = Locale::from_config_str(
            r#"
            name = "en-ch"
            base = "en"
            [[currencies]]
            code = "CHF"
            symbol = "CHF"
            minor_unit_digits = 2
            words = ["Franc", "francs"]
            minor_words = ["rappen"]
            "#,
        )
        .unwrap();
        assert_eq!(loc.name, "en-ch");
        assert_eq!(loc.currency_by_word("franc").unwrap().code, "CHF");
        assert!(loc.currency("USD").is_some());
    }

    #[test]
    fn config_rejects_equal_separators() {
        let err = Locale::from_config_str("base = \"de\"\nthousands_separator = \",\"").unwrap_err();
        assert!(matches!(err, Error::Config(_)));
    }

    #[test]
    fn config_rejects_bad_minor_digits() {
        let err = Locale::from_config_str(
            "base = \"en\"\n[[currencies]]\ncode=\"X\"\nsymbol=\"X\"\nminor_unit_digits=3\nwords=[\"x\"]",
        )
        .unwrap_err();
        assert!(err.to_string().contains("minor_unit_digits"));
    }

    #[test]
    fn currency_word_numbering() {
        let en = Locale::en();
        let usd = en.currency("USD").unwrap();
        assert_eq!(usd.word_for(true), "dollar");
        assert_eq!(usd.word_for(false), "dollars");
        let de = Locale::de();
        assert_eq!(de.currency("EUR").unwrap().word_for(false), "euro");
    }
}
