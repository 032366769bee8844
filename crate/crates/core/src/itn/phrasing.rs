//! Timestamp phrasing families ("quarter past one", "halb zwei") and
//! time-of-day verbalization.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::spell;
use crate::error::{Error, Result};
use crate::grammar::{PeriodHint, TimeOfDay};
use crate::locale::{Language, Locale};

/// How a time of day is spoken. German renders the families with their
/// idiomatic equivalents: `HalfPast` is "halb" + next hour, `Digital` is the
/// 24-hour "H Uhr M" reading.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TimeFamily {
    OClock,
    QuarterPast,
    HalfPast,
    QuarterTo,
    MinutesPast,
    MinutesTo,
    Digital,
}

impl TimeFamily {
    pub const ALL: [TimeFamily; 7] = [
        TimeFamily::OClock,
        TimeFamily::QuarterPast,
        TimeFamily::HalfPast,
        TimeFamily::QuarterTo,
        TimeFamily::MinutesPast,
        TimeFamily::MinutesTo,
        TimeFamily::Digital,
    ];

    /// The six families used for timestamp prompts.
    pub const PROMPT: [TimeFamily; 6] = [
        TimeFamily::OClock,
        TimeFamily::QuarterPast,
        TimeFamily::HalfPast,
        TimeFamily::QuarterTo,
        TimeFamily::MinutesPast,
        TimeFamily::MinutesTo,
    ];

    pub fn key(self) -> &'static str {
        match self {
            TimeFamily::OClock => "o-clock",
            TimeFamily::QuarterPast => "quarter-past",
            TimeFamily::HalfPast => "half-past",
            TimeFamily::QuarterTo => "quarter-to",
            TimeFamily::MinutesPast => "minutes-past",
            TimeFamily::MinutesTo => "minutes-to",
            TimeFamily::Digital => "digital",
        }
    }

    /// Whether the family can express `minute`.
    pub fn covers(self, minute: u8) -> bool {
        match self {
            TimeFamily::OClock => minute == 0,
            TimeFamily::QuarterPast => minute == 15,
            TimeFamily::HalfPast => minute == 30,
            TimeFamily::QuarterTo => minute == 45,
            TimeFamily::MinutesPast => (1..30).contains(&minute),
            TimeFamily::MinutesTo => (31..60).contains(&minute),
            TimeFamily::Digital => minute < 60,
        }
    }

    /// First family able to express `minute`, in declaration order.
    pub fn default_for(minute: u8) -> TimeFamily {
        TimeFamily::ALL.into_iter().find(|f| f.covers(minute)).unwrap_or(TimeFamily::Digital)
    }
}

impl fmt::Display for TimeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl FromStr for TimeFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TimeFamily::ALL
            .into_iter()
            .find(|f| f.key() == s)
            .ok_or_else(|| Error::contract(format!("unknown time family `{s}`")))
    }
}

/// One instantiated template: the phrase and the as-spoken time it denotes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TimestampPhrasing {
    pub family: TimeFamily,
    pub phrase: String,
    /// As spoken, before any day-period resolution.
    pub time: TimeOfDay,
}

/// Minute offset used by the minutes-past/-to templates.
pub const PROMPT_MINUTE_OFFSET: u8 = 2;

fn twelve(hour: u8) -> u8 {
    match hour % 12 {
        0 => 12,
        h => h,
    }
}

fn hour_word(hour: u8, language: Language) -> String {
    spell::integer(hour as u128, language)
}

fn minute_phrase(m: u8, language: Language) -> String {
    match (language, m) {
        (Language::En, 1) => "one minute".into(),
        (Language::En, m) => format!("{} minutes", spell::en_integer(m as u128)),
        (Language::De, 1) => "eine Minute".into(),
        (Language::De, m) => format!("{} Minuten", spell::de_integer(m as u128)),
    }
}

/// Core phrase for an as-spoken 12-hour `hour` and `minute`, without any
/// day-period words.
fn core_phrase(family: TimeFamily, hour: u8, minute: u8, language: Language) -> Result<String> {
    if !family.covers(minute) || !(1..=12).contains(&hour) {
        return Err(Error::contract(format!(
            "family {family} cannot express {hour}:{minute:02}"
        )));
    }
    let next = twelve(hour + 1);
    let phrase = match language {
        Language::En => match family {
            TimeFamily::OClock => format!("{} o'clock", hour_word(hour, language)),
            TimeFamily::QuarterPast => format!("quarter past {}", hour_word(hour, language)),
            TimeFamily::HalfPast => format!("half past {}", hour_word(hour, language)),
            TimeFamily::QuarterTo => format!("quarter to {}", hour_word(next, language)),
            TimeFamily::MinutesPast => {
                format!("{} past {}", minute_phrase(minute, language), hour_word(hour, language))
            }
            TimeFamily::MinutesTo => {
                format!("{} to {}", minute_phrase(60 - minute, language), hour_word(next, language))
            }
            TimeFamily::Digital => match minute {
                0 => hour_word(hour, language),
                1..=9 => format!("{} oh {}", hour_word(hour, language), spell::en_integer(minute as u128)),
                _ => format!("{} {}", hour_word(hour, language), spell::en_integer(minute as u128)),
            },
        },
        Language::De => match family {
            TimeFamily::OClock | TimeFamily::Digital => {
                format!("{} Uhr", spell::integer_attributive(hour as u128, language, false))
            }
            TimeFamily::QuarterPast => format!("viertel nach {}", hour_word(hour, language)),
            TimeFamily::HalfPast => format!("halb {}", hour_word(next, language)),
            TimeFamily::QuarterTo => format!("viertel vor {}", hour_word(next, language)),
            TimeFamily::MinutesPast => {
                format!("{} nach {}", minute_phrase(minute, language), hour_word(hour, language))
            }
            TimeFamily::MinutesTo => {
                format!("{} vor {}", minute_phrase(60 - minute, language), hour_word(next, language))
            }
        },
    };
    Ok(phrase)
}

impl TimeFamily {
    /// Template instance for spoken hour `hour` (1..=12). The minutes
    /// families use [`PROMPT_MINUTE_OFFSET`].
    pub fn instantiate(self, hour: u8, locale: &Locale) -> Result<TimestampPhrasing> {
        let minute = match self {
            TimeFamily::OClock | TimeFamily::Digital => 0,
            TimeFamily::QuarterPast => 15,
            TimeFamily::HalfPast => 30,
            TimeFamily::QuarterTo => 45,
            TimeFamily::MinutesPast => PROMPT_MINUTE_OFFSET,
            TimeFamily::MinutesTo => 60 - PROMPT_MINUTE_OFFSET,
        };
        // "to"-families name the following hour
        let spoken = match self {
            TimeFamily::QuarterTo | TimeFamily::MinutesTo => match hour {
                1 => 12,
                h => h - 1,
            },
            TimeFamily::HalfPast if locale.language == Language::De => match hour {
                1 => 12,
                h => h - 1,
            },
            _ => hour,
        };
        let phrase = core_phrase(self, spoken, minute, locale.language)?;
        let phrase = match (self, locale.language) {
            (TimeFamily::Digital, Language::En) => format!("{phrase} am"),
            _ => phrase,
        };
        let period = match (self, locale.language) {
            (TimeFamily::Digital, Language::En) => PeriodHint::ExplicitAm,
            _ => PeriodHint::Unspecified,
        };
        Ok(TimestampPhrasing { family: self, phrase, time: TimeOfDay::new(spoken, minute, period)? })
    }
}

/// Every prompt family instantiated for hours 1..=12, in family order.
/// `hour` in the templates is the hour word that is spoken, so German
/// "halb zwei" is the hour-2 instance of `HalfPast`.
pub fn enumerate_timestamp_phrasings(locale: &Locale) -> Vec<TimestampPhrasing> {
    TimeFamily::PROMPT
        .into_iter()
        .flat_map(|family| (1..=12).filter_map(move |h| family.instantiate(h, locale).ok()))
        .collect()
}

fn period_words(hour24: u8, language: Language) -> &'static str {
    match (language, hour24) {
        (Language::En, 0..=11) => "in the morning",
        (Language::En, 12..=17) => "in the afternoon",
        (Language::En, _) => "in the evening",
        (Language::De, 0..=11) => "morgens",
        (Language::De, 12..=17) => "nachmittags",
        (Language::De, _) => "abends",
    }
}

/// Speaks a 24-hour time so that parsing and day-period resolution give it
/// back. English digital readings carry am/pm; German digital readings are
/// 24-hour and carry no period words.
pub fn verbalize_time(t: TimeOfDay, locale: &Locale, family: TimeFamily) -> Result<String> {
    let language = locale.language;
    if t.hour > 23 || t.minute > 59 {
        return Err(Error::contract(format!("invalid time {}:{}", t.hour, t.minute)));
    }
    if family == TimeFamily::Digital && language == Language::De {
        let hour = spell::integer_attributive(t.hour as u128, language, false);
        return Ok(match t.minute {
            0 => format!("{hour} Uhr"),
            m => format!("{hour} Uhr {}", spell::de_integer(m as u128)),
        });
    }
    let phrase = core_phrase(family, twelve(t.hour), t.minute, language)?;
    Ok(if family == TimeFamily::Digital {
        format!("{phrase} {}", if t.hour < 12 { "am" } else { "pm" })
    } else {
        format!("{phrase} {}", period_words(t.hour, language))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn phrases(locale: &Locale, hour: u8) -> Vec<String> {
        TimeFamily::PROMPT
            .into_iter()
            .map(|f| f.instantiate(hour, locale).unwrap().phrase)
            .collect()
    }

    #[test]
    fn english_hour_one() {
        assert_eq!(
            phrases(&Locale::en(), 1),
            [
                "one o'clock",
                "quarter past one",
                "half past one",
                "quarter to one",
                "two minutes past one",
                "two minutes to one"
            ]
        );
    }

    #[test]
    fn german_hour_one() {
        let de = Locale::de();
        let got = phrases(&de, 1);
        assert_eq!(got[0], "ein Uhr");
        assert_eq!(got[1], "viertel nach eins");
        assert_eq!(got[3], "viertel vor eins");
        assert_eq!(got[4], "zwei Minuten nach eins");
        assert_eq!(got[5], "zwei Minuten vor eins");
        assert_eq!(TimeFamily::HalfPast.instantiate(2, &de).unwrap().phrase, "halb zwei");
    }

    #[test]
    fn at_least_seventy_two() {
        for locale in [Locale::en(), Locale::de()] {
            let all = enumerate_timestamp_phrasings(&locale);
            assert_eq!(all.len(), 72);
        }
    }

    #[test]
    fn as_spoken_times() {
        let en = Locale::en();
        let q = TimeFamily::QuarterTo.instantiate(1, &en).unwrap();
        assert_eq!((q.time.hour, q.time.minute), (12, 45));
        let h = TimeFamily::HalfPast.instantiate(8, &Locale::de()).unwrap();
        assert_eq!(h.phrase, "halb acht");
        assert_eq!((h.time.hour, h.time.minute), (7, 30));
    }

    #[test]
    fn verbalized_times() {
        let en = Locale::en();
        let t = TimeOfDay::hm(19, 45);
        assert_eq!(
            verbalize_time(t, &en, TimeFamily::QuarterTo).unwrap(),
            "quarter to eight in the evening"
        );
        assert_eq!(verbalize_time(t, &en, TimeFamily::Digital).unwrap(), "seven forty-five pm");
        assert_eq!(
            verbalize_time(TimeOfDay::hm(7, 5), &en, TimeFamily::Digital).unwrap(),
            "seven oh five am"
        );
        let de = Locale::de();
        assert_eq!(
            verbalize_time(TimeOfDay::hm(15, 45), &de, TimeFamily::Digital).unwrap(),
            "fünfzehn Uhr fünfundvierzig"
        );
        assert_eq!(
            verbalize_time(TimeOfDay::hm(19, 30), &de, TimeFamily::HalfPast).unwrap(),
            "halb acht abends"
        );
        assert!(verbalize_time(t, &en, TimeFamily::OClock).is_err());
    }
}
