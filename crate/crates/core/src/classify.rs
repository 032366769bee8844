//! Context classification of candidate parses into the four expression
//! types, plus 12h → 24h time resolution.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::grammar::{
    unit_word_after, CandidateKind, CandidateParse, CandidateValue, NumericValue, Span, TimeOfDay,
    Token,
};
use crate::locale::{Language, Locale};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExpressionType {
    Year,
    Timestamp,
    Currency,
    Quantity,
}

impl ExpressionType {
    pub const ALL: [ExpressionType; 4] = [
        ExpressionType::Year,
        ExpressionType::Timestamp,
        ExpressionType::Currency,
        ExpressionType::Quantity,
    ];

    /// Identifier used in manifests and reports.
    pub fn key(self) -> &'static str {
        match self {
            ExpressionType::Year => "year",
            ExpressionType::Timestamp => "timestamp",
            ExpressionType::Currency => "currency",
            ExpressionType::Quantity => "quantity",
        }
    }

    /// Natural-language name used in prompts.
    pub fn display_name(self) -> &'static str {
        match self {
            ExpressionType::Year => "year",
            ExpressionType::Timestamp => "timestamp",
            ExpressionType::Currency => "currency amount",
            ExpressionType::Quantity => "quantity",
        }
    }
}

impl fmt::Display for ExpressionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl FromStr for ExpressionType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        ExpressionType::ALL
            .into_iter()
            .find(|t| t.key() == s || t.display_name() == s)
            .ok_or_else(|| Error::contract(format!("unknown expression type `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Payload {
    /// 1000..=2100
    Year(u16),
    /// Always in resolved 24-hour form.
    Time(TimeOfDay),
    Money {
        major: NumericValue,
        minor: NumericValue,
        currency: String,
        magnitude_word: Option<String>,
    },
    Quantity {
        value: NumericValue,
        unit_word: String,
        magnitude_word: Option<String>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedExpression {
    pub span: Span,
    pub payload: Payload,
}

impl ParsedExpression {
    pub fn expr_type(&self) -> ExpressionType {
        match self.payload {
            Payload::Year(_) => ExpressionType::Year,
            Payload::Time(_) => ExpressionType::Timestamp,
            Payload::Money { .. } => ExpressionType::Currency,
            Payload::Quantity { .. } => ExpressionType::Quantity,
        }
    }
}

pub const YEAR_MIN: u64 = 1000;
pub const YEAR_MAX: u64 = 2100;

const EN_YEAR_CUES: &[&str] = &["in", "since", "year", "by", "from", "until"];
const DE_YEAR_CUES: &[&str] = &["jahr", "jahre", "seit", "bis"];

fn has_year_cue(tokens: &[Token], start: usize, language: Language) -> bool {
    let Some(prev) = start.checked_sub(1).and_then(|i| tokens.get(i)) else {
        return false;
    };
    let cues = match language {
        Language::En => EN_YEAR_CUES,
        Language::De => DE_YEAR_CUES,
    };
    prev.is_word && cues.contains(&prev.lowercased.as_str())
}

pub fn classify(candidate: &CandidateParse, tokens: &[Token], locale: &Locale) -> ParsedExpression {
    let span = candidate.span;
    match (&candidate.kind, &candidate.value) {
        (CandidateKind::CurrencyPhrase, CandidateValue::Money { major, minor, currency, .. }) => {
            ParsedExpression {
                span,
                payload: Payload::Money {
                    major: *major,
                    minor: *minor,
                    currency: currency.clone(),
                    magnitude_word: candidate.magnitude_word.clone(),
                },
            }
        }
        (CandidateKind::ClockPhrase, CandidateValue::Time(t)) => {
            ParsedExpression { span, payload: Payload::Time(resolve_time(*t)) }
        }
        (_, CandidateValue::Number(v)) => {
            let year = v
                .as_u64()
                .filter(|y| (YEAR_MIN..=YEAR_MAX).contains(y))
                .filter(|_| candidate.magnitude_word.is_none())
                .filter(|_| {
                    candidate.year_reading || has_year_cue(tokens, span.start, locale.language)
                });
            if let Some(y) = year {
                return ParsedExpression { span, payload: Payload::Year(y as u16) };
            }
            match unit_word_after(tokens, span.end, locale.language) {
                Some(unit) => ParsedExpression {
                    span: Span::new(span.start, span.end + 1),
                    payload: Payload::Quantity {
                        value: *v,
                        unit_word: unit.surface.clone(),
                        magnitude_word: candidate.magnitude_word.clone(),
                    },
                },
                None => ParsedExpression {
                    span,
                    payload: Payload::Quantity {
                        value: *v,
                        unit_word: String::new(),
                        magnitude_word: candidate.magnitude_word.clone(),
                    },
                },
            }
        }
        (kind, value) => unreachable!("candidate kind {kind:?} with payload {value:?}"),
    }
}

/// Maps an as-spoken time to 24-hour form. Afternoon-type hints add 12 to
/// hours 1..=11, morning-type hints map 12 to 0, and unspecified times are
/// left as spoken. The result carries an unspecified hint.
pub fn resolve_time(t: TimeOfDay) -> TimeOfDay {
    let hour = match t.hour {
        h @ 1..=11 if t.period.is_after_noon() => h + 12,
        12 if t.period.is_before_noon() => 0,
        h => h,
    };
    TimeOfDay { hour, minute: t.minute, period: crate::grammar::PeriodHint::Unspecified }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::{scan_tokens, tokenize, PeriodHint};

    fn classify_all(text: &str, locale: &Locale) -> Vec<ParsedExpression> {
        let toks = tokenize(text);
        scan_tokens(&toks, locale).iter().map(|c| classify(c, &toks, locale)).collect()
    }

    #[test]
    fn year_by_cue_or_reading() {
        let en = Locale::en();
        assert_eq!(classify_all("in nineteen forty-five", &en)[0].payload, Payload::Year(1945));
        assert_eq!(classify_all("nineteen forty-five", &en)[0].payload, Payload::Year(1945));
        assert_eq!(classify_all("since two thousand five", &en)[0].payload, Payload::Year(2005));
        assert_eq!(
            classify_all("im Jahr zweitausendzwölf", &Locale::de())[0].payload,
            Payload::Year(2012)
        );
        assert_eq!(
            classify_all("neunzehnhundertneunundachtzig fiel die Mauer", &Locale::de())[0].payload,
            Payload::Year(1989)
        );
    }

    #[test]
    fn quantity_with_unit() {
        let e = &classify_all("two thousand pieces", &Locale::en())[0];
        assert_eq!(e.span, Span::new(0, 3));
        assert_eq!(
            e.payload,
            Payload::Quantity {
                value: NumericValue::integer(2000),
                unit_word: "pieces".into(),
                magnitude_word: None
            }
        );
        let e = &classify_all("zweitausend Teile", &Locale::de())[0];
        assert_eq!(e.expr_type(), ExpressionType::Quantity);
        // no cue and no pair reading: a quantity, not a year
        let e = &classify_all("we sold one thousand nine hundred forty-five", &Locale::en())[0];
        assert_eq!(e.expr_type(), ExpressionType::Quantity);
    }

    #[test]
    fn year_never_with_decimals_or_magnitude() {
        let en = Locale::en();
        assert_eq!(classify_all("in two million", &en)[0].expr_type(), ExpressionType::Quantity);
        assert_eq!(
            classify_all("in nineteen point five", &en)[0].expr_type(),
            ExpressionType::Quantity
        );
    }

    #[test]
    fn currency_whole_dollar_reading() {
        let e = &classify_all("nineteen forty-five dollars", &Locale::en())[0];
        match &e.payload {
            Payload::Money { major, minor, currency, .. } => {
                assert_eq!(*major, NumericValue::integer(1945));
                assert!(minor.is_zero());
                assert_eq!(currency, "USD");
            }
            p => panic!("{p:?}"),
        }
    }

    #[test]
    fn resolve_examples() {
        let t = |h, m, p| TimeOfDay::new(h, m, p).unwrap();
        assert_eq!(resolve_time(t(7, 45, PeriodHint::Evening)), TimeOfDay::hm(19, 45));
        assert_eq!(resolve_time(t(4, 0, PeriodHint::ExplicitPm)), TimeOfDay::hm(16, 0));
        assert_eq!(resolve_time(t(10, 0, PeriodHint::Unspecified)), TimeOfDay::hm(10, 0));
        assert_eq!(resolve_time(t(15, 45, PeriodHint::Unspecified)), TimeOfDay::hm(15, 45));
        assert_eq!(resolve_time(t(12, 30, PeriodHint::ExplicitAm)), TimeOfDay::hm(0, 30));
        assert_eq!(resolve_time(t(12, 30, PeriodHint::Evening)), TimeOfDay::hm(12, 30));
        assert_eq!(resolve_time(t(15, 0, PeriodHint::ExplicitPm)), TimeOfDay::hm(15, 0));
    }

    proptest::proptest! {
        #[test]
        fn resolve_is_idempotent_and_in_range(h in 0u8..24, m in 0u8..60, p in 0usize..7) {
            let hints = [
                PeriodHint::Morning, PeriodHint::Afternoon, PeriodHint::Evening, PeriodHint::Night,
                PeriodHint::ExplicitAm, PeriodHint::ExplicitPm, PeriodHint::Unspecified,
            ];
            let once = resolve_time(TimeOfDay::new(h, m, hints[p]).unwrap());
            proptest::prop_assert!(once.hour <= 23);
            proptest::prop_assert_eq!(resolve_time(once), once);
        }

        #[test]
        fn classify_is_total(words in proptest::collection::vec(
            proptest::sample::select(vec![
                "in", "one", "two", "nineteen", "forty", "five", "thousand", "million", "point",
                "dollars", "cents", "and", "quarter", "to", "past", "o'clock", "pieces", "pm",
                "the", "evening", "hundred", "oh", "minutes",
            ]), 0..12)) {
            let s = words.join(" ");
            let en = Locale::en();
            let toks = tokenize(&s);
            let cands = scan_tokens(&toks, &en);
            let exprs: Vec<_> = cands.iter().map(|c| classify(c, &toks, &en)).collect();
            proptest::prop_assert_eq!(exprs.len(), cands.len());
            for w in cands.windows(2) {
                proptest::prop_assert!(w[0].span.end <= w[1].span.start);
            }
            for e in &exprs {
                if let Payload::Year(y) = e.payload {
                    proptest::prop_assert!((1000..=2100).contains(&y));
                }
            }
        }
    }
}
