//! Clock phrases: "quarter to eight", "fünfzehn Uhr fünfundvierzig", "4pm".

use once_cell::sync::Lazy;
use regex::Regex;

use super::cardinal::match_cardinal;
use super::token::{Span, Token};
use super::value::{PeriodHint, TimeOfDay};
use super::{CandidateKind, CandidateParse, CandidateValue};
use crate::locale::{Language, Locale};

static EN_DIGITAL: Lazy<Regex> = Lazy::new(|| {
    Regex::new(r"^(\d{1,2})(?::(\d{2}))?(am|pm|a\.m\.?|p\.m\.?)?$").unwrap()
});
static DE_DIGITAL: Lazy<Regex> = Lazy::new(|| Regex::new(r"^(\d{1,2})(?:[:.](\d{2}))?$").unwrap());

/// Core match before any period marker: token end and as-spoken time.
#[derive(Debug, Clone, Copy)]
struct Core {
    end: usize,
    hour: u8,
    minute: u8,
    /// Digital readings ("seven thirty") are only clock times with a marker.
    needs_marker: bool,
    marker: Option<PeriodHint>,
}

fn word(tokens: &[Token], i: usize) -> Option<&str> {
    tokens.get(i).filter(|t| t.is_word).map(|t| t.lowercased.as_str())
}

fn word_in(tokens: &[Token], i: usize, set: &[&str]) -> bool {
    word(tokens, i).is_some_and(|w| set.contains(&w))
}

/// Integer cardinal in `range` starting at `i` (no pair readings, no decimals).
fn int_at(tokens: &[Token], i: usize, lang: Language, range: std::ops::RangeInclusive<u8>) -> Option<(u8, usize)> {
    let m = match_cardinal(tokens, i, lang, false)?;
    if m.magnitude_word.is_some() {
        return None;
    }
    let v = u8::try_from(m.value.as_u64()?).ok()?;
    range.contains(&v).then_some((v, m.end))
}

fn hour_before(h: u8) -> u8 {
    if h <= 1 {
        12
    } else {
        h - 1
    }
}

fn en_cores(tokens: &[Token], at: usize) -> Vec<Core> {
    let lang = Language::En;
    let mut out = Vec::new();
    let core = |end, hour, minute| Core { end, hour, minute, needs_marker: false, marker: None };

    // [a] quarter past|after|to|before H, half past H
    let i = if word(tokens, at) == Some("a") { at + 1 } else { at };
    match word(tokens, i) {
        Some("quarter") => {
            if word_in(tokens, i + 1, &["past", "after"]) {
                if let Some((h, e)) = int_at(tokens, i + 2, lang, 1..=12) {
                    out.push(core(e, h, 15));
                }
            } else if word_in(tokens, i + 1, &["to", "before", "of"]) {
                if let Some((h, e)) = int_at(tokens, i + 2, lang, 1..=12) {
                    out.push(core(e, hour_before(h), 45));
                }
            }
        }
        Some("half") if i == at && word(tokens, i + 1) == Some("past") => {
            if let Some((h, e)) = int_at(tokens, i + 2, lang, 1..=12) {
                out.push(core(e, h, 30));
            }
        }
        _ => {}
    }

    if let Some((m, e)) = int_at(tokens, at, lang, 1..=59) {
        // M minute(s) past|after|to|before H; bare "five past seven"
        let with_unit = word_in(tokens, e, &["minute", "minutes"]);
        let j = if with_unit { e + 1 } else { e };
        let past = word_in(tokens, j, &["past", "after"]);
        let to = word_in(tokens, j, &["to", "before", "of"]);
        let bare_ok = with_unit || (word(tokens, j) == Some("past") && matches!(m, 5 | 10 | 20 | 25));
        if (past || to) && bare_ok {
            if let Some((h, e2)) = int_at(tokens, j + 1, lang, 1..=12) {
                if past {
                    out.push(core(e2, h, m));
                } else {
                    out.push(core(e2, hour_before(h), 60 - m));
                }
            }
        }
    }

    if let Some((h, e)) = int_at(tokens, at, lang, 1..=12) {
        if word_in(tokens, e, &["o'clock", "oclock"]) {
            out.push(core(e + 1, h, 0));
        }
        // digital reading: H [oh D | MM] + marker
        out.push(Core { end: e, hour: h, minute: 0, needs_marker: true, marker: None });
        if word(tokens, e) == Some("oh") {
            if let Some((d, e2)) = int_at(tokens, e + 1, lang, 1..=9) {
                if e2 == e + 2 {
                    out.push(Core { end: e2, hour: h, minute: d, needs_marker: true, marker: None });
                }
            }
        } else if let Some((mm, e2)) = int_at(tokens, e, lang, 10..=59) {
            out.push(Core { end: e2, hour: h, minute: mm, needs_marker: true, marker: None });
        }
    }

    if let Some(t) = tokens.get(at) {
        if let Some(c) = EN_DIGITAL.captures(&t.lowercased) {
            let hour: u8 = c[1].parse().ok().unwrap_or(99);
            let minute: u8 = c.get(2).map_or(Some(0), |m| m.as_str().parse().ok()).unwrap_or(99);
            let marker = c.get(3).map(|m| marker_hint(m.as_str()));
            if (1..=12).contains(&hour) && minute < 60 {
                out.push(Core { end: at + 1, hour, minute, needs_marker: true, marker });
                if marker.is_none() && c.get(2).is_none() && word_in(tokens, at + 1, &["o'clock", "oclock"]) {
                    out.push(core(at + 2, hour, 0));
                }
            }
        }
    }
    out
}

fn marker_hint(m: &str) -> PeriodHint {
    if m.starts_with('a') {
        PeriodHint::ExplicitAm
    } else {
        PeriodHint::ExplicitPm
    }
}

fn de_cores(tokens: &[Token], at: usize) -> Vec<Core> {
    let lang = Language::De;
    let mut out = Vec::new();
    let core = |end, hour, minute| Core { end, hour, minute, needs_marker: false, marker: None };

    match word(tokens, at) {
        Some("viertel") => {
            if word(tokens, at + 1) == Some("nach") {
                if let Some((h, e)) = int_at(tokens, at + 2, lang, 1..=12) {
                    out.push(core(e, h, 15));
                }
            } else if word(tokens, at + 1) == Some("vor") {
                if let Some((h, e)) = int_at(tokens, at + 2, lang, 1..=12) {
                    out.push(core(e, hour_before(h), 45));
                }
            }
        }
        Some("dreiviertel") => {
            if let Some((h, e)) = int_at(tokens, at + 1, lang, 1..=12) {
                out.push(core(e, hour_before(h), 45));
            }
        }
        Some("halb") => {
            if let Some((h, e)) = int_at(tokens, at + 1, lang, 1..=12) {
                out.push(core(e, hour_before(h), 30));
            }
        }
        _ => {}
    }

    if let Some((m, e)) = int_at(tokens, at, lang, 1..=59) {
        let with_unit = word_in(tokens, e, &["minute", "minuten"]);
        let j = if with_unit { e + 1 } else { e };
        let after = word(tokens, j) == Some("nach");
        let before = word(tokens, j) == Some("vor");
        let bare_ok = with_unit || matches!(m, 5 | 10 | 20);
        if (after || before) && bare_ok {
            if word(tokens, j + 1) == Some("halb") {
                // fünf vor halb acht = 7:25
                if m < 30 {
                    if let Some((h, e2)) = int_at(tokens, j + 2, lang, 1..=12) {
                        let minute = if after { 30 + m } else { 30 - m };
                        out.push(core(e2, hour_before(h), minute));
                    }
                }
            } else if let Some((h, e2)) = int_at(tokens, j + 1, lang, 1..=12) {
                if after {
                    out.push(core(e2, h, m));
                } else {
                    out.push(core(e2, hour_before(h), 60 - m));
                }
            }
        }
    }

    // H Uhr [M]
    let uhr_core = |hour: u8, uhr_at: usize| -> Core {
        match int_at(tokens, uhr_at + 1, lang, 1..=59) {
            Some((m, e)) => core(e, hour, m),
            None => core(uhr_at + 1, hour, 0),
        }
    };
    if let Some((h, e)) = int_at(tokens, at, lang, 0..=23) {
        if word(tokens, e) == Some("uhr") {
            out.push(uhr_core(h, e));
        }
    }
    if let Some(t) = tokens.get(at) {
        if let Some(c) = DE_DIGITAL.captures(&t.lowercased) {
            let hour: u8 = c[1].parse().unwrap_or(99);
            let minute = c.get(2).map(|m| m.as_str().parse::<u8>().unwrap_or(99));
            if hour <= 23 && word(tokens, at + 1) == Some("uhr") {
                match minute {
                    Some(m) if m < 60 => out.push(core(at + 2, hour, m)),
                    Some(_) => {}
                    None => out.push(uhr_core(hour, at + 1)),
                }
            }
        }
    }
    out
}

/// Day-period phrase starting at `i`: returns its token end and hint.
fn period_phrase(tokens: &[Token], i: usize, lang: Language) -> Option<(usize, PeriodHint)> {
    let w0 = word(tokens, i)?;
    match lang {
        Language::En => {
            let w1 = word(tokens, i + 1);
            let w2 = word(tokens, i + 2);
            match (w0, w1, w2) {
                ("in", Some("the"), Some("morning")) => Some((i + 3, PeriodHint::Morning)),
                ("in", Some("the"), Some("afternoon")) => Some((i + 3, PeriodHint::Afternoon)),
                ("in", Some("the"), Some("evening")) => Some((i + 3, PeriodHint::Evening)),
                ("in", Some("the"), Some("night")) => Some((i + 3, PeriodHint::Night)),
                ("at", Some("night"), _) => Some((i + 2, PeriodHint::Night)),
                _ => None,
            }
        }
        Language::De => {
            let single = match w0 {
                "morgens" | "früh" | "vormittags" => Some(PeriodHint::Morning),
                "mittags" | "nachmittags" => Some(PeriodHint::Afternoon),
                "abends" => Some(PeriodHint::Evening),
                "nachts" => Some(PeriodHint::Night),
                _ => None,
            };
            if let Some(h) = single {
                return Some((i + 1, h));
            }
            let w1 = word(tokens, i + 1);
            let w2 = word(tokens, i + 2);
            match (w0, w1, w2) {
                ("am", Some("morgen" | "vormittag"), _) => Some((i + 2, PeriodHint::Morning)),
                ("am", Some("nachmittag" | "mittag"), _) => Some((i + 2, PeriodHint::Afternoon)),
                ("am", Some("abend"), _) => Some((i + 2, PeriodHint::Evening)),
                ("in", Some("der"), Some("nacht")) => Some((i + 3, PeriodHint::Night)),
                ("in", Some("der"), Some("früh")) => Some((i + 3, PeriodHint::Morning)),
                _ => None,
            }
        }
    }
}

pub fn parse_clock_phrase(tokens: &[Token], at: usize, locale: &Locale) -> Option<CandidateParse> {
    let lang = locale.language;
    let cores = match lang {
        Language::En => en_cores(tokens, at),
        Language::De => de_cores(tokens, at),
    };

    let mut best: Option<CandidateParse> = None;
    for mut core in cores {
        // am/pm tokens belong to the clock literal itself
        if lang == Language::En && core.marker.is_none() {
            if let Some(w) = word(tokens, core.end) {
                if matches!(w, "am" | "pm" | "a.m" | "p.m" | "a.m." | "p.m.") {
                    core.marker = Some(marker_hint(w));
                    core.end += 1;
                }
            }
        }
        // "halb acht Uhr": a trailing Uhr belongs to the time
        if lang == Language::De && word(tokens, core.end) == Some("uhr") {
            core.end += 1;
        }
        let mut period = core.marker;
        let mut period_span = None;
        let mut end = core.end;
        if period.is_none() {
            if let Some((e, hint)) = period_phrase(tokens, core.end, lang) {
                period = Some(hint);
                period_span = Some(Span::new(core.end, e));
                end = e;
            }
        }
        if core.needs_marker && period.is_none() {
            continue;
        }
        if core.marker.is_some() && !(1..=12).contains(&core.hour) {
            continue;
        }
        let Ok(time) = TimeOfDay::new(core.hour, core.minute, period.unwrap_or(PeriodHint::Unspecified)) else {
            continue;
        };
        if best.as_ref().is_some_and(|b| b.span.end >= end) {
            continue;
        }
        best = Some(CandidateParse {
            span: Span::new(at, end),
            period_span,
            kind: CandidateKind::ClockPhrase,
            value: CandidateValue::Time(time),
            magnitude_word: None,
            year_reading: false,
        });
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::token::tokenize;

    fn clock(text: &str, locale: &Locale) -> Option<(usize, u8, u8, PeriodHint)> {
        let toks = tokenize(text);
        let c = parse_clock_phrase(&toks, 0, locale)?;
        match c.value {
            CandidateValue::Time(t) => Some((c.span.end, t.hour, t.minute, t.period)),
            _ => unreachable!(),
        }
    }

    #[test]
    fn english_idioms() {
        let en = Locale::en();
        assert_eq!(clock("quarter to eight in the evening", &en), Some((6, 7, 45, PeriodHint::Evening)));
        assert_eq!(clock("quarter to eight", &en), Some((3, 7, 45, PeriodHint::Unspecified)));
        assert_eq!(clock("quarter past one", &en), Some((3, 1, 15, PeriodHint::Unspecified)));
        assert_eq!(clock("a quarter past one", &en), Some((4, 1, 15, PeriodHint::Unspecified)));
        assert_eq!(clock("half past one", &en), Some((3, 1, 30, PeriodHint::Unspecified)));
        assert_eq!(clock("quarter to one", &en), Some((3, 12, 45, PeriodHint::Unspecified)));
        assert_eq!(clock("two minutes past one", &en), Some((4, 1, 2, PeriodHint::Unspecified)));
        assert_eq!(clock("two minutes to one", &en), Some((4, 12, 58, PeriodHint::Unspecified)));
        assert_eq!(clock("five past seven", &en), Some((3, 7, 5, PeriodHint::Unspecified)));
        assert_eq!(clock("one o'clock", &en), Some((2, 1, 0, PeriodHint::Unspecified)));
        assert_eq!(clock("ten o'clock", &en), Some((2, 10, 0, PeriodHint::Unspecified)));
        assert_eq!(clock("10 o'clock", &en), Some((2, 10, 0, PeriodHint::Unspecified)));
    }

    #[test]
    fn english_markers() {
        let en = Locale::en();
        assert_eq!(clock("4pm", &en), Some((1, 4, 0, PeriodHint::ExplicitPm)));
        assert_eq!(clock("10am", &en), Some((1, 10, 0, PeriodHint::ExplicitAm)));
        assert_eq!(clock("7:45 pm", &en), Some((2, 7, 45, PeriodHint::ExplicitPm)));
        assert_eq!(clock("seven forty-five pm", &en), Some((4, 7, 45, PeriodHint::ExplicitPm)));
        assert_eq!(clock("seven oh five am", &en), Some((4, 7, 5, PeriodHint::ExplicitAm)));
        assert_eq!(clock("four p.m.", &en), Some((2, 4, 0, PeriodHint::ExplicitPm)));
        assert_eq!(clock("seven thirty in the morning", &en), Some((5, 7, 30, PeriodHint::Morning)));
    }

    #[test]
    fn english_rejections() {
        let en = Locale::en();
        assert_eq!(clock("seven thirty", &en), None);
        assert_eq!(clock("19:45", &en), None);
        assert_eq!(clock("one to two", &en), None);
        assert_eq!(clock("sixty minutes past one", &en), None);
        assert_eq!(clock("thirteen pm", &en), None);
        assert_eq!(clock("13pm", &en), None);
    }

    #[test]
    fn german_idioms() {
        let de = Locale::de();
        assert_eq!(clock("fünfzehn Uhr fünfundvierzig", &de), Some((3, 15, 45, PeriodHint::Unspecified)));
        assert_eq!(clock("halb acht", &de), Some((2, 7, 30, PeriodHint::Unspecified)));
        assert_eq!(clock("halb eins", &de), Some((2, 12, 30, PeriodHint::Unspecified)));
        assert_eq!(clock("ein Uhr", &de), Some((2, 1, 0, PeriodHint::Unspecified)));
        assert_eq!(clock("viertel nach eins", &de), Some((3, 1, 15, PeriodHint::Unspecified)));
        assert_eq!(clock("viertel vor eins", &de), Some((3, 12, 45, PeriodHint::Unspecified)));
        assert_eq!(clock("zwei Minuten nach eins", &de), Some((4, 1, 2, PeriodHint::Unspecified)));
        assert_eq!(clock("zwei Minuten vor eins", &de), Some((4, 12, 58, PeriodHint::Unspecified)));
        assert_eq!(clock("fünf vor halb acht", &de), Some((4, 7, 25, PeriodHint::Unspecified)));
        assert_eq!(clock("acht Uhr abends", &de), Some((3, 8, 0, PeriodHint::Evening)));
        assert_eq!(clock("halb acht am Abend", &de), Some((4, 7, 30, PeriodHint::Evening)));
        assert_eq!(clock("15.45 Uhr", &de), Some((2, 15, 45, PeriodHint::Unspecified)));
        assert_eq!(clock("null Uhr", &de), Some((2, 0, 0, PeriodHint::Unspecified)));
        // "am" is a preposition in German, never a marker
        assert_eq!(clock("acht am", &de), None);
        assert_eq!(clock("fünfzehn Uhr sechzig", &de).map(|c| c.0), Some(2));
    }
}
