//! Deterministic offline clients.

use std::collections::HashMap;
use std::sync::Mutex;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::client::{Audio, SpeechSynthesizer, TextGenerator};
use super::prompt::build_conversion_prompt;
use crate::classify::{ExpressionType, ParsedExpression, Payload};
use crate::error::{Error, Result};
use crate::format::{format_expression, format_time};
use crate::grammar::{lexicon, NumericValue, Span, TimeOfDay};
use crate::itn::{enumerate_timestamp_phrasings, verbalize_with, TimeFamily};
use crate::locale::{Language, Locale};

/// Splits a conversion prompt into its instruction and sentence lines.
pub fn conversion_sentences(prompt: &str) -> Option<Vec<&str>> {
    let rest = ExpressionType::ALL
        .into_iter()
        .find_map(|t| prompt.strip_prefix(&build_conversion_prompt(t)))?;
    Some(rest.lines().map(str::trim).filter(|l| !l.is_empty()).collect())
}

/// Answers sentence prompts with fixed sentences and conversion prompts by
/// lookup; unknown sentences are echoed back.
#[derive(Debug, Clone, Default)]
pub struct CannedGenerator {
    pairs: Vec<(String, String)>,
}

impl CannedGenerator {
    pub fn new<A: Into<String>, B: Into<String>>(pairs: impl IntoIterator<Item = (A, B)>) -> Self {
        CannedGenerator { pairs: pairs.into_iter().map(|(a, b)| (a.into(), b.into())).collect() }
    }
}

impl TextGenerator for CannedGenerator {
    fn complete(&self, prompt: &str, _seed: u64) -> Result<String> {
        if let Some(lines) = conversion_sentences(prompt) {
            let out: Vec<&str> = lines
                .iter()
                .map(|l| self.pairs.iter().find(|(v, _)| v == l).map_or(*l, |(_, f)| f.as_str()))
                .collect();
            return Ok(out.join("\n"));
        }
        Ok(self.pairs.iter().map(|(v, _)| v.as_str()).collect::<Vec<_>>().join("\n"))
    }
}

/// Always fails, for exercising error paths.
#[derive(Debug, Clone, Default)]
pub struct FailingGenerator;

impl TextGenerator for FailingGenerator {
    fn complete(&self, _prompt: &str, _seed: u64) -> Result<String> {
        Err(Error::Client("generator unavailable".into()))
    }
}

struct Carriers {
    year: &'static [&'static str],
    timestamp: &'static [&'static str],
    currency: &'static [&'static str],
    quantity: &'static [&'static str],
    units: &'static [&'static str],
}

const EN_CARRIERS: Carriers = Carriers {
    year: &[
        "The bridge was finished in {}.",
        "She has lived here since {}.",
        "The company was founded in {} by a local family.",
        "Nothing changed until {}.",
    ],
    timestamp: &[
        "The train leaves at {}.",
        "Please call me at {}.",
        "The shop opens at {} on weekdays.",
    ],
    currency: &["The repair cost {}.", "He paid {} for the bike.", "Tickets cost {} each."],
    quantity: &["The warehouse received {} yesterday.", "We counted {} on the shelf.", "They shipped {} last week."],
    units: &["pieces", "boxes", "chairs", "books", "bottles"],
};

const DE_CARRIERS: Carriers = Carriers {
    year: &[
        "Die Brücke wurde im Jahr {} fertig.",
        "Sie wohnt hier seit {}.",
        "Das hat sich bis {} nicht geändert.",
    ],
    timestamp: &["Der Zug fährt um {} ab.", "Ruf mich um {} an.", "Wir treffen uns um {} am Bahnhof."],
    currency: &["Die Reparatur kostete {}.", "Er hat {} für das Fahrrad bezahlt."],
    quantity: &["Das Lager erhielt gestern {}.", "Wir haben {} im Regal gezählt."],
    units: &["Teile", "Kisten", "Stühle", "Bücher", "Flaschen"],
};

fn carriers(language: Language) -> &'static Carriers {
    match language {
        Language::En => &EN_CARRIERS,
        Language::De => &DE_CARRIERS,
    }
}

/// Generates sentences from random payloads it verbalizes itself, and
/// converts them from memory, so its conversions are independent of the
/// normalizer under test.
pub struct VerbalizerGenerator {
    locale: Locale,
    seed: u64,
    memory: Mutex<HashMap<String, String>>,
}

impl VerbalizerGenerator {
    pub fn new(locale: Locale, seed: u64) -> Self {
        VerbalizerGenerator { locale, seed, memory: Mutex::new(HashMap::new()) }
    }

    fn random_payload(&self, t: ExpressionType, rng: &mut ChaCha8Rng) -> Payload {
        let language = self.locale.language;
        // 1.1 to 99.9 million or billion
        let magnitude = |rng: &mut ChaCha8Rng| {
            let value = NumericValue::new(rng.gen_range(11..1000), 1).expect("small value");
            let exponent = *[6, 9].choose(rng).expect("non-empty");
            let word = lexicon::magnitude_word(language, exponent, true).expect("defined for 6 and 9");
            (value, Some(word.to_string()))
        };
        match t {
            ExpressionType::Year => Payload::Year(rng.gen_range(1000..=2100)),
            ExpressionType::Timestamp => Payload::Time(TimeOfDay::hm(rng.gen_range(0..24), rng.gen_range(0..60))),
            ExpressionType::Currency => {
                let code = self.locale.currencies.choose(rng).expect("locale has currencies").code.clone();
                let (major, magnitude_word) = if rng.gen_bool(0.15) {
                    magnitude(rng)
                } else {
                    (NumericValue::integer(rng.gen_range(0..100_000)), None)
                };
                let minor = if magnitude_word.is_none() && rng.gen_bool(0.5) { rng.gen_range(1..100) } else { 0 };
                Payload::Money { major, minor: NumericValue::integer(minor), currency: code, magnitude_word }
            }
            ExpressionType::Quantity => {
                let unit_word = carriers(self.locale.language).units.choose(rng).expect("units").to_string();
                let (value, magnitude_word) = if rng.gen_bool(0.15) {
                    magnitude(rng)
                } else {
                    (NumericValue::integer(rng.gen_range(2..1_000_000)), None)
                };
                Payload::Quantity { value, unit_word, magnitude_word }
            }
        }
    }

    fn sentence(&self, t: ExpressionType, rng: &mut ChaCha8Rng) -> Result<(String, String)> {
        let expr = ParsedExpression { span: Span::new(0, 1), payload: self.random_payload(t, rng) };
        let family = match expr.payload {
            Payload::Time(time) => {
                let options: Vec<_> = TimeFamily::ALL.into_iter().filter(|f| f.covers(time.minute)).collect();
                options.choose(rng).copied()
            }
            _ => None,
        };
        let words = verbalize_with(&expr, &self.locale, family)?;
        let literal = format_expression(&expr, &self.locale)?;
        let c = carriers(self.locale.language);
        let templates = match t {
            ExpressionType::Year => c.year,
            ExpressionType::Timestamp => c.timestamp,
            ExpressionType::Currency => c.currency,
            ExpressionType::Quantity => c.quantity,
        };
        let template = templates.choose(rng).expect("templates");
        Ok((template.replace("{}", &words), template.replace("{}", &literal)))
    }

    fn remember(&self, verbalized: &str, formatted: &str) {
        self.memory.lock().expect("memory lock").insert(verbalized.to_string(), formatted.to_string());
    }

    /// "Generate {n} diverse ... containing a {type} written down ..."
    fn parse_sentence_prompt(prompt: &str) -> Option<(usize, ExpressionType)> {
        let rest = prompt.strip_prefix("Generate ")?;
        let (n, rest) = rest.split_once(' ')?;
        let n = n.parse().ok()?;
        let (_, rest) = rest.split_once("containing a ")?;
        let (name, _) = rest.split_once(" written down")?;
        Some((n, name.parse().ok()?))
    }

    fn parse_timestamp_prompt(prompt: &str) -> Option<&str> {
        let (_, rest) = prompt.split_once("containing the timestamp ")?;
        Some(rest.split_once(" written down")?.0)
    }
}

impl TextGenerator for VerbalizerGenerator {
    fn complete(&self, prompt: &str, seed: u64) -> Result<String> {
        if let Some(lines) = conversion_sentences(prompt) {
            let memory = self.memory.lock().expect("memory lock");
            let out: Vec<&str> =
                lines.iter().map(|l| memory.get(*l).map_or(*l, String::as_str)).collect();
            return Ok(out.join("\n"));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(seed);
        if let Some(phrase) = Self::parse_timestamp_prompt(prompt) {
            let phrasing = enumerate_timestamp_phrasings(&self.locale)
                .into_iter()
                .find(|p| p.phrase == phrase)
                .ok_or_else(|| Error::Client(format!("unknown timestamp phrase `{phrase}`")))?;
            let template = carriers(self.locale.language).timestamp.choose(&mut rng).expect("templates");
            let time = TimeOfDay::hm(phrasing.time.hour, phrasing.time.minute);
            let (v, f) = (template.replace("{}", phrase), template.replace("{}", &format_time(time)));
            self.remember(&v, &f);
            return Ok(v);
        }
        let (n, t) = Self::parse_sentence_prompt(prompt)
            .ok_or_else(|| Error::Client("unrecognized prompt".into()))?;
        let mut lines = Vec::with_capacity(n);
        for _ in 0..n {
            let (v, f) = self.sentence(t, &mut rng)?;
            self.remember(&v, &f);
            lines.push(v);
        }
        Ok(lines.join("\n"))
    }
}

/// Placeholder audio with zero duration; never persisted.
#[derive(Debug, Clone, Default)]
pub struct MockSynthesizer;

impl SpeechSynthesizer for MockSynthesizer {
    fn synthesize(&self, text: &str, voice: &str) -> Result<Audio> {
        Ok(Audio { bytes: format!("MOCK:{voice}:{text}").into_bytes(), format: "mock".into(), duration: Some(0.0) })
    }

    fn persists_audio(&self) -> bool {
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::datagen::prompt::{build_sentence_prompt, build_timestamp_prompt, SentencePromptSpec};

    #[test]
    fn verbalizer_is_seeded() {
        let spec = SentencePromptSpec { n: 4, expr_type: ExpressionType::Currency, language: Language::En };
        let p = build_sentence_prompt(&spec).unwrap();
        let a = VerbalizerGenerator::new(Locale::en(), 9).complete(&p, 3).unwrap();
        let b = VerbalizerGenerator::new(Locale::en(), 9).complete(&p, 3).unwrap();
        let c = VerbalizerGenerator::new(Locale::en(), 9).complete(&p, 4).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert_eq!(a.lines().count(), 4);
    }

    #[test]
    fn verbalizer_converts_from_memory() {
        let g = VerbalizerGenerator::new(Locale::en(), 1);
        let s = g.complete(&build_timestamp_prompt("quarter to one", Language::En).unwrap(), 0).unwrap();
        let conv = g.complete(&format!("{}\n\n{s}", build_conversion_prompt(ExpressionType::Timestamp)), 0).unwrap();
        assert!(conv.contains("12:45"), "{conv}");
    }

    #[test]
    fn canned_lookup() {
        let g = CannedGenerator::new([("in nineteen forty-five", "in 1945")]);
        let conv = format!("{}\n\nin nineteen forty-five", build_conversion_prompt(ExpressionType::Year));
        assert_eq!(g.complete(&conv, 0).unwrap(), "in 1945");
        assert_eq!(g.complete("Generate 1 diverse sentences", 0).unwrap(), "in nineteen forty-five");
    }
}
