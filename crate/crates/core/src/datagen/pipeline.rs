//! The three-step generation job: sentence, audio, conversion.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use once_cell::sync::Lazy;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use regex::Regex;

use super::client::{with_retry, SpeechSynthesizer, TextGenerator};
use super::prompt::{build_conversion_prompt, build_sentence_prompt, build_timestamp_prompt, SentencePromptSpec};
use super::validate::validate_with;
use crate::classify::ExpressionType;
use crate::error::{Error, Result};
use crate::eval::Extractor;
use crate::itn::enumerate_timestamp_phrasings;
use crate::locale::Locale;
use crate::manifest::{ExpressionAnnotation, ManifestRecord};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PlanItem {
    /// One sentence prompt asking for `n` sentences.
    Sentences { expr_type: ExpressionType, n: usize },
    /// One sentence around a fixed timestamp phrase.
    Timestamp { phrase: String },
}

impl PlanItem {
    fn expr_type(&self) -> ExpressionType {
        match self {
            PlanItem::Sentences { expr_type, .. } => *expr_type,
            PlanItem::Timestamp { .. } => ExpressionType::Timestamp,
        }
    }
}

#[derive(Debug, Clone)]
pub struct GenerationPlan {
    pub locale: Locale,
    pub items: Vec<PlanItem>,
    /// Empty means every record uses the voice "default".
    pub voices: Vec<String>,
    pub seed: u64,
    pub id_prefix: String,
    /// Directory of the manifest; audio goes to its `audio/` subdirectory.
    pub output_dir: Option<PathBuf>,
}

impl GenerationPlan {
    pub fn new(locale: Locale, seed: u64) -> Self {
        let id_prefix = locale.name.clone();
        GenerationPlan { locale, items: Vec::new(), voices: Vec::new(), seed, id_prefix, output_dir: None }
    }

    /// `batches` prompts of `n` sentences each.
    pub fn sentences(mut self, expr_type: ExpressionType, n: usize, batches: usize) -> Self {
        self.items.extend((0..batches).map(|_| PlanItem::Sentences { expr_type, n }));
        self
    }

    /// One prompt per enumerated timestamp phrasing.
    pub fn timestamps(mut self) -> Self {
        let phrases = enumerate_timestamp_phrasings(&self.locale);
        self.items.extend(phrases.into_iter().map(|p| PlanItem::Timestamp { phrase: p.phrase }));
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecordFailure {
    pub item: usize,
    pub message: String,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct GenerationStats {
    pub sentence_prompts: usize,
    pub conversion_prompts: usize,
    pub kept: usize,
    pub discarded: usize,
    pub failures: Vec<RecordFailure>,
    pub per_type: BTreeMap<ExpressionType, usize>,
    pub audio_seconds: f64,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct GenerationOutput {
    pub records: Vec<ManifestRecord>,
    pub stats: GenerationStats,
}

static LIST_MARKER: Lazy<Regex> = Lazy::new(|| Regex::new(r"^\s*(?:\d+[.)]|[-*•])\s+").unwrap());

fn sentences_of(response: &str) -> Vec<String> {
    response
        .lines()
        .map(|l| LIST_MARKER.replace(l, "").trim().to_string())
        .filter(|l| !l.is_empty())
        .collect()
}

/// Result of one plan item, merged in item order afterwards.
#[derive(Default)]
struct ItemOutcome {
    records: Vec<ManifestRecord>,
    conversion_prompts: usize,
    discarded: usize,
    failures: Vec<String>,
}

struct Job<'a> {
    plan: &'a GenerationPlan,
    textgen: &'a dyn TextGenerator,
    tts: &'a dyn SpeechSynthesizer,
    extractor: Extractor,
}

impl Job<'_> {
    fn prompt(&self, item: &PlanItem) -> Result<String> {
        match item {
            PlanItem::Sentences { expr_type, n } => build_sentence_prompt(&SentencePromptSpec {
                n: *n,
                expr_type: *expr_type,
                language: self.plan.locale.language,
            }),
            PlanItem::Timestamp { phrase } => build_timestamp_prompt(phrase, self.plan.locale.language),
        }
    }

    fn run_item(&self, index: usize, item: &PlanItem) -> ItemOutcome {
        let mut out = ItemOutcome::default();
        let seed = self.plan.seed.wrapping_add(index as u64);
        let retries = self.textgen.limits().retries;
        let sentences = match self.prompt(item).and_then(|p| with_retry(retries, || self.textgen.complete(&p, seed))) {
            Ok(text) => sentences_of(&text),
            Err(e) => {
                out.failures.push(e.to_string());
                return out;
            }
        };
        let mut rng = ChaCha8Rng::seed_from_u64(self.plan.seed);
        rng.set_stream(index as u64);
        for (line, sentence) in sentences.into_iter().enumerate() {
            let voice = self.plan.voices.choose(&mut rng).map_or("default", String::as_str);
            let id = format!("{}-{index:05}-{line:03}", self.plan.id_prefix);
            out.conversion_prompts += 1;
            match self.make_record(id, item.expr_type(), sentence, voice, seed) {
                Ok(Some(r)) => out.records.push(r),
                Ok(None) => out.discarded += 1,
                Err(e) => out.failures.push(e.to_string()),
            }
        }
        out
    }

    fn make_record(
        &self,
        id: String,
        expr_type: ExpressionType,
        verbalized: String,
        voice: &str,
        seed: u64,
    ) -> Result<Option<ManifestRecord>> {
        let locale = &self.plan.locale;
        let audio = with_retry(self.tts.limits().retries, || self.tts.synthesize(&verbalized, voice))?;
        let prompt = format!("{}\n\n{verbalized}", build_conversion_prompt(expr_type));
        let converted = with_retry(self.textgen.limits().retries, || self.textgen.complete(&prompt, seed))?;
        let converted = sentences_of(&converted).into_iter().next().unwrap_or_default();
        if !validate_with(&self.extractor, &verbalized, &converted) {
            return Ok(None);
        }
        let literals = self.extractor.extract(&converted);
        let single = literals.len() == 1;
        let expressions = literals
            .into_iter()
            .map(|m| ExpressionAnnotation {
                surface: m.text,
                expr_type: if single { expr_type } else { m.guessed },
            })
            .collect();
        let audio_ref = match (&self.plan.output_dir, self.tts.persists_audio()) {
            (Some(dir), true) => {
                let rel = format!("audio/{id}.{}", audio.format);
                std::fs::create_dir_all(dir.join("audio"))?;
                std::fs::write(dir.join(&rel), &audio.bytes)?;
                Some(rel)
            }
            _ => None,
        };
        Ok(Some(ManifestRecord {
            id,
            locale: locale.name.clone(),
            expr_type,
            verbalized,
            formatted: converted,
            expressions,
            audio: audio_ref,
            voice: Some(voice.to_string()),
            duration: audio.duration,
        }))
    }
}

/// Runs every plan item through generate → synthesize → convert → filter.
/// Items run concurrently up to the smaller client limit; output order
/// follows the plan. Per-record failures are collected in the stats; the
/// job fails only if there were failures and nothing was kept.
pub fn run_generation(
    plan: &GenerationPlan,
    textgen: &dyn TextGenerator,
    tts: &dyn SpeechSynthesizer,
) -> Result<GenerationOutput> {
    let job = Job { plan, textgen, tts, extractor: Extractor::for_locales(std::slice::from_ref(&plan.locale)) };
    let workers = textgen.limits().max_concurrency.min(tts.limits().max_concurrency).clamp(1, plan.items.len().max(1));
    let next = AtomicUsize::new(0);
    let outcomes: Mutex<Vec<Option<ItemOutcome>>> = Mutex::new((0..plan.items.len()).map(|_| None).collect());
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(item) = plan.items.get(i) else { break };
                let outcome = job.run_item(i, item);
                outcomes.lock().expect("outcome lock")[i] = Some(outcome);
            });
        }
    });

    let mut output = GenerationOutput::default();
    output.stats.sentence_prompts = plan.items.len();
    for (item, outcome) in outcomes.into_inner().expect("outcome lock").into_iter().enumerate() {
        let outcome = outcome.expect("every item ran");
        output.stats.conversion_prompts += outcome.conversion_prompts;
        output.stats.discarded += outcome.discarded;
        output
            .stats
            .failures
            .extend(outcome.failures.into_iter().map(|message| RecordFailure { item, message }));
        for r in outcome.records {
            *output.stats.per_type.entry(r.expr_type).or_default() += 1;
            output.stats.audio_seconds += r.duration.unwrap_or(0.0);
            output.records.push(r);
        }
    }
    output.stats.kept = output.records.len();
    if output.records.is_empty() && !output.stats.failures.is_empty() {
        return Err(Error::Generation(format!(
            "all {} attempts failed; first error: {}",
            output.stats.failures.len(),
            output.stats.failures[0].message
        )));
    }
    Ok(output)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::datagen::mock::{CannedGenerator, FailingGenerator, MockSynthesizer, VerbalizerGenerator};

    #[test]
    fn list_markers_are_stripped() {
        assert_eq!(sentences_of("1. in nineteen ten\n- at noon\n\n"), ["in nineteen ten", "at noon"]);
    }

    #[test]
    fn no_numbers_is_discarded() {
        let plan = GenerationPlan::new(Locale::en(), 0).sentences(ExpressionType::Year, 1, 1);
        let out = run_generation(&plan, &CannedGenerator::new([("hello world", "hello world")]), &MockSynthesizer)
            .unwrap();
        assert_eq!((out.records.len(), out.stats.discarded), (0, 1));
    }

    #[test]
    fn total_failure_is_job_error() {
        let plan = GenerationPlan::new(Locale::en(), 0).sentences(ExpressionType::Year, 1, 2);
        assert!(matches!(
            run_generation(&plan, &FailingGenerator, &MockSynthesizer),
            Err(Error::Generation(_))
        ));
    }

    #[test]
    fn timestamp_plan_issues_seventy_two_prompts() {
        let plan = GenerationPlan::new(Locale::de(), 5).timestamps();
        let out = run_generation(&plan, &VerbalizerGenerator::new(Locale::de(), 5), &MockSynthesizer).unwrap();
        assert_eq!(out.stats.sentence_prompts, 72);
        assert_eq!(out.records.len(), 72);
    }

    #[test]
    fn deterministic_under_seed() {
        let plan = GenerationPlan {
            voices: vec!["alloy".into(), "nova".into(), "echo".into()],
            ..GenerationPlan::new(Locale::en(), 11).sentences(ExpressionType::Quantity, 5, 6)
        };
        let a = run_generation(&plan, &VerbalizerGenerator::new(Locale::en(), 11), &MockSynthesizer).unwrap();
        let b = run_generation(&plan, &VerbalizerGenerator::new(Locale::en(), 11), &MockSynthesizer).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.records.len(), 30);
    }
}
