//! Line-oriented command-line front end. Data goes to stdout, diagnostics
//! to stderr; any operational error exits with status 2.

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use numex::classify::ExpressionType;
use numex::datagen::mock::{MockSynthesizer, VerbalizerGenerator};
use numex::datagen::{
    render_statistics, run_generation, split_disjoint, ClientConfig, GenerationPlan, SpeechSynthesizer, SplitSpec,
    TextGenerator,
};
use numex::eval::{
    guard, normalized_word_error_rate, render_report, render_tsv, word_error_rate, EvalReport, Extractor, GuardConfig,
    DEFAULT_THRESHOLD,
};
use numex::itn::{verbalize_sentence, NormalizeOptions, Normalizer};
use numex::manifest::{read_manifest, write_manifest, ManifestReader, ManifestWriter};
use numex::{Error, Language, Locale, Result};

#[derive(Parser)]
#[command(name = "numex", version, about = "Number words to numeric literals and back")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rewrite number words as formatted literals, one line at a time.
    Normalize {
        #[command(flatten)]
        locale: LocaleArgs,
        #[command(flatten)]
        io: InputArg,
        /// Keep "in the evening"-style phrases after formatted times.
        #[arg(long)]
        keep_period_phrases: bool,
    },
    /// Rewrite formatted literals as number words, one line at a time.
    Verbalize {
        #[command(flatten)]
        locale: LocaleArgs,
        #[command(flatten)]
        io: InputArg,
    },
    /// Score hypothesis lines against a manifest.
    Eval {
        #[arg(long)]
        manifest: PathBuf,
        /// One hypothesis per manifest record.
        #[arg(long)]
        hypotheses: PathBuf,
        #[arg(long, value_enum, default_value_t = ReportFormat::Table)]
        format: ReportFormat,
        /// Normalize both sides before computing WER.
        #[arg(long, value_name = "LOCALE")]
        normalize_wer: Option<Language>,
    },
    /// Keep reformatted lines unless their WER against the original exceeds the threshold.
    Guard {
        #[arg(long)]
        original: PathBuf,
        #[arg(long)]
        segmented: PathBuf,
        #[arg(long, default_value_t = DEFAULT_THRESHOLD)]
        threshold: f64,
        /// Per-line decision log; defaults to stderr.
        #[arg(long)]
        log: Option<PathBuf>,
    },
    /// Generate a manifest with the three-step pipeline.
    Gen {
        #[command(flatten)]
        locale: LocaleArgs,
        /// Expression type for sentence prompts.
        #[arg(long = "type", value_name = "TYPE")]
        expr_type: Option<ExpressionType>,
        /// Sentences requested per prompt.
        #[arg(long, default_value_t = 5)]
        count: usize,
        /// Number of sentence prompts.
        #[arg(long, default_value_t = 1)]
        batches: usize,
        /// Add one prompt per enumerated timestamp phrasing.
        #[arg(long)]
        timestamps: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Manifest to append to.
        #[arg(long)]
        out: PathBuf,
        /// Client configuration; without it the offline mock clients are used.
        #[arg(long)]
        clients: Option<PathBuf>,
        /// Voices to draw from when the client configuration lists none.
        #[arg(long, value_delimiter = ',')]
        voices: Vec<String>,
    },
    /// Split a manifest into train/dev/test with disjoint expression surfaces.
    Split {
        #[arg(long)]
        manifest: PathBuf,
        #[arg(long)]
        out_dir: PathBuf,
        /// train,dev,test fractions.
        #[arg(long, value_delimiter = ',', num_args = 3, default_values_t = [0.8, 0.1, 0.1])]
        ratios: Vec<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// List numeric literals as `line<TAB>start<TAB>end<TAB>type<TAB>text`.
    Extract {
        /// Restrict currency symbols to this locale.
        #[arg(long)]
        locale: Option<Language>,
        #[arg(long)]
        config: Option<PathBuf>,
        #[command(flatten)]
        io: InputArg,
    },
}

#[derive(Args)]
struct LocaleArgs {
    #[arg(long, required_unless_present = "config")]
    locale: Option<Language>,
    /// Locale preset file; overrides --locale.
    #[arg(long)]
    config: Option<PathBuf>,
}

impl LocaleArgs {
    fn resolve(&self) -> Result<Locale> {
        resolve_locale(self.locale, self.config.as_deref())
    }
}

fn resolve_locale(language: Option<Language>, config: Option<&Path>) -> Result<Locale> {
    match (config, language) {
        (Some(path), _) => Locale::from_config_file(path),
        (None, Some(lang)) => Ok(Locale::preset(lang)),
        (None, None) => Err(Error::Config("a locale is required".into())),
    }
}

#[derive(Args)]
struct InputArg {
    /// Input file; stdin when absent.
    #[arg(long)]
    input: Option<PathBuf>,
}

impl InputArg {
    fn open(&self) -> Result<Box<dyn BufRead>> {
        Ok(match &self.input {
            Some(p) => Box::new(BufReader::new(open(p)?)),
            None => Box::new(BufReader::new(io::stdin())),
        })
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Table,
    Tsv,
}

fn open(path: &Path) -> Result<File> {
    File::open(path).map_err(|e| Error::Io(io::Error::new(e.kind(), format!("{}: {e}", path.display()))))
}

/// Applies `f` to each input line and writes one output line per input line.
fn map_lines(input: impl BufRead, mut f: impl FnMut(&str) -> String) -> Result<()> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    for line in input.lines() {
        writeln!(out, "{}", f(&line?))?;
    }
    out.flush()?;
    Ok(())
}

fn lines_of(path: &Path) -> Result<io::Lines<BufReader<File>>> {
    Ok(BufReader::new(open(path)?).lines())
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Normalize { locale, io, keep_period_phrases } => {
            let normalizer = Normalizer::with_options(locale.resolve()?, NormalizeOptions { keep_period_phrases });
            map_lines(io.open()?, |l| normalizer.normalize(l).text)
        }
        Command::Verbalize { locale, io } => {
            let locale = locale.resolve()?;
            map_lines(io.open()?, |l| verbalize_sentence(l, &locale))
        }
        Command::Eval { manifest, hypotheses, format, normalize_wer } => {
            let normalize_locale = normalize_wer.map(Locale::preset);
            let mut records = ManifestReader::open(&manifest)?;
            let mut hyps = lines_of(&hypotheses)?;
            let mut report = EvalReport::default();
            let mut n = 0usize;
            loop {
                match (records.next().transpose()?, hyps.next().transpose()?) {
                    (None, None) => break,
                    (Some(r), Some(h)) => {
                        let wer = match &normalize_locale {
                            Some(locale) => normalized_word_error_rate(&r.formatted, &h, locale),
                            None => word_error_rate(&r.formatted, &h),
                        };
                        report.add_with_wer(&r, &h, wer);
                        n += 1;
                    }
                    _ => {
                        return Err(Error::Contract(format!(
                            "manifest and hypotheses differ in length after {n} pairs"
                        )))
                    }
                }
            }
            let text = match format {
                ReportFormat::Table => render_report(&report),
                ReportFormat::Tsv => render_tsv(&report),
            };
            print!("{text}");
            Ok(())
        }
        Command::Guard { original, segmented, threshold, log } => {
            let config = GuardConfig::new(threshold)?;
            let mut log: Box<dyn Write> = match log {
                Some(p) => Box::new(BufWriter::new(File::create(p)?)),
                None => Box::new(io::stderr()),
            };
            let stdout = io::stdout();
            let mut out = BufWriter::new(stdout.lock());
            let (mut a, mut b) = (lines_of(&original)?, lines_of(&segmented)?);
            let mut n = 0usize;
            loop {
                match (a.next().transpose()?, b.next().transpose()?) {
                    (None, None) => break,
                    (Some(o), Some(s)) => {
                        n += 1;
                        let d = guard(&o, &s, &config);
                        writeln!(out, "{}", d.returned_text)?;
                        let verdict = if d.kept { "kept" } else { "reverted" };
                        writeln!(log, "{n}\t{verdict}\t{:.4}", d.measured_wer.value())?;
                    }
                    _ => {
                        return Err(Error::Contract(format!(
                            "original and segmented differ in length after {n} lines"
                        )))
                    }
                }
            }
            out.flush()?;
            log.flush()?;
            Ok(())
        }
        Command::Gen { locale, expr_type, count, batches, timestamps, seed, out, clients, voices } => {
            let locale = locale.resolve()?;
            let mut plan = GenerationPlan::new(locale.clone(), seed);
            if let Some(t) = expr_type {
                plan = plan.sentences(t, count, batches);
            }
            if timestamps {
                plan = plan.timestamps();
            }
            if plan.items.is_empty() {
                return Err(Error::Config("nothing to generate: pass --type and/or --timestamps".into()));
            }
            plan.voices = voices;
            plan.output_dir = Some(out.parent().map(Path::to_path_buf).unwrap_or_default());
            let (textgen, tts) = clients_from(clients.as_deref(), &locale, seed, &mut plan.voices)?;
            let result = run_generation(&plan, textgen.as_ref(), tts.as_ref())?;
            let mut writer = ManifestWriter::append(&out)?;
            for r in &result.records {
                writer.write(r)?;
            }
            writer.flush()?;
            let s = &result.stats;
            eprintln!(
                "prompts {} conversions {} kept {} discarded {} failed {}",
                s.sentence_prompts,
                s.conversion_prompts,
                s.kept,
                s.discarded,
                s.failures.len()
            );
            for f in &s.failures {
                eprintln!("item {}: {}", f.item, f.message);
            }
            Ok(())
        }
        Command::Split { manifest, out_dir, ratios, seed } => {
            let spec = SplitSpec::new(ratios[0], ratios[1], ratios[2], seed)?;
            let records = read_manifest(&manifest)?;
            let splits = split_disjoint(&records, &spec)?;
            std::fs::create_dir_all(&out_dir)?;
            for (name, part) in splits.parts() {
                write_manifest(out_dir.join(format!("{name}.jsonl")), part)?;
            }
            print!("{}", render_statistics(&splits));
            Ok(())
        }
        Command::Extract { locale, config, io } => {
            let extractor = match (locale, config) {
                (None, None) => Extractor::default(),
                (l, c) => Extractor::for_locales(&[resolve_locale(l, c.as_deref())?]),
            };
            let stdout = io::stdout();
            let mut out = BufWriter::new(stdout.lock());
            for (i, line) in io.open()?.lines().enumerate() {
                let line = line?;
                for m in extractor.extract(&line) {
                    writeln!(out, "{}\t{}\t{}\t{}\t{}", i + 1, m.chars.start, m.chars.end, m.guessed, m.text)?;
                }
            }
            out.flush()?;
            Ok(())
        }
    }
}

type Clients = (Box<dyn TextGenerator>, Box<dyn SpeechSynthesizer>);

fn clients_from(path: Option<&Path>, locale: &Locale, seed: u64, voices: &mut Vec<String>) -> Result<Clients> {
    let Some(path) = path else {
        return Ok((Box::new(VerbalizerGenerator::new(locale.clone(), seed)), Box::new(MockSynthesizer)));
    };
    let config = ClientConfig::from_file(path)?;
    if !config.voices.is_empty() {
        *voices = config.voices.clone();
    }
    http_clients(config, locale, seed)
}

#[cfg(feature = "http")]
fn http_clients(config: ClientConfig, locale: &Locale, seed: u64) -> Result<Clients> {
    use numex::datagen::http::{HttpSpeechSynthesizer, HttpTextGenerator};
    let textgen: Box<dyn TextGenerator> = match config.text {
        Some(c) => Box::new(HttpTextGenerator::new(c)?),
        None => Box::new(VerbalizerGenerator::new(locale.clone(), seed)),
    };
    let tts: Box<dyn SpeechSynthesizer> = match config.speech {
        Some(c) => Box::new(HttpSpeechSynthesizer::new(c)?),
        None => Box::new(MockSynthesizer),
    };
    Ok((textgen, tts))
}

#[cfg(not(feature = "http"))]
fn http_clients(config: ClientConfig, locale: &Locale, seed: u64) -> Result<Clients> {
    if config.text.is_some() || config.speech.is_some() {
        return Err(Error::Config("HTTP clients need a build with the `http` feature".into()));
    }
    Ok((Box::new(VerbalizerGenerator::new(locale.clone(), seed)), Box::new(MockSynthesizer)))
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("numex: {e}");
            ExitCode::from(2)
        }
    }
}
