//! Evaluation: WER, the reformatting guard, literal extraction and
//! per-type accuracy reports.

mod extract;
mod guard;
mod report;
mod wer;

pub use extract::{contains_numeric_expression, extract_numeric_literals, Extractor, LiteralMatch};
pub use guard::{guard, GuardConfig, GuardDecision, DEFAULT_THRESHOLD};
pub use report::{
    contains_delimited, parse_tsv, percent, render_report, render_tsv, type_accuracy, EvalReport, TypeScore,
};
pub use wer::{edit_distance, normalized_word_error_rate, word_error_rate, WordErrorRate};
