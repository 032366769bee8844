//! Inverse text normalization for numeric expressions.
//!
//! Converts number words in English and German sentences into formatted
//! literals (`in nineteen forty-five` → `in 1945`, `eintausend Euro und
//! fünfzig Cent` → `1.000,50€`) and back, and ships the evaluation and
//! corpus-generation tooling around it: WER, the reformatting guard,
//! per-type accuracy reports, and a pluggable LLM/TTS data pipeline.

pub mod classify;
pub mod datagen;
pub mod error;
pub mod eval;
pub mod format;
pub mod grammar;
pub mod itn;
pub mod locale;
pub mod manifest;

pub use classify::{classify, resolve_time, ExpressionType, ParsedExpression, Payload};
pub use error::{Error, Result};
pub use itn::{normalize_sentence, verbalize_value, NormalizationResult, Normalizer};
pub use locale::{CurrencyPlacement, CurrencyUnit, Language, Locale};
