//! Synthetic corpus generation: prompts, pluggable LLM/TTS clients, the
//! record filter, disjoint splitting and the generation job.

mod client;
#[cfg(feature = "http")]
pub mod http;
pub mod mock;
mod pipeline;
mod prompt;
mod split;
mod validate;

pub use client::{with_retry, Audio, ClientConfig, ClientLimits, EndpointConfig, SpeechSynthesizer, TextGenerator};
pub use pipeline::{run_generation, GenerationOutput, GenerationPlan, GenerationStats, PlanItem, RecordFailure};
pub use prompt::{build_conversion_prompt, build_sentence_prompt, build_timestamp_prompt, SentencePromptSpec};
pub use split::{render_statistics, split_disjoint, SplitSpec, Splits};
pub use validate::validate_record;
