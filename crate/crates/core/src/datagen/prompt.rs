//! Prompt templates for the three generation steps.

use crate::classify::ExpressionType;
use crate::error::{Error, Result};
use crate::locale::Language;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SentencePromptSpec {
    pub n: usize,
    pub expr_type: ExpressionType,
    pub language: Language,
}

fn language_marker(language: Language) -> &'static str {
    match language {
        Language::En => "",
        Language::De => "German ",
    }
}

const NO_ENUMERATION: &str =
    "Write each sentence on its own line. Do not number the sentences and do not add any other text.";

pub fn build_sentence_prompt(spec: &SentencePromptSpec) -> Result<String> {
    if spec.n == 0 {
        return Err(Error::contract("sentence prompt needs n >= 1"));
    }
    Ok(format!(
        "Generate {} diverse {}sentences containing a {} written down using number words. {NO_ENUMERATION}",
        spec.n,
        language_marker(spec.language),
        spec.expr_type.display_name()
    ))
}

pub fn build_conversion_prompt(expr_type: ExpressionType) -> String {
    format!("Convert the {} in the sentences to numeric literals.", expr_type.display_name())
}

pub fn build_timestamp_prompt(phrase: &str, language: Language) -> Result<String> {
    if phrase.trim().is_empty() {
        return Err(Error::contract("timestamp prompt needs a phrase"));
    }
    Ok(format!(
        "Generate a {}sentence containing the timestamp {phrase} written down using number words.",
        language_marker(language)
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sentence_prompts() {
        let p = build_sentence_prompt(&SentencePromptSpec {
            n: 3,
            expr_type: ExpressionType::Timestamp,
            language: Language::En,
        })
        .unwrap();
        assert!(p.starts_with("Generate 3 diverse sentences containing a timestamp written down using number words."));
        let p = build_sentence_prompt(&SentencePromptSpec {
            n: 1,
            expr_type: ExpressionType::Currency,
            language: Language::De,
        })
        .unwrap();
        assert!(p.contains("German sentences containing a currency amount"));
        let zero = SentencePromptSpec { n: 0, expr_type: ExpressionType::Year, language: Language::En };
        assert!(build_sentence_prompt(&zero).is_err());
    }

    #[test]
    fn conversion_prompts() {
        assert_eq!(
            build_conversion_prompt(ExpressionType::Year),
            "Convert the year in the sentences to numeric literals."
        );
        let all: std::collections::HashSet<_> =
            ExpressionType::ALL.into_iter().map(build_conversion_prompt).collect();
        assert_eq!(all.len(), 4);
    }

    #[test]
    fn timestamp_prompts() {
        assert_eq!(
            build_timestamp_prompt("quarter past one", Language::En).unwrap(),
            "Generate a sentence containing the timestamp quarter past one written down using number words."
        );
        assert!(build_timestamp_prompt("halb zwei", Language::De).unwrap().contains("German sentence"));
        assert!(build_timestamp_prompt(" ", Language::En).is_err());
    }
}
