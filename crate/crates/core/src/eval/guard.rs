//! Revert a reformatted hypothesis when it drifts too far from its input.

use serde::{Deserialize, Serialize};

use super::wer::{word_error_rate, WordErrorRate};
use crate::error::{Error, Result};

pub const DEFAULT_THRESHOLD: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GuardConfig {
    threshold: f64,
}

impl GuardConfig {
    pub fn new(threshold: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&threshold) {
            return Err(Error::Config(format!("guard threshold {threshold} not in [0, 1]")));
        }
        Ok(GuardConfig { threshold })
    }

    pub fn threshold(&self) -> f64 {
        self.threshold
    }
}

impl Default for GuardConfig {
    fn default() -> Self {
        GuardConfig { threshold: DEFAULT_THRESHOLD }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GuardDecision {
    pub kept: bool,
    pub measured_wer: WordErrorRate,
    pub threshold: f64,
    pub returned_text: String,
}

/// Keeps `segmented` iff WER(original, segmented) ≤ threshold.
pub fn guard(original: &str, segmented: &str, config: &GuardConfig) -> GuardDecision {
    let measured_wer = word_error_rate(original, segmented);
    let kept = measured_wer.value() <= config.threshold;
    GuardDecision {
        kept,
        measured_wer,
        threshold: config.threshold,
        returned_text: if kept { segmented } else { original }.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let c = GuardConfig::default();
        let d = guard("a b", "a b", &c);
        assert!(d.kept && d.measured_wer.edits == 0);

        let orig = "w0 w1 w2 w3 w4 w5 w6 w7 w8 w9";
        let six = "x0 x1 x2 x3 x4 x5 w6 w7 w8 w9";
        let d = guard(orig, six, &c);
        assert!(!d.kept);
        assert_eq!(d.returned_text, orig);

        let five = "x0 x1 x2 x3 x4 w5 w6 w7 w8 w9";
        assert!(guard(orig, five, &c).kept);
    }

    #[test]
    fn threshold_bounds() {
        assert!(GuardConfig::new(1.5).is_err());
        assert!(GuardConfig::new(-0.1).is_err());
        assert!(!guard("a", "b", &GuardConfig::new(0.0).unwrap()).kept);
    }
}
