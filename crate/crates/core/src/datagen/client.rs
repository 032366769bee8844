//! Text-generation and speech-synthesis client interfaces.

use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClientLimits {
    /// Upper bound on requests in flight, at least 1.
    pub max_concurrency: usize,
    /// Extra attempts after a failed call.
    pub retries: u32,
}

impl Default for ClientLimits {
    fn default() -> Self {
        ClientLimits { max_concurrency: 4, retries: 2 }
    }
}

pub trait TextGenerator: Send + Sync {
    /// `seed` is forwarded to backends that support seeded sampling.
    fn complete(&self, prompt: &str, seed: u64) -> Result<String>;

    fn limits(&self) -> ClientLimits {
        ClientLimits::default()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Audio {
    pub bytes: Vec<u8>,
    /// File extension, e.g. `mp3`.
    pub format: String,
    /// Seconds, when the backend reports it.
    pub duration: Option<f64>,
}

pub trait SpeechSynthesizer: Send + Sync {
    fn synthesize(&self, text: &str, voice: &str) -> Result<Audio>;

    fn limits(&self) -> ClientLimits {
        ClientLimits::default()
    }

    /// Whether the audio is worth writing to disk.
    fn persists_audio(&self) -> bool {
        true
    }
}

/// Runs `call` up to `retries + 1` times, retrying only client errors.
pub fn with_retry<T>(retries: u32, mut call: impl FnMut() -> Result<T>) -> Result<T> {
    let mut attempt = 0;
    loop {
        match call() {
            Err(Error::Client(_)) if attempt < retries => attempt += 1,
            other => return other,
        }
    }
}

fn default_timeout() -> u64 {
    60
}

fn default_concurrency() -> usize {
    ClientLimits::default().max_concurrency
}

fn default_retries() -> u32 {
    ClientLimits::default().retries
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EndpointConfig {
    /// Base address, e.g. `https://api.openai.com/v1`.
    pub endpoint: String,
    /// Name of the environment variable holding the credential.
    #[serde(default)]
    pub api_key_env: Option<String>,
    pub model: String,
    #[serde(default = "default_timeout")]
    pub timeout_secs: u64,
    #[serde(default = "default_concurrency")]
    pub max_concurrency: usize,
    #[serde(default = "default_retries")]
    pub retries: u32,
}

impl EndpointConfig {
    pub fn limits(&self) -> ClientLimits {
        ClientLimits { max_concurrency: self.max_concurrency.max(1), retries: self.retries }
    }

    /// Reads the credential from the configured environment variable.
    pub fn api_key(&self) -> Result<Option<String>> {
        match &self.api_key_env {
            None => Ok(None),
            Some(var) => std::env::var(var)
                .map(Some)
                .map_err(|_| Error::Config(format!("environment variable {var} is not set"))),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClientConfig {
    #[serde(default)]
    pub text: Option<EndpointConfig>,
    #[serde(default)]
    pub speech: Option<EndpointConfig>,
    /// Voices drawn from uniformly per record.
    #[serde(default)]
    pub voices: Vec<String>,
}

impl ClientConfig {
    pub fn from_toml_str(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn from_file(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_toml_str(&std::fs::read_to_string(path)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::cell::Cell;

    #[test]
    fn retries_client_errors_only() {
        let calls = Cell::new(0);
        let r: Result<()> = with_retry(2, || {
            calls.set(calls.get() + 1);
            Err(Error::Client("down".into()))
        });
        assert!(r.is_err());
        assert_eq!(calls.get(), 3);

        calls.set(0);
        let r: Result<()> = with_retry(2, || {
            calls.set(calls.get() + 1);
            Err(Error::contract("bad"))
        });
        assert!(r.is_err());
        assert_eq!(calls.get(), 1);
    }

    #[test]
    fn config_file() {
        let c = ClientConfig::from_toml_str(
            r#"
            voices = ["alloy", "nova"]
            [text]
            endpoint = "https://example.invalid/v1"
            api_key_env = "NUMEX_TEST_KEY_UNSET"
            model = "some-model"
            [speech]
            endpoint = "https://example.invalid/v1"
            model = "tts"
            max_concurrency = 0
            "#,
        )
        .unwrap();
        let text = c.text.unwrap();
        assert_eq!(text.timeout_secs, 60);
        assert!(text.api_key().is_err());
        assert_eq!(c.speech.unwrap().limits().max_concurrency, 1);
        assert!(ClientConfig::from_toml_str("bogus = 1").is_err());
    }
}
