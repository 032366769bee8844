//! OpenAI-compatible chat-completion and speech clients.

use std::time::Duration;

use reqwest::blocking::{Client, RequestBuilder};
use serde_json::{json, Value};

use super::client::{Audio, ClientLimits, EndpointConfig, SpeechSynthesizer, TextGenerator};
use crate::error::{Error, Result};

fn client(config: &EndpointConfig) -> Result<Client> {
    Client::builder()
        .timeout(Duration::from_secs(config.timeout_secs))
        .build()
        .map_err(|e| Error::Client(e.to_string()))
}

fn authorized(request: RequestBuilder, key: &Option<String>) -> RequestBuilder {
    match key {
        Some(k) => request.bearer_auth(k),
        None => request,
    }
}

fn url(config: &EndpointConfig, path: &str) -> String {
    format!("{}/{path}", config.endpoint.trim_end_matches('/'))
}

/// POST {endpoint}/chat/completions
pub struct HttpTextGenerator {
    config: EndpointConfig,
    key: Option<String>,
    client: Client,
}

impl HttpTextGenerator {
    pub fn new(config: EndpointConfig) -> Result<Self> {
        Ok(HttpTextGenerator { key: config.api_key()?, client: client(&config)?, config })
    }
}

impl TextGenerator for HttpTextGenerator {
    fn complete(&self, prompt: &str, seed: u64) -> Result<String> {
        let body = json!({
            "model": self.config.model,
            "messages": [{"role": "user", "content": prompt}],
            "seed": seed,
        });
        let response = authorized(self.client.post(url(&self.config, "chat/completions")), &self.key)
            .json(&body)
            .send()
            .and_then(|r| r.error_for_status())
            .map_err(|e| Error::Client(e.to_string()))?;
        let value: Value = response.json().map_err(|e| Error::Client(e.to_string()))?;
        value["choices"][0]["message"]["content"]
            .as_str()
            .map(str::to_string)
            .ok_or_else(|| Error::Client("response has no message content".into()))
    }

    fn limits(&self) -> ClientLimits {
        self.config.limits()
    }
}

/// POST {endpoint}/audio/speech, mp3 output.
pub struct HttpSpeechSynthesizer {
    config: EndpointConfig,
    key: Option<String>,
    client: Client,
}

impl HttpSpeechSynthesizer {
    pub fn new(config: EndpointConfig) -> Result<Self> {
        Ok(HttpSpeechSynthesizer { key: config.api_key()?, client: client(&config)?, config })
    }
}

impl SpeechSynthesizer for HttpSpeechSynthesizer {
    fn synthesize(&self, text: &str, voice: &str) -> Result<Audio> {
        let body = json!({
            "model": self.config.model,
            "voice": voice,
            "input": text,
            "response_format": "mp3",
        });
        let response = authorized(self.client.post(url(&self.config, "audio/speech")), &self.key)
            .json(&body)
            .send()
            .and_then(|r| r.error_for_status())
            .map_err(|e| Error::Client(e.to_string()))?;
        let bytes = response.bytes().map_err(|e| Error::Client(e.to_string()))?;
        Ok(Audio { bytes: bytes.to_vec(), format: "mp3".into(), duration: None })
    }

    fn limits(&self) -> ClientLimits {
        self.config.limits()
    }
}
