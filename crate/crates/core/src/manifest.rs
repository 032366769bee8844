//! JSON-Lines corpus manifest: one utterance per line.

use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::classify::ExpressionType;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExpressionAnnotation {
    pub surface: String,
    #[serde(rename = "type")]
    pub expr_type: ExpressionType,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManifestRecord {
    pub id: String,
    /// Locale name, `en` and `de` for the presets.
    pub locale: String,
    #[serde(rename = "type")]
    pub expr_type: ExpressionType,
    pub verbalized: String,
    pub formatted: String,
    pub expressions: Vec<ExpressionAnnotation>,
    #[serde(default)]
    pub audio: Option<String>,
    #[serde(default)]
    pub voice: Option<String>,
    /// Audio length in seconds as reported by the synthesizer.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub duration: Option<f64>,
}

impl ManifestRecord {
    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("manifest records always serialize")
    }

    /// `line` is 1-based and only used for the error message.
    pub fn from_line(text: &str, line: usize) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Manifest { line, message: e.to_string() })
    }
}

/// Streams records from a reader, skipping blank lines.
pub struct ManifestReader<R> {
    lines: std::io::Lines<R>,
    line: usize,
}

impl<R: BufRead> ManifestReader<R> {
    pub fn new(reader: R) -> Self {
        ManifestReader { lines: reader.lines(), line: 0 }
    }
}

impl ManifestReader<BufReader<File>> {
    pub fn open(path: impl AsRef<Path>) -> Result<Self> {
        Ok(ManifestReader::new(BufReader::new(File::open(path)?)))
    }
}

impl<R: BufRead> Iterator for ManifestReader<R> {
    type Item = Result<ManifestRecord>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            self.line += 1;
            let text = match self.lines.next()? {
                Ok(t) => t,
                Err(e) => return Some(Err(e.into())),
            };
            if !text.trim().is_empty() {
                return Some(ManifestRecord::from_line(&text, self.line));
            }
        }
    }
}

pub fn read_manifest(path: impl AsRef<Path>) -> Result<Vec<ManifestRecord>> {
    ManifestReader::open(path)?.collect()
}

/// Appends records; each record is written as one complete line.
pub struct ManifestWriter<W: Write> {
    out: W,
}

impl<W: Write> ManifestWriter<W> {
    pub fn new(out: W) -> Self {
        ManifestWriter { out }
    }

    pub fn write(&mut self, record: &ManifestRecord) -> Result<()> {
        let mut line = record.to_line();
        line.push('\n');
        self.out.write_all(line.as_bytes())?;
        Ok(())
    }

    pub fn flush(&mut self) -> Result<()> {
        self.out.flush()?;
        Ok(())
    }
}

impl ManifestWriter<BufWriter<File>> {
    /// Opens `path` for appending, creating it if missing.
    pub fn append(path: impl AsRef<Path>) -> Result<Self> {
        let file = OpenOptions::new().create(true).append(true).open(path)?;
        Ok(ManifestWriter::new(BufWriter::new(file)))
    }
}

pub fn write_manifest(path: impl AsRef<Path>, records: &[ManifestRecord]) -> Result<()> {
    let mut w = ManifestWriter::new(BufWriter::new(File::create(path)?));
    for r in records {
        w.write(r)?;
    }
    w.flush()
}
