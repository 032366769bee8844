//! Per-type accuracy against a manifest and its rendering.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::wer::{word_error_rate, WordErrorRate};
use crate::classify::ExpressionType;
use crate::error::{Error, Result};
use crate::manifest::ManifestRecord;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeScore {
    pub correct: usize,
    pub total: usize,
}

impl TypeScore {
    /// `None` when nothing of this type was scored.
    pub fn accuracy(&self) -> Option<f64> {
        (self.total > 0).then(|| self.correct as f64 / self.total as f64)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EvalReport {
    pub scores: BTreeMap<ExpressionType, TypeScore>,
    pub wer: WordErrorRate,
}

impl EvalReport {
    pub fn score(&self, t: ExpressionType) -> TypeScore {
        self.scores.get(&t).copied().unwrap_or_default()
    }

    /// Unweighted mean of the accuracies of the types that occur.
    pub fn average(&self) -> Option<f64> {
        let accs: Vec<f64> = ExpressionType::ALL.iter().filter_map(|t| self.score(*t).accuracy()).collect();
        (!accs.is_empty()).then(|| accs.iter().sum::<f64>() / accs.len() as f64)
    }

    /// Adds one reference/hypothesis pair.
    pub fn add(&mut self, reference: &ManifestRecord, hypothesis: &str) {
        self.add_with_wer(reference, hypothesis, word_error_rate(&reference.formatted, hypothesis));
    }

    /// Like [`add`](Self::add) with a WER computed by the caller.
    pub fn add_with_wer(&mut self, reference: &ManifestRecord, hypothesis: &str, wer: WordErrorRate) {
        for e in &reference.expressions {
            let s = self.scores.entry(e.expr_type).or_default();
            s.total += 1;
            s.correct += usize::from(contains_delimited(hypothesis, &e.surface));
        }
        self.wer = self.wer + wer;
    }

    pub fn merge(mut self, other: &EvalReport) -> EvalReport {
        for (t, s) in &other.scores {
            let mine = self.scores.entry(*t).or_default();
            mine.correct += s.correct;
            mine.total += s.total;
        }
        self.wer = self.wer + other.wer;
        self
    }
}

/// A separator followed by a digit continues a numeral ("5" is not
/// delimited inside "5.5").
fn continues_numeral(sep: Option<char>, digit: Option<char>) -> bool {
    matches!(sep, Some('.' | ',' | ':')) && digit.is_some_and(|c| c.is_ascii_digit())
}

/// `needle` occurs in `haystack` bounded by the text edges, whitespace or
/// punctuation.
pub fn contains_delimited(haystack: &str, needle: &str) -> bool {
    if needle.is_empty() {
        return false;
    }
    haystack.match_indices(needle).any(|(i, _)| {
        let mut before = haystack[..i].chars().rev();
        let (b1, b2) = (before.next(), before.next());
        let mut after = haystack[i + needle.len()..].chars();
        let (a1, a2) = (after.next(), after.next());
        let edge_ok = |c: Option<char>| c.is_none_or(|c| !c.is_alphanumeric());
        edge_ok(b1) && edge_ok(a1) && !continues_numeral(b1, b2) && !continues_numeral(a1, a2)
    })
}

/// Scores every annotated expression of `references[i]` against
/// `hypotheses[i]`.
pub fn type_accuracy<S: AsRef<str>>(references: &[ManifestRecord], hypotheses: &[S]) -> Result<EvalReport> {
    if references.len() != hypotheses.len() {
        return Err(Error::contract(format!(
            "{} references but {} hypotheses",
            references.len(),
            hypotheses.len()
        )));
    }
    let mut report = EvalReport::default();
    for (r, h) in references.iter().zip(hypotheses) {
        report.add(r, h.as_ref());
    }
    Ok(report)
}

/// Percentage with one decimal, halves rounded up. The epsilon absorbs
/// binary error in values such as 0.5765 that are meant to round up.
pub fn percent(fraction: f64) -> String {
    let tenths = (fraction * 1000.0 + 0.5 + 1e-9).floor();
    format!("{:.1}", tenths / 10.0)
}

const COLUMNS: [&str; 6] = ["WER", "years", "timestamps", "currency amounts", "quantities", "average"];

fn cells(report: &EvalReport) -> Vec<String> {
    let mut cells = vec![percent(report.wer.value())];
    for t in ExpressionType::ALL {
        cells.push(report.score(t).accuracy().map_or_else(|| "-".to_string(), percent));
    }
    cells.push(report.average().map_or_else(|| "-".to_string(), percent));
    cells
}

/// Aligned text table: WER, per-type accuracy and average, all in percent.
pub fn render_report(report: &EvalReport) -> String {
    let cells = cells(report);
    let widths: Vec<usize> = COLUMNS.iter().zip(&cells).map(|(h, c)| h.len().max(c.len())).collect();
    let mut out = String::new();
    for row in [COLUMNS.iter().map(|s| s.to_string()).collect::<Vec<_>>(), cells] {
        let line: Vec<String> = row.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
        writeln!(out, "{}", line.join("  ")).unwrap();
    }
    out
}

const TSV_HEADER: &str = "metric\tcorrect\ttotal\tpercent";

/// Tab-separated form carrying the raw counts, readable by [`parse_tsv`].
pub fn render_tsv(report: &EvalReport) -> String {
    let mut out = format!("{TSV_HEADER}\n");
    let w = report.wer;
    writeln!(out, "wer\t{}\t{}\t{}", w.edits, w.reference_len, percent(w.value())).unwrap();
    for t in ExpressionType::ALL {
        let s = report.score(t);
        let pct = s.accuracy().map_or_else(|| "-".to_string(), percent);
        writeln!(out, "{}\t{}\t{}\t{}", t.key(), s.correct, s.total, pct).unwrap();
    }
    let avg = report.average().map_or_else(|| "-".to_string(), percent);
    writeln!(out, "average\t-\t-\t{avg}").unwrap();
    out
}

pub fn parse_tsv(text: &str) -> Result<EvalReport> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, h)) if h == TSV_HEADER => {}
        _ => return Err(Error::contract("missing report header")),
    }
    let mut report = EvalReport::default();
    for (i, line) in lines {
        let bad = || Error::Manifest { line: i + 1, message: format!("bad report row `{line}`") };
        let fields: Vec<&str> = line.split('\t').collect();
        let [metric, correct, total, _] = fields[..] else {
            return Err(bad());
        };
        if metric == "average" {
            continue;
        }
        let correct: usize = correct.parse().map_err(|_| bad())?;
        let total: usize = total.parse().map_err(|_| bad())?;
        if metric == "wer" {
            report.wer = WordErrorRate { edits: correct, reference_len: total };
        } else {
            let t: ExpressionType = metric.parse().map_err(|_| bad())?;
            if total > 0 {
                report.scores.insert(t, TypeScore { correct, total });
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::manifest::ExpressionAnnotation;

    fn record(formatted: &str, surface: &str, t: ExpressionType) -> ManifestRecord {
        ManifestRecord {
            id: "r".into(),
            locale: "en".into(),
            expr_type: t,
            verbalized: String::new(),
            formatted: formatted.into(),
            expressions: vec![ExpressionAnnotation { surface: surface.into(), expr_type: t }],
            audio: None,
            voice: None,
            duration: None,
        }
    }

    #[test]
    fn delimited_matching() {
        assert!(contains_delimited("We meet at 19:45.", "19:45"));
        assert!(!contains_delimited("at 4pm today", "16:00"));
        assert!(!contains_delimited("$1,000.500", "$1,000.50"));
        assert!(!contains_delimited("5.5 kg", "5"));
        assert!(!contains_delimited("a19:45", "19:45"));
    }

    #[test]
    fn accuracy_and_average() {
        let refs = [
            record("at 19:45", "19:45", ExpressionType::Timestamp),
            record("at 16:00", "16:00", ExpressionType::Timestamp),
            record("in 1945", "1945", ExpressionType::Year),
        ];
        let r = type_accuracy(&refs, &["at 19:45", "at 4pm", "in 1945"]).unwrap();
        assert_eq!(r.score(ExpressionType::Timestamp), TypeScore { correct: 1, total: 2 });
        assert_eq!(r.average(), Some(0.75));
        assert_eq!(r.wer, WordErrorRate { edits: 1, reference_len: 6 });
        assert!(type_accuracy(&refs, &["x"]).is_err());
    }

    #[test]
    fn empty_corpus() {
        let r = type_accuracy::<&str>(&[], &[]).unwrap();
        assert_eq!(r.average(), None);
        assert!(render_report(&r).contains('-'));
    }

    #[test]
    fn rounding() {
        assert_eq!(percent(0.57649), "57.6");
        assert_eq!(percent(0.974), "97.4");
        assert_eq!(percent(0.5765), "57.7");
        assert_eq!(percent(0.0), "0.0");
        assert_eq!(percent(1.0), "100.0");
    }

    #[test]
    fn tsv_round_trip() {
        let mut r = EvalReport::default();
        r.scores.insert(ExpressionType::Year, TypeScore { correct: 974, total: 1000 });
        r.scores.insert(ExpressionType::Currency, TypeScore { correct: 3, total: 7 });
        r.wer = WordErrorRate { edits: 13, reference_len: 200 };
        assert_eq!(parse_tsv(&render_tsv(&r)).unwrap(), r);
    }
}
