//! Word error rate over whitespace tokens.

use std::fmt;
use std::ops::Add;

use crate::itn::normalize_sentence;
use crate::locale::Locale;

/// Edit count over reference length, kept as integers so corpus sums stay
/// exact. An empty reference counts as length one in [`value`](Self::value).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct WordErrorRate {
    pub edits: usize,
    pub reference_len: usize,
}

impl WordErrorRate {
    pub fn value(&self) -> f64 {
        match self.reference_len {
            0 => self.edits as f64,
            n => self.edits as f64 / n as f64,
        }
    }
}

impl Add for WordErrorRate {
    type Output = WordErrorRate;

    fn add(self, rhs: Self) -> Self {
        WordErrorRate {
            edits: self.edits + rhs.edits,
            reference_len: self.reference_len + rhs.reference_len,
        }
    }
}

impl std::iter::Sum for WordErrorRate {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(WordErrorRate::default(), Add::add)
    }
}

impl fmt::Display for WordErrorRate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.edits, self.reference_len.max(1))
    }
}

/// Unit-cost Levenshtein distance.
pub fn edit_distance<T: PartialEq>(a: &[T], b: &[T]) -> usize {
    let mut row: Vec<usize> = (0..=b.len()).collect();
    for (i, x) in a.iter().enumerate() {
        let mut diag = row[0];
        row[0] = i + 1;
        for (j, y) in b.iter().enumerate() {
            let next = (diag + usize::from(x != y)).min(row[j] + 1).min(row[j + 1] + 1);
            diag = row[j + 1];
            row[j + 1] = next;
        }
    }
    row[b.len()]
}

/// Case- and punctuation-sensitive: tokens are split on whitespace only.
pub fn word_error_rate(reference: &str, hypothesis: &str) -> WordErrorRate {
    let r: Vec<&str> = reference.split_whitespace().collect();
    let h: Vec<&str> = hypothesis.split_whitespace().collect();
    WordErrorRate { edits: edit_distance(&r, &h), reference_len: r.len() }
}

/// WER after normalizing both sides, so "nineteen forty-five" and "1945"
/// compare equal.
pub fn normalized_word_error_rate(reference: &str, hypothesis: &str, locale: &Locale) -> WordErrorRate {
    word_error_rate(
        &normalize_sentence(reference, locale).text,
        &normalize_sentence(hypothesis, locale).text,
    )
}
