//! Sentence tokenizer.
//!
//! Whitespace separates tokens. Leading and trailing punctuation is split off
//! into non-word tokens, hyphens between letters act as separators
//! ("forty-five" gives two tokens), and any chunk containing a digit is kept
//! whole so that literals such as `1.000,50€` survive as one token.

use std::ops::Range;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub surface: String,
    pub lowercased: String,
    pub index: usize,
    pub is_word: bool,
    /// Byte range of `surface` in the source sentence.
    pub range: Range<usize>,
}

/// Half-open token range `[start, end)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn new(start: usize, end: usize) -> Self {
        debug_assert!(start < end, "empty span {start}..{end}");
        Span { start, end }
    }

    pub fn len(&self) -> usize {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.end <= self.start
    }

    pub fn overlaps(&self, other: &Span) -> bool {
        self.start < other.end && other.start < self.end
    }
}

fn is_edge_punct(c: char) -> bool {
    if c.is_alphanumeric() {
        return false;
    }
    // currency symbols, percent and similar stay attached to their literal
    !matches!(c, '$' | '€' | '£' | '¥' | '₹' | '₽' | '₩' | '¢' | '%' | '°' | '&')
}

pub fn tokenize(sentence: &str) -> Vec<Token> {
    let mut tokens = Vec::new();
    let push = |tokens: &mut Vec<Token>, range: Range<usize>, is_word: bool| {
        let surface = &sentence[range.clone()];
        tokens.push(Token {
            surface: surface.to_string(),
            lowercased: surface.to_lowercase().replace('’', "'"),
            index: tokens.len(),
            is_word,
            range,
        });
    };

    for (chunk_start, chunk) in chunks(sentence) {
        let chunk_end = chunk_start + chunk.len();
        let core_start = chunk
            .char_indices()
            .find(|&(_, c)| !is_edge_punct(c))
            .map(|(i, _)| chunk_start + i);
        let Some(core_start) = core_start else {
            push(&mut tokens, chunk_start..chunk_end, false);
            continue;
        };
        let core_end = chunk
            .char_indices()
            .rev()
            .find(|&(_, c)| !is_edge_punct(c))
            .map(|(i, c)| chunk_start + i + c.len_utf8())
            .unwrap_or(chunk_end);

        if core_start > chunk_start {
            push(&mut tokens, chunk_start..core_start, false);
        }
        let core = &sentence[core_start..core_end];
        if core.chars().any(|c| c.is_ascii_digit()) {
            push(&mut tokens, core_start..core_end, true);
        } else {
            split_hyphenated(core, core_start, |r| {
                let is_word = sentence[r.clone()].chars().any(char::is_alphanumeric);
                push(&mut tokens, r, is_word)
            });
        }
        if core_end < chunk_end {
            push(&mut tokens, core_end..chunk_end, false);
        }
    }
    tokens
}

fn chunks(s: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut rest = s;
    let mut offset = 0;
    std::iter::from_fn(move || {
        let trimmed = rest.trim_start();
        offset += rest.len() - trimmed.len();
        if trimmed.is_empty() {
            return None;
        }
        let end = trimmed.find(char::is_whitespace).unwrap_or(trimmed.len());
        let item = (offset, &trimmed[..end]);
        offset += end;
        rest = &trimmed[end..];
        Some(item)
    })
}

/// Splits `forty-five` into `forty` and `five`; a hyphen only separates when
/// letters sit on both sides of it.
fn split_hyphenated(core: &str, base: usize, mut emit: impl FnMut(Range<usize>)) {
    let chars: Vec<(usize, char)> = core.char_indices().collect();
    let mut piece_start = 0;
    for (k, &(i, c)) in chars.iter().enumerate() {
        let between_letters = c == '-'
            && k > 0
            && k + 1 < chars.len()
            && chars[k - 1].1.is_alphabetic()
            && chars[k + 1].1.is_alphabetic();
        if between_letters {
            emit(base + piece_start..base + i);
            piece_start = i + 1;
        }
    }
    emit(base + piece_start..base + core.len());
}

/// Reassembles a sentence from token surfaces using the original separators.
pub fn reconstruct(sentence: &str, tokens: &[Token]) -> String {
    let mut out = String::with_capacity(sentence.len());
    let mut cursor = 0;
    for t in tokens {
        out.push_str(&sentence[cursor..t.range.start]);
        out.push_str(&t.surface);
        cursor = t.range.end;
    }
    out.push_str(&sentence[cursor..]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn surfaces(s: &str) -> Vec<String> {
        tokenize(s).into_iter().map(|t| t.surface).collect()
    }

    #[test]
    fn splits_trailing_punctuation() {
        assert_eq!(surfaces("in 1945."), ["in", "1945", "."]);
        let toks = tokenize("in 1945.");
        assert!(!toks[2].is_word);
    }

    #[test]
    fn clock_words() {
        let toks = tokenize("quarter to eight");
        assert_eq!(toks.len(), 3);
        assert!(toks.iter().all(|t| t.is_word));
    }

    #[test]
    fn literal_with_currency_suffix_is_one_token() {
        assert_eq!(surfaces("1.000,50€"), ["1.000,50€"]);
        assert_eq!(surfaces("costs $1,000.50."), ["costs", "$1,000.50", "."]);
    }

    #[test]
    fn hyphen_between_letters_separates() {
        assert_eq!(surfaces("in nineteen forty-five"), ["in", "nineteen", "forty", "five"]);
        assert_eq!(surfaces("well-known"), ["well", "known"]);
        assert_eq!(surfaces("o'clock"), ["o'clock"]);
    }

    #[test]
    fn indices_are_consecutive() {
        let toks = tokenize("  (Hello), world -- 7:05pm! ");
        for (i, t) in toks.iter().enumerate() {
            assert_eq!(t.index, i);
            assert!(!t.surface.is_empty());
        }
    }

    #[test]
    fn empty_sentence() {
        assert!(tokenize("").is_empty());
        assert!(tokenize("   ").is_empty());
    }

    #[test]
    fn typographic_apostrophe_is_folded() {
        assert_eq!(tokenize("o’clock")[0].lowercased, "o'clock");
    }

    proptest::proptest! {
        #[test]
        fn reconstruction_is_lossless(s in "\\PC{0,40}") {
            let toks = tokenize(&s);
            proptest::prop_assert_eq!(reconstruct(&s, &toks), s.clone());
            for t in &toks {
                proptest::prop_assert_eq!(&s[t.range.clone()], t.surface.as_str());
            }
        }
    }
}
