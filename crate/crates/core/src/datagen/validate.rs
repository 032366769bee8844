//! The record filter: the conversion must add literals and change nothing
//! but the number-word spans.

use crate::eval::{Extractor, LiteralMatch};
use crate::locale::Locale;

/// `converted` has a literal, `verbalized` has none, and the text between
/// the literals of `converted` appears unchanged and in order in
/// `verbalized`, with each literal replacing a non-empty stretch.
pub fn validate_record(verbalized: &str, converted: &str, locale: &Locale) -> bool {
    validate_with(&Extractor::for_locales(std::slice::from_ref(locale)), verbalized, converted)
}

/// [`validate_record`] with an extractor compiled once by the caller.
pub(crate) fn validate_with(extractor: &Extractor, verbalized: &str, converted: &str) -> bool {
    let literals = extractor.extract(converted);
    if literals.is_empty() || !extractor.extract(verbalized).is_empty() {
        return false;
    }
    edits_are_local(verbalized, converted, &literals)
}

fn edits_are_local(verbalized: &str, converted: &str, literals: &[LiteralMatch]) -> bool {
    let mut segments = Vec::with_capacity(literals.len() + 1);
    let mut pos = 0;
    for m in literals {
        segments.push(&converted[pos..m.bytes.start]);
        pos = m.bytes.end;
    }
    segments.push(&converted[pos..]);

    let (first, rest) = segments.split_first().expect("at least one segment");
    let (last, middle) = rest.split_last().expect("at least two segments");
    let Some(mut cursor) = verbalized.strip_prefix(first).map(|_| first.len()) else {
        return false;
    };
    for seg in middle {
        // skip at least one byte: the literal replaced something
        let from = cursor + verbalized[cursor..].chars().next().map_or(1, char::len_utf8);
        if from > verbalized.len() {
            return false;
        }
        match verbalized[from..].find(seg) {
            Some(i) => cursor = from + i + seg.len(),
            None => return false,
        }
    }
    verbalized.len() > cursor + last.len() && verbalized.ends_with(last)
}
