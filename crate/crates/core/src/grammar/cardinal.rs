//! Cardinal number grammar over lexicon atoms.
//!
//! A cardinal is a sequence of groups (`[multiplier hundred] [tail]`) each
//! optionally followed by a scale word, with strictly decreasing scales. A
//! trailing `point d d d` adds a decimal fraction, and a decimal or a single
//! group followed by million/billion/trillion keeps that magnitude word.
//! English additionally accepts the two-digit-pair year reading
//! ("nineteen forty-five") for 1100-1999 and 2000-2099.

use super::lexicon::{atoms_for, Atom};
use super::token::Token;
use super::value::{NumericValue, MAX_SCALE};
use crate::locale::Language;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct CardinalMatch {
    /// Exclusive token end.
    pub end: usize,
    pub value: NumericValue,
    /// Magnitude word as spoken, in canonical casing.
    pub magnitude_word: Option<String>,
    pub year_reading: bool,
}

struct AtomStream {
    atoms: Vec<Atom>,
    /// Token index of each atom.
    token_of: Vec<usize>,
}

impl AtomStream {
    fn collect(tokens: &[Token], at: usize, language: Language) -> Self {
        let mut atoms = Vec::new();
        let mut token_of = Vec::new();
        for tok in tokens.iter().skip(at) {
            if !tok.is_word {
                break;
            }
            let Some(a) = atoms_for(&tok.lowercased, language) else {
                break;
            };
            token_of.extend(std::iter::repeat_n(tok.index, a.len()));
            atoms.extend(a);
        }
        AtomStream { atoms, token_of }
    }

    fn get(&self, i: usize) -> Option<Atom> {
        self.atoms.get(i).copied()
    }

    fn aligned(&self, end: usize) -> bool {
        end > 0 && (end == self.atoms.len() || self.token_of[end] != self.token_of[end - 1])
    }

    fn token_end(&self, end: usize) -> usize {
        self.token_of[end - 1] + 1
    }
}

#[derive(Debug, Clone, Copy)]
struct IntParse {
    end: usize,
    value: u128,
    /// Set when the whole parse is `<group> <scale>=6..12>`.
    magnitude: Option<(u128, u8)>,
    year_reading: bool,
}

#[derive(Debug, Clone, Copy)]
struct Group {
    end: usize,
    value: u128,
    /// Multiplier in front of "hundred", 0 if none.
    hundred_multiplier: u128,
}

fn tail(s: &AtomStream, i: usize, language: Language, out: &mut Vec<(usize, u128)>) {
    match s.get(i) {
        Some(Atom::Digit(d)) => {
            out.push((i + 1, d as u128));
            if language == Language::De && d >= 1 && s.get(i + 1) == Some(Atom::And) {
                if let Some(Atom::Tens(t)) = s.get(i + 2) {
                    out.push((i + 3, (t + d) as u128));
                }
            }
        }
        Some(Atom::Teen(t)) => out.push((i + 1, t as u128)),
        Some(Atom::Tens(t)) => {
            out.push((i + 1, t as u128));
            if language == Language::En {
                if let Some(Atom::Digit(d)) = s.get(i + 1) {
                    if d >= 1 {
                        out.push((i + 2, (t + d) as u128));
                    }
                }
            }
        }
        _ => {}
    }
}

fn hundreds(s: &AtomStream, j: usize, multiplier: u128, language: Language, out: &mut Vec<Group>) {
    let base = multiplier * 100;
    out.push(Group { end: j, value: base, hundred_multiplier: multiplier });
    let k = if s.get(j) == Some(Atom::And) { j + 1 } else { j };
    let mut tails = Vec::new();
    tail(s, k, language, &mut tails);
    for (e, v) in tails {
        if v >= 1 {
            out.push(Group { end: e, value: base + v, hundred_multiplier: multiplier });
        }
    }
}

fn groups(s: &AtomStream, i: usize, language: Language, first: bool) -> Vec<Group> {
    let mut out = Vec::new();
    let mut tails = Vec::new();
    tail(s, i, language, &mut tails);
    for (e, v) in tails {
        if v == 0 {
            if first {
                out.push(Group { end: e, value: 0, hundred_multiplier: 0 });
            }
            continue;
        }
        out.push(Group { end: e, value: v, hundred_multiplier: 0 });
        if s.get(e) == Some(Atom::Hundred) {
            hundreds(s, e + 1, v, language, &mut out);
        }
    }
    // German allows a bare "hundert" (= einhundert).
    if language == Language::De && s.get(i) == Some(Atom::Hundred) {
        hundreds(s, i + 1, 1, language, &mut out);
    }
    out
}

fn integers(s: &AtomStream, language: Language) -> Vec<IntParse> {
    let mut out = Vec::new();
    integer_rec(s, 0, 0, u8::MAX, true, language, &mut out);
    out
}

fn integer_rec(
    s: &AtomStream,
    pos: usize,
    total: u128,
    last_scale: u8,
    first: bool,
    language: Language,
    out: &mut Vec<IntParse>,
) {
    for g in groups(s, pos, language, first) {
        if g.value == 0 {
            out.push(IntParse { end: g.end, value: 0, magnitude: None, year_reading: false });
            continue;
        }
        let year_reading = first
            && language == Language::De
            && (11..=19).contains(&g.hundred_multiplier);
        out.push(IntParse { end: g.end, value: total + g.value, magnitude: None, year_reading });
        if let Some(Atom::Scale(sc)) = s.get(g.end) {
            if sc < last_scale && g.hundred_multiplier <= 9 {
                let next = total + g.value * 10u128.pow(sc as u32);
                let magnitude = (first && sc >= 6).then_some((g.value, sc));
                out.push(IntParse { end: g.end + 1, value: next, magnitude, year_reading: false });
                integer_rec(s, g.end + 1, next, sc, false, language, out);
            }
        }
    }
    // German allows a bare "tausend" (= eintausend).
    if first && language == Language::De && s.get(pos) == Some(Atom::Scale(3)) {
        out.push(IntParse { end: pos + 1, value: 1000, magnitude: None, year_reading: false });
        integer_rec(s, pos + 1, 1000, 3, false, language, out);
    }
}

/// Decimal extension of an integer parse: `point d..` plus optional magnitude.
fn decimals(s: &AtomStream, int: &IntParse, out: &mut Vec<(usize, NumericValue, Option<u8>)>) {
    if int.magnitude.is_some() || s.get(int.end) != Some(Atom::Point) {
        return;
    }
    let mut mantissa = int.value;
    let mut scale = 0u8;
    let mut j = int.end + 1;
    while scale < MAX_SCALE {
        let Some(d) = s.get(j).and_then(Atom::digit_value) else { break };
        mantissa = mantissa * 10 + d as u128;
        scale += 1;
        j += 1;
        let Ok(v) = NumericValue::new(mantissa, scale) else { return };
        out.push((j, v, None));
        if let Some(Atom::Scale(sc)) = s.get(j) {
            if sc >= 6 {
                out.push((j + 1, v, Some(sc)));
            }
        }
    }
}

fn pair_reading(s: &AtomStream) -> Option<(usize, u128)> {
    let mut firsts = Vec::new();
    tail(s, 0, Language::En, &mut firsts);
    let (e1, hi) = firsts.into_iter().find(|&(_, v)| (11..=20).contains(&v))?;
    let mut best = None;
    if s.get(e1) == Some(Atom::Oh) {
        if let Some(Atom::Digit(d)) = s.get(e1 + 1) {
            if d >= 1 {
                best = Some((e1 + 2, hi * 100 + d as u128));
            }
        }
    } else {
        let mut seconds = Vec::new();
        tail(s, e1, Language::En, &mut seconds);
        best = seconds
            .into_iter()
            .filter(|&(_, v)| (10..=99).contains(&v))
            .max_by_key(|&(e, _)| e)
            .map(|(e, lo)| (e, hi * 100 + lo));
    }
    let (end, value) = best?;
    let in_range = (1100..=1999).contains(&value) || (2000..=2099).contains(&value);
    let continues = matches!(s.get(end), Some(Atom::Hundred | Atom::Scale(_) | Atom::Point));
    (in_range && !continues).then_some((end, value))
}

fn canonical_magnitude(tokens: &[Token], token: usize, language: Language) -> String {
    let w = &tokens[token].lowercased;
    match language {
        Language::En => w.clone(),
        Language::De => {
            let mut c = w.chars();
            c.next()
                .map(|f| f.to_uppercase().chain(c).collect())
                .unwrap_or_default()
        }
    }
}

pub(crate) fn match_cardinal(
    tokens: &[Token],
    at: usize,
    language: Language,
    allow_pair: bool,
) -> Option<CardinalMatch> {
    cardinal_at(tokens, at, language, allow_pair).ok().flatten()
}

/// Token end of the number-word run at `at` when that run is malformed
/// (a scale word with nothing to attach to). Nothing inside such a run may
/// start a match, or a second pass would read it differently.
pub(crate) fn malformed_run_end(tokens: &[Token], at: usize, language: Language) -> Option<usize> {
    cardinal_at(tokens, at, language, true).err()
}

fn cardinal_at(
    tokens: &[Token],
    at: usize,
    language: Language,
    allow_pair: bool,
) -> Result<Option<CardinalMatch>, usize> {
    let s = AtomStream::collect(tokens, at, language);
    if s.atoms.is_empty() || s.atoms[0].is_connector() {
        return Ok(None);
    }

    // (atom end, value, magnitude exponent, year reading)
    let mut cands: Vec<(usize, NumericValue, Option<u8>, bool)> = Vec::new();
    for int in integers(&s, language) {
        let value = match int.magnitude {
            Some((m, _)) => m,
            None => int.value,
        };
        let Ok(v) = NumericValue::new(value, 0) else { continue };
        cands.push((int.end, v, int.magnitude.map(|(_, e)| e), int.year_reading));
        let mut dec = Vec::new();
        decimals(&s, &int, &mut dec);
        cands.extend(dec.into_iter().map(|(e, v, m)| (e, v, m, false)));
    }
    if allow_pair && language == Language::En {
        if let Some((end, value)) = pair_reading(&s) {
            if let Ok(v) = NumericValue::new(value, 0) {
                cands.push((end, v, None, true));
            }
        }
    }

    let Some(best) = cands
        .iter()
        .filter(|c| s.aligned(c.0))
        .fold(None::<&(usize, NumericValue, Option<u8>, bool)>, |acc, c| match acc {
            Some(a) if a.0 >= c.0 => Some(a),
            _ => Some(c),
        })
    else {
        return Ok(None);
    };
    let (end, value, magnitude, year_reading) = *best;

    // A scale word that could not attach makes the whole phrase malformed.
    if matches!(s.get(end), Some(Atom::Hundred | Atom::Scale(_))) {
        return Err(s.token_end(s.atoms.len()));
    }

    Ok(Some(CardinalMatch {
        end: s.token_end(end),
        value,
        magnitude_word: magnitude.map(|_| canonical_magnitude(tokens, s.token_of[end - 1], language)),
        year_reading,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::token::tokenize;

    fn parse(text: &str, lang: Language) -> Option<(usize, String, Option<String>, bool)> {
        let toks = tokenize(text);
        match_cardinal(&toks, 0, lang, true)
            .map(|m| (m.end, m.value.to_string(), m.magnitude_word, m.year_reading))
    }

    fn value(text: &str, lang: Language) -> Option<String> {
        parse(text, lang).map(|p| p.1)
    }

    #[test]
    fn english_basics() {
        assert_eq!(value("zero", Language::En).as_deref(), Some("0"));
        assert_eq!(value("forty-five", Language::En).as_deref(), Some("45"));
        assert_eq!(value("forty five", Language::En).as_deref(), Some("45"));
        assert_eq!(
            value("two hundred thirty-four thousand five hundred sixty-seven", Language::En)
                .as_deref(),
            Some("234567")
        );
        assert_eq!(value("one hundred and five", Language::En).as_deref(), Some("105"));
        assert_eq!(value("twenty-five hundred", Language::En).as_deref(), Some("2500"));
        assert_eq!(value("hello", Language::En), None);
    }

    #[test]
    fn pair_reading_years() {
        assert_eq!(parse("nineteen forty-five", Language::En), Some((3, "1945".into(), None, true)));
        assert_eq!(value("nineteen oh five", Language::En).as_deref(), Some("1905"));
        assert_eq!(value("twenty twenty-four", Language::En).as_deref(), Some("2024"));
        assert_eq!(value("twenty ten", Language::En).as_deref(), Some("2010"));
        // outside the pair ranges the words stay separate
        assert_eq!(parse("five three", Language::En).map(|p| p.0), Some(1));
        assert_eq!(parse("twenty-one forty", Language::En).map(|p| p.0), Some(2));
        assert_eq!(parse("ten fifty", Language::En).map(|p| p.0), Some(1));
        // pair reading never pre-empts an ordinary compound
        assert_eq!(parse("twenty five", Language::En), Some((2, "25".into(), None, false)));
    }

    #[test]
    fn decimals_and_magnitudes() {
        assert_eq!(
            parse("nine point one million", Language::En),
            Some((4, "9.1".into(), Some("million".into()), false))
        );
        assert_eq!(value("zero point zero five", Language::En).as_deref(), Some("0.05"));
        assert_eq!(
            parse("two million", Language::En),
            Some((2, "2".into(), Some("million".into()), false))
        );
        assert_eq!(
            parse("two million five hundred thousand", Language::En).map(|p| (p.1, p.2)),
            Some(("2500000".into(), None))
        );
        assert_eq!(
            parse("neun Komma eins Millionen", Language::De),
            Some((4, "9.1".into(), Some("Millionen".into()), false))
        );
        // "point" without digits ends the number
        assert_eq!(parse("nine point", Language::En).map(|p| p.0), Some(1));
    }

    #[test]
    fn malformed_scales_are_rejected() {
        assert_eq!(parse("two thousand million thousand", Language::En), None);
        assert_eq!(parse("two thousand three thousand", Language::En), None);
        assert_eq!(parse("nine point one thousand", Language::En), None);
    }

    #[test]
    fn german_compounds() {
        assert_eq!(value("zweitausend", Language::De).as_deref(), Some("2000"));
        assert_eq!(value("fünfundvierzig", Language::De).as_deref(), Some("45"));
        assert_eq!(value("eintausend", Language::De).as_deref(), Some("1000"));
        assert_eq!(value("tausend", Language::De).as_deref(), Some("1000"));
        assert_eq!(value("hundertzwei", Language::De).as_deref(), Some("102"));
        assert_eq!(value("zwei tausend", Language::De).as_deref(), Some("2000"));
        assert_eq!(value("fünf und zwanzig", Language::De).as_deref(), Some("25"));
        assert_eq!(
            value(
                "zwei Millionen dreihundertvierundzwanzigtausendeins",
                Language::De
            )
            .as_deref(),
            Some("2324001")
        );
        assert_eq!(
            parse("neunzehnhundertfünfundvierzig", Language::De),
            Some((1, "1945".into(), None, true))
        );
        assert_eq!(
            parse("eine Million", Language::De),
            Some((2, "1".into(), Some("Million".into()), false))
        );
    }

    #[test]
    fn zero_only_stands_alone() {
        assert_eq!(parse("zero hundred", Language::En), None);
        assert_eq!(parse("null", Language::De).map(|p| p.1), Some("0".into()));
    }
}
