//! Number-to-words rendering, the inverse of the cardinal grammar.

use crate::grammar::NumericValue;
use crate::locale::Language;

const EN_ONES: [&str; 20] = [
    "zero", "one", "two", "three", "four", "five", "six", "seven", "eight", "nine", "ten",
    "eleven", "twelve", "thirteen", "fourteen", "fifteen", "sixteen", "seventeen", "eighteen",
    "nineteen",
];
const EN_TENS: [&str; 10] =
    ["", "", "twenty", "thirty", "forty", "fifty", "sixty", "seventy", "eighty", "ninety"];
const EN_SCALES: [(u128, &str); 4] = [
    (1_000_000_000_000, "trillion"),
    (1_000_000_000, "billion"),
    (1_000_000, "million"),
    (1_000, "thousand"),
];

const DE_ONES: [&str; 20] = [
    "null", "eins", "zwei", "drei", "vier", "fünf", "sechs", "sieben", "acht", "neun", "zehn",
    "elf", "zwölf", "dreizehn", "vierzehn", "fünfzehn", "sechzehn", "siebzehn", "achtzehn",
    "neunzehn",
];
const DE_TENS: [&str; 10] = [
    "", "", "zwanzig", "dreißig", "vierzig", "fünfzig", "sechzig", "siebzig", "achtzig", "neunzig",
];
const DE_SCALES: [(u128, &str, &str); 3] = [
    (1_000_000_000_000, "Billion", "Billionen"),
    (1_000_000_000, "Milliarde", "Milliarden"),
    (1_000_000, "Million", "Millionen"),
];

fn en_below_hundred(n: u128) -> String {
    let n = n as usize;
    if n < 20 {
        EN_ONES[n].to_string()
    } else if n.is_multiple_of(10) {
        EN_TENS[n / 10].to_string()
    } else {
        format!("{}-{}", EN_TENS[n / 10], EN_ONES[n % 10])
    }
}

fn en_below_thousand(n: u128) -> String {
    let (h, r) = (n / 100, n % 100);
    match (h, r) {
        (0, r) => en_below_hundred(r),
        (h, 0) => format!("{} hundred", EN_ONES[h as usize]),
        (h, r) => format!("{} hundred {}", EN_ONES[h as usize], en_below_hundred(r)),
    }
}

pub fn en_integer(n: u128) -> String {
    if n == 0 {
        return "zero".into();
    }
    let mut parts = Vec::new();
    let mut rest = n;
    for (size, name) in EN_SCALES {
        if rest >= size {
            parts.push(format!("{} {}", en_below_thousand(rest / size), name));
            rest %= size;
        }
    }
    if rest > 0 {
        parts.push(en_below_thousand(rest));
    }
    parts.join(" ")
}

/// `standalone` selects "eins" over the compound prefix "ein".
fn de_below_hundred(n: u128, standalone: bool) -> String {
    let n = n as usize;
    match n {
        1 if !standalone => "ein".into(),
        0..=19 => DE_ONES[n].to_string(),
        _ if n.is_multiple_of(10) => DE_TENS[n / 10].to_string(),
        _ => {
            let unit = if n % 10 == 1 { "ein" } else { DE_ONES[n % 10] };
            format!("{unit}und{}", DE_TENS[n / 10])
        }
    }
}

fn de_below_thousand(n: u128, standalone: bool) -> String {
    let (h, r) = (n / 100, n % 100);
    let mut out = String::new();
    if h > 0 {
        out.push_str(&de_below_hundred(h, false));
        out.push_str("hundert");
    }
    if r > 0 || h == 0 {
        out.push_str(&de_below_hundred(r, standalone));
    }
    out
}

fn de_below_million(n: u128, standalone: bool) -> String {
    let (t, r) = (n / 1000, n % 1000);
    let mut out = String::new();
    if t > 0 {
        out.push_str(&de_below_thousand(t, false));
        out.push_str("tausend");
    }
    if r > 0 || t == 0 {
        out.push_str(&de_below_thousand(r, standalone));
    }
    out
}

pub fn de_integer(n: u128) -> String {
    if n == 0 {
        return "null".into();
    }
    let mut parts = Vec::new();
    let mut rest = n;
    for (size, one, many) in DE_SCALES {
        if rest >= size {
            let count = rest / size;
            if count == 1 {
                parts.push(format!("eine {one}"));
            } else {
                parts.push(format!("{} {many}", de_below_million(count, true)));
            }
            rest %= size;
        }
    }
    if rest > 0 {
        parts.push(de_below_million(rest, true));
    }
    parts.join(" ")
}

pub fn integer(n: u128, language: Language) -> String {
    match language {
        Language::En => en_integer(n),
        Language::De => de_integer(n),
    }
}

/// Form used directly before a noun: German "ein Euro", "eine Million".
pub fn integer_attributive(n: u128, language: Language, feminine: bool) -> String {
    match (language, n) {
        (Language::De, 1) if feminine => "eine".into(),
        (Language::De, 1) => "ein".into(),
        _ => integer(n, language),
    }
}

fn digit(d: u8, language: Language) -> &'static str {
    match language {
        Language::En => EN_ONES[d as usize],
        Language::De => DE_ONES[d as usize],
    }
}

/// Integer part, then "point"/"Komma" and each fraction digit on its own.
pub fn value(v: &NumericValue, language: Language) -> String {
    let mut out = integer(v.integer_part(), language);
    if v.scale() > 0 {
        out.push_str(match language {
            Language::En => " point",
            Language::De => " Komma",
        });
        for c in v.fraction_digits().bytes() {
            out.push(' ');
            out.push_str(digit(c - b'0', language));
        }
    }
    out
}

/// Year reading: "nineteen forty-five", "neunzehnhundertfünfundvierzig".
pub fn year(y: u16, language: Language) -> String {
    let y = y as u128;
    let (hi, lo) = (y / 100, y % 100);
    match language {
        Language::En => match y {
            1100..=1999 => match lo {
                0 => format!("{} hundred", en_below_hundred(hi)),
                1..=9 => format!("{} oh {}", en_below_hundred(hi), EN_ONES[lo as usize]),
                _ => format!("{} {}", en_below_hundred(hi), en_below_hundred(lo)),
            },
            2010..=2099 => format!("twenty {}", en_below_hundred(lo)),
            _ => en_integer(y),
        },
        Language::De => match y {
            1100..=1999 => {
                let mut s = format!("{}hundert", de_below_hundred(hi, false));
                if lo > 0 {
                    s.push_str(&de_below_hundred(lo, true));
                }
                s
            }
            _ => de_integer(y),
        },
    }
}
