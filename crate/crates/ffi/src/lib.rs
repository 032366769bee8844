//! C ABI over the numex engine.
//!
//! Every call returns a [`NumexStatus`]. On failure the message is kept per
//! thread and read with [`numex_last_error_message`]. Strings handed out are
//! NUL-terminated UTF-8 and must be released with [`numex_string_free`].

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use libc::c_char;
use numex::eval::{extract_numeric_literals, guard, word_error_rate, Extractor, GuardConfig};
use numex::itn::{verbalize_sentence, Normalizer};
use numex::{Error, Language, Locale};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NumexStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    InvalidArgument = 3,
    ContractViolation = 4,
    ConfigError = 5,
    IoError = 6,
    Panic = 7,
}

/// Opaque engine bound to one locale.
pub struct NumexEngine {
    normalizer: Normalizer,
    extractor: Extractor,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<String>) {
    let text = message.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

struct Failure(NumexStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Contract(_) => NumexStatus::ContractViolation,
            Error::Config(_) => NumexStatus::ConfigError,
            Error::Io(_) | Error::Manifest { .. } => NumexStatus::IoError,
            Error::Client(_) | Error::Generation(_) => NumexStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn guarded(f: impl FnOnce() -> Outcome) -> NumexStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => NumexStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("internal panic");
            NumexStatus::Panic
        }
    }
}

/// # Safety
/// `p` is NULL or a valid NUL-terminated string.
unsafe fn text<'a>(p: *const c_char, name: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(NumexStatus::NullArgument, format!("{name} is NULL")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(NumexStatus::InvalidUtf8, format!("{name} is not valid UTF-8")))
}

fn check_out<T>(p: *mut T, name: &str) -> Outcome {
    if p.is_null() {
        return Err(Failure(NumexStatus::NullArgument, format!("{name} is NULL")));
    }
    Ok(())
}

fn owned(s: String) -> Result<*mut c_char, Failure> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| Failure(NumexStatus::InvalidArgument, "output contains NUL".into()))
}

/// # Safety
/// `engine` is NULL or a live handle from this library.
unsafe fn engine_ref<'a>(engine: *const NumexEngine) -> Result<&'a NumexEngine, Failure> {
    engine.as_ref().ok_or_else(|| Failure(NumexStatus::NullArgument, "engine is NULL".into()))
}

fn new_engine(locale: Locale) -> Box<NumexEngine> {
    let extractor = Extractor::for_locales(std::slice::from_ref(&locale));
    Box::new(NumexEngine { normalizer: Normalizer::new(locale), extractor })
}

/// Creates an engine for the preset `locale` ("en" or "de").
///
/// # Safety
/// `locale` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn numex_engine_new(locale: *const c_char, out: *mut *mut NumexEngine) -> NumexStatus {
    guarded(|| {
        check_out(out, "out")?;
        let language: Language = text(locale, "locale")?.parse()?;
        *out = Box::into_raw(new_engine(Locale::preset(language)));
        Ok(())
    })
}

/// Creates an engine from a locale configuration file.
///
/// # Safety
/// `path` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn numex_engine_from_config(path: *const c_char, out: *mut *mut NumexEngine) -> NumexStatus {
    guarded(|| {
        check_out(out, "out")?;
        let locale = Locale::from_config_file(text(path, "path")?)?;
        *out = Box::into_raw(new_engine(locale));
        Ok(())
    })
}

/// # Safety
/// `engine` is NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn numex_engine_free(engine: *mut NumexEngine) {
    if !engine.is_null() {
        drop(Box::from_raw(engine));
    }
}

/// Number words → formatted literals. `*out` receives an owned string.
///
/// # Safety
/// `engine` is live, `sentence` NUL-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn numex_normalize(
    engine: *const NumexEngine,
    sentence: *const c_char,
    out: *mut *mut c_char,
) -> NumexStatus {
    guarded(|| {
        check_out(out, "out")?;
        let engine = engine_ref(engine)?;
        *out = owned(engine.normalizer.normalize(text(sentence, "sentence")?).text)?;
        Ok(())
    })
}

/// Formatted literals → number words. `*out` receives an owned string.
///
/// # Safety
/// `engine` is live, `sentence` NUL-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn numex_verbalize(
    engine: *const NumexEngine,
    sentence: *const c_char,
    out: *mut *mut c_char,
) -> NumexStatus {
    guarded(|| {
        check_out(out, "out")?;
        let engine = engine_ref(engine)?;
        *out = owned(verbalize_sentence(text(sentence, "sentence")?, engine.normalizer.locale()))?;
        Ok(())
    })
}

/// Literals as a JSON array of `{"start","end","text","type"}`, offsets in
/// characters. A NULL engine uses the preset currency symbols of both
/// locales.
///
/// # Safety
/// `engine` is NULL or live, `text_in` NUL-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn numex_extract_json(
    engine: *const NumexEngine,
    text_in: *const c_char,
    out: *mut *mut c_char,
) -> NumexStatus {
    guarded(|| {
        check_out(out, "out")?;
        let input = text(text_in, "text")?;
        let found = match engine.as_ref() {
            Some(e) => e.extractor.extract(input),
            None => extract_numeric_literals(input),
        };
        let json: Vec<serde_json::Value> = found
            .into_iter()
            .map(|m| {
                serde_json::json!({
                    "start": m.chars.start,
                    "end": m.chars.end,
                    "text": m.text,
                    "type": m.guessed.key(),
                })
            })
            .collect();
        *out = owned(serde_json::Value::Array(json).to_string())?;
        Ok(())
    })
}

/// Word error rate of `hypothesis` against `reference`.
///
/// # Safety
/// Both strings NUL-terminated; out pointers writable or NULL when unwanted.
#[no_mangle]
pub unsafe extern "C" fn numex_wer(
    reference: *const c_char,
    hypothesis: *const c_char,
    out_edits: *mut usize,
    out_reference_len: *mut usize,
    out_value: *mut f64,
) -> NumexStatus {
    guarded(|| {
        let w = word_error_rate(text(reference, "reference")?, text(hypothesis, "hypothesis")?);
        if let Some(p) = out_edits.as_mut() {
            *p = w.edits;
        }
        if let Some(p) = out_reference_len.as_mut() {
            *p = w.reference_len;
        }
        if let Some(p) = out_value.as_mut() {
            *p = w.value();
        }
        Ok(())
    })
}

/// Keeps `segmented` iff its WER against `original` is at most `threshold`.
/// `*out_text` receives an owned copy of the returned text.
///
/// # Safety
/// Strings NUL-terminated; `out_kept` and `out_text` writable; `out_wer`
/// writable or NULL.
#[no_mangle]
pub unsafe extern "C" fn numex_guard(
    original: *const c_char,
    segmented: *const c_char,
    threshold: f64,
    out_kept: *mut bool,
    out_wer: *mut f64,
    out_text: *mut *mut c_char,
) -> NumexStatus {
    guarded(|| {
        check_out(out_kept, "out_kept")?;
        check_out(out_text, "out_text")?;
        let config = GuardConfig::new(threshold)?;
        let d = guard(text(original, "original")?, text(segmented, "segmented")?, &config);
        *out_text = owned(d.returned_text)?;
        *out_kept = d.kept;
        if let Some(p) = out_wer.as_mut() {
            *p = d.measured_wer.value();
        }
        Ok(())
    })
}

/// Message of the last failed call on this thread, or NULL. Valid until the
/// next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn numex_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `s` is NULL or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn numex_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
