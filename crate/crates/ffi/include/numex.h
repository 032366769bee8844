#ifndef NUMEX_H
#define NUMEX_H

#pragma once

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum NumexStatus {
  NUMEX_STATUS_OK = 0,
  NUMEX_STATUS_NULL_ARGUMENT = 1,
  NUMEX_STATUS_INVALID_UTF8 = 2,
  NUMEX_STATUS_INVALID_ARGUMENT = 3,
  NUMEX_STATUS_CONTRACT_VIOLATION = 4,
  NUMEX_STATUS_CONFIG_ERROR = 5,
  NUMEX_STATUS_IO_ERROR = 6,
  NUMEX_STATUS_PANIC = 7,
} NumexStatus;

/**
 * Opaque engine bound to one locale.
 */
typedef struct NumexEngine NumexEngine;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Creates an engine for the preset `locale` ("en" or "de").
 *
 * # Safety
 * `locale` is a NUL-terminated string; `out` is writable.
 */
enum NumexStatus numex_engine_new(const char *locale, struct NumexEngine **out);

/**
 * Creates an engine from a locale configuration file.
 *
 * # Safety
 * `path` is a NUL-terminated string; `out` is writable.
 */
enum NumexStatus numex_engine_from_config(const char *path, struct NumexEngine **out);

/**
 * # Safety
 * `engine` is NULL or a handle not yet freed.
 */
void numex_engine_free(struct NumexEngine *engine);

/**
 * Number words → formatted literals. `*out` receives an owned string.
 *
 * # Safety
 * `engine` is live, `sentence` NUL-terminated, `out` writable.
 */
enum NumexStatus numex_normalize(const struct NumexEngine *engine,
                                 const char *sentence,
                                 char **out);

/**
 * Formatted literals → number words. `*out` receives an owned string.
 *
 * # Safety
 * `engine` is live, `sentence` NUL-terminated, `out` writable.
 */
enum NumexStatus numex_verbalize(const struct NumexEngine *engine,
                                 const char *sentence,
                                 char **out);

/**
 * Literals as a JSON array of `{"start","end","text","type"}`, offsets in
 * characters. A NULL engine uses the preset currency symbols of both
 * locales.
 *
 * # Safety
 * `engine` is NULL or live, `text_in` NUL-terminated, `out` writable.
 */
enum NumexStatus numex_extract_json(const struct NumexEngine *engine,
                                    const char *text_in,
                                    char **out);

/**
 * Word error rate of `hypothesis` against `reference`.
 *
 * # Safety
 * Both strings NUL-terminated; out pointers writable or NULL when unwanted.
 */
enum NumexStatus numex_wer(const char *reference,
                           const char *hypothesis,
                           size_t *out_edits,
                           size_t *out_reference_len,
                           double *out_value);

/**
 * Keeps `segmented` iff its WER against `original` is at most `threshold`.
 * `*out_text` receives an owned copy of the returned text.
 *
 * # Safety
 * Strings NUL-terminated; `out_kept` and `out_text` writable; `out_wer`
 * writable or NULL.
 */
enum NumexStatus numex_guard(const char *original,
                             const char *segmented,
                             double threshold,
                             bool *out_kept,
                             double *out_wer,
                             char **out_text);

/**
 * Message of the last failed call on this thread, or NULL. Valid until the
 * next call into this library on the same thread.
 */
const char *numex_last_error_message(void);

/**
 * # Safety
 * `s` is NULL or a string returned by this library and not yet freed.
 */
void numex_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NUMEX_H */
