#ifndef FINRED_H
#define FINRED_H

/* Generated by cbindgen. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum FinredStatus {
  FINRED_STATUS_OK = 0,
  FINRED_STATUS_NULL_POINTER = 1,
  FINRED_STATUS_PARSE = 2,
  FINRED_STATUS_UTF8 = 3,
  FINRED_STATUS_INVALID_ARGUMENT = 4,
  FINRED_STATUS_BUFFER_TOO_SMALL = 5,
} FinredStatus;

/**
 * Base predicates for [`finred_decide`]. `n` parametrizes `AtMost` and `FIter`.
 */
typedef enum FinredPredicate {
  FINRED_PREDICATE_F_RED = 0,
  FINRED_PREDICATE_G_BLUE = 1,
  FINRED_PREDICATE_FG_BLUE = 2,
  FINRED_PREDICATE_GF_RED = 3,
  FINRED_PREDICATE_MU_W = 4,
  FINRED_PREDICATE_NU_U = 5,
  FINRED_PREDICATE_AT_MOST = 6,
  FINRED_PREDICATE_F_ITER = 7,
} FinredPredicate;

/**
 * Optional until-wrapper applied to the base predicate.
 */
typedef enum FinredWrap {
  FINRED_WRAP_NONE = 0,
  FINRED_WRAP_ON = 1,
  FINRED_WRAP_POP = 2,
} FinredWrap;

typedef enum FinredTransform {
  FINRED_TRANSFORM_FIRST_RED_TRUNCATE = 0,
  FINRED_TRANSFORM_COMPLEMENT_UNTIL_RED = 1,
  FINRED_TRANSFORM_PAD_DOUBLE = 2,
  FINRED_TRANSFORM_SEARCH_TAG = 3,
} FinredTransform;

typedef enum FinredColor {
  FINRED_COLOR_RED = 0,
  FINRED_COLOR_BLUE = 1,
} FinredColor;

/**
 * Opaque stream handle. Always holds a canonical stream.
 */
typedef struct FinredStream FinredStream;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a stream literal such as `BRB(B)` into a new handle.
 *
 * # Safety
 * `literal` must be a NUL-terminated string; `out` must be writable.
 */
enum FinredStatus finred_stream_parse(const char *literal, struct FinredStream **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `stream` must come from this library and not be used afterwards.
 */
void finred_stream_free(struct FinredStream *stream);

/**
 * Writes the canonical literal of the stream.
 *
 * # Safety
 * `stream` must be a live handle, `buf` valid for `cap` bytes, `written` writable.
 */
enum FinredStatus finred_stream_format(const struct FinredStream *stream,
                                       char *buf,
                                       size_t cap,
                                       size_t *written);

/**
 * # Safety
 * `stream` must be a live handle; `out` must be writable.
 */
enum FinredStatus finred_stream_at(const struct FinredStream *stream, size_t n, uint32_t *out);

/**
 * Decides `wrap(predicate)` at position 0. `predicate` is a
 * `FinredPredicate`, `wrap` a `FinredWrap`.
 *
 * # Safety
 * `stream` must be a live handle; `out` must be writable.
 */
enum FinredStatus finred_decide(const struct FinredStream *stream,
                                uint32_t predicate,
                                uint32_t wrap,
                                size_t n,
                                bool *out);

/**
 * Writes the compact JSON classification document.
 *
 * # Safety
 * As for [`finred_stream_format`].
 */
enum FinredStatus finred_classify_json(const struct FinredStream *stream,
                                       char *buf,
                                       size_t cap,
                                       size_t *written);

/**
 * Applies a `FinredTransform` and returns a new handle.
 *
 * # Safety
 * `stream` must be a live handle; `out` must be writable.
 */
enum FinredStatus finred_transform(const struct FinredStream *stream,
                                   uint32_t transform,
                                   struct FinredStream **out);

/**
 * The successor of `n`: `*has_successor` is false when `n` is terminal.
 *
 * # Safety
 * `stream` must be a live handle; both out pointers must be writable.
 */
enum FinredStatus finred_successor(const struct FinredStream *stream,
                                   size_t n,
                                   bool *has_successor,
                                   size_t *successor);

/**
 * Accessibility of `n` and its rank (meaningful only when accessible).
 *
 * # Safety
 * `stream` must be a live handle; both out pointers must be writable.
 */
enum FinredStatus finred_accessible(const struct FinredStream *stream,
                                    size_t n,
                                    bool *accessible,
                                    size_t *rank);

/**
 * # Safety
 * Both handles must be live; `out` must be writable.
 */
enum FinredStatus finred_bisimilar(const struct FinredStream *left,
                                   const struct FinredStream *right,
                                   bool *out);

/**
 * Message for the last failed call on this thread, or null after a
 * success. Valid until the next call into the library on this thread.
 */
const char *finred_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FINRED_H */
