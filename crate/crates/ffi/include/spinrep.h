/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef SPINREP_H
#define SPINREP_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SpinrepStatus {
  SPINREP_STATUS_OK = 0,
  SPINREP_STATUS_NULL_POINTER = 1,
  SPINREP_STATUS_INVALID_UTF8 = 2,
  SPINREP_STATUS_UNKNOWN_GROUP = 3,
  SPINREP_STATUS_UNKNOWN_CHECK = 4,
  SPINREP_STATUS_OUT_OF_RANGE = 5,
  SPINREP_STATUS_INTERNAL = 6,
} SpinrepStatus;

/**
 * The spin character table of R243, entries pre-rendered as text.
 */
typedef struct SpinrepCharTable SpinrepCharTable;

/**
 * A finite group from the catalog, enumerated.
 */
typedef struct SpinrepGroup SpinrepGroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds the group `name` ("G27", "G81", "GBAR", "GSHARP", "R243").
 *
 * # Safety
 * `name` must be a NUL-terminated string; `out` must be writable.
 */
enum SpinrepStatus spinrep_group_new(const char *name, struct SpinrepGroup **out);

/**
 * # Safety
 * `g` must come from `spinrep_group_new`; `order` must be writable.
 */
enum SpinrepStatus spinrep_group_order(const struct SpinrepGroup *g, size_t *order);

/**
 * # Safety
 * As for `spinrep_group_order`.
 */
enum SpinrepStatus spinrep_group_class_count(const struct SpinrepGroup *g, size_t *count);

/**
 * # Safety
 * `g` must come from `spinrep_group_new` or be NULL.
 */
void spinrep_group_free(struct SpinrepGroup *g);

/**
 * Computes the 35 x 35 spin character table.
 *
 * # Safety
 * `out` must be writable.
 */
enum SpinrepStatus spinrep_chartable_new(struct SpinrepCharTable **out);

/**
 * # Safety
 * `t` from `spinrep_chartable_new`; `rows` and `cols` writable.
 */
enum SpinrepStatus spinrep_chartable_shape(const struct SpinrepCharTable *t,
                                           size_t *rows,
                                           size_t *cols);

/**
 * Name, spin type and dimension of row `row`. The name is borrowed from
 * the table and lives until `spinrep_chartable_free`.
 *
 * # Safety
 * `t` from `spinrep_chartable_new`; the out pointers writable.
 */
enum SpinrepStatus spinrep_chartable_row(const struct SpinrepCharTable *t,
                                         size_t row,
                                         const char **name,
                                         uint8_t *eps,
                                         uint8_t *mu,
                                         size_t *dim);

/**
 * Representative (borrowed) and size of class `col`.
 *
 * # Safety
 * `t` from `spinrep_chartable_new`; the out pointers writable.
 */
enum SpinrepStatus spinrep_chartable_class(const struct SpinrepCharTable *t,
                                           size_t col,
                                           const char **rep,
                                           size_t *size);

/**
 * Character value at (`row`, `col`) as an owned string, e.g. "-1-1*w".
 * Release it with `spinrep_string_free`.
 *
 * # Safety
 * `t` from `spinrep_chartable_new`; `value` writable.
 */
enum SpinrepStatus spinrep_chartable_value(const struct SpinrepCharTable *t,
                                           size_t row,
                                           size_t col,
                                           char **value);

/**
 * # Safety
 * `t` from `spinrep_chartable_new` or NULL.
 */
void spinrep_chartable_free(struct SpinrepCharTable *t);

/**
 * Runs one named check, or all of them when `check` is NULL.
 *
 * # Safety
 * `check` NULL or NUL-terminated; `passed` and `failed` writable.
 */
enum SpinrepStatus spinrep_verify(const char *check, uint32_t *passed, uint32_t *failed);

/**
 * Static description of a status code; never free it.
 */
const char *spinrep_status_message(enum SpinrepStatus status);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void spinrep_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SPINREP_H */
