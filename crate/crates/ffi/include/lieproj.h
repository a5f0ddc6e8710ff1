#ifndef LIEPROJ_H
#define LIEPROJ_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

// Result codes. `Ok` is zero.
typedef enum LpStatus {
  LP_STATUS_OK = 0,
  LP_STATUS_NULL_POINTER = 1,
  LP_STATUS_INVALID_UTF8 = 2,
  LP_STATUS_PARSE_ERROR = 3,
  LP_STATUS_CONFIG_ERROR = 4,
  LP_STATUS_INVALID_INPUT = 5,
  LP_STATUS_NOT_K_DOMINANT = 6,
  LP_STATUS_NOT_CENTRAL = 7,
  LP_STATUS_INDEX_OUT_OF_RANGE = 8,
  LP_STATUS_OVERFLOW = 9,
  LP_STATUS_INTERNAL = 10,
  LP_STATUS_PANIC = 11,
} LpStatus;

// A validated real form.
typedef struct LpRealForm LpRealForm;

// An owned, sorted list of weights.
typedef struct LpWeightList LpWeightList;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version as a static NUL-terminated string. Do not free.
const char *lp_version(void);

// Message for the last failed call on this thread, or null. Free with [`lp_string_free`].
char *lp_last_error_message(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void lp_string_free(char *s);

// Loads a bundled real form: `sl2`, `sp4`, `u11` or `su21`.
//
// # Safety
// `name` must be a NUL-terminated string and `out` writable.
enum LpStatus lp_realform_bundled(const char *name, struct LpRealForm **out);

// Builds a real form from a JSON configuration document.
//
// # Safety
// `json` must be a NUL-terminated string and `out` writable.
enum LpStatus lp_realform_from_json(const char *json, struct LpRealForm **out);

// Releases a real form. Null is ignored.
//
// # Safety
// `rf` must come from this library and not have been freed.
void lp_realform_free(struct LpRealForm *rf);

// Dimension of the weight space.
//
// # Safety
// `rf` must be a live handle and `out` writable.
enum LpStatus lp_realform_rank(const struct LpRealForm *rf, size_t *out);

// `lambda_a(mu)` written as a string into `*out` (free with [`lp_string_free`]).
//
// # Safety
// `rf` must be a live handle, `mu` NUL-terminated and `out` writable.
enum LpStatus lp_lambda_a(const struct LpRealForm *rf, const char *mu, char **out);

// `lambda_u(mu)` written as a string into `*out` (free with [`lp_string_free`]).
//
// # Safety
// `rf` must be a live handle, `mu` NUL-terminated and `out` writable.
enum LpStatus lp_lambda_u(const struct LpRealForm *rf, const char *mu, char **out);

// Whether the K-type `mu` is unitarily small.
//
// # Safety
// `rf` must be a live handle, `mu` NUL-terminated and `out` writable.
enum LpStatus lp_is_unitarily_small(const struct LpRealForm *rf, const char *mu, bool *out);

// All unitarily small K-types with central part `mu_z`.
//
// # Safety
// `rf` must be a live handle, `mu_z` NUL-terminated and `out` writable.
enum LpStatus lp_enumerate_unitarily_small(const struct LpRealForm *rf,
                                           const char *mu_z,
                                           struct LpWeightList **out);

// Number of weights in the list; zero for null.
//
// # Safety
// `list` must be null or a live handle.
size_t lp_weight_list_len(const struct LpWeightList *list);

// Weight `i` as a string (free with [`lp_string_free`]).
//
// # Safety
// `list` must be a live handle and `out` writable.
enum LpStatus lp_weight_list_get(const struct LpWeightList *list, size_t i, char **out);

// Coordinate `j` of weight `i` as a reduced fraction `num / den`.
//
// # Safety
// `list` must be a live handle and `num`, `den` writable.
enum LpStatus lp_weight_list_coord(const struct LpWeightList *list,
                                   size_t i,
                                   size_t j,
                                   int64_t *num,
                                   int64_t *den);

// Releases a weight list. Null is ignored.
//
// # Safety
// `list` must come from this library and not have been freed.
void lp_weight_list_free(struct LpWeightList *list);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LIEPROJ_H */
