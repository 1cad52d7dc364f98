#ifndef EXTSET_H
#define EXTSET_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes. Values 2 to 5 line up with the CLI exit codes.
 */
typedef enum ExtsetStatus {
  EXTSET_STATUS_OK = 0,
  /**
   * A witness failed re-validation, or an internal invariant broke.
   */
  EXTSET_STATUS_INTERNAL = 1,
  EXTSET_STATUS_INVALID_ARGUMENT = 2,
  EXTSET_STATUS_PARSE = 3,
  EXTSET_STATUS_BUDGET_EXCEEDED = 4,
  EXTSET_STATUS_CLAIM_FAILED = 5,
  EXTSET_STATUS_NULL_POINTER = 6,
  EXTSET_STATUS_PANIC = 7,
} ExtsetStatus;

/**
 * Opaque family of k-subsets of `[n]`.
 */
typedef struct ExtsetFamily ExtsetFamily;

/**
 * Claim parameters; a value `<= 0` means "not given".
 */
typedef struct ExtsetParams {
  int64_t n;
  int64_t k;
  int64_t s;
  int64_t t;
  int64_t u;
} ExtsetParams;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread. Valid until the next
 * failing call on the same thread; never NULL.
 */
const char *extset_last_error(void);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void extset_string_free(char *s);

/**
 * Empty family over `[n]` of `k`-sets.
 *
 * # Safety
 * `out_family` must be valid.
 */
enum ExtsetStatus extset_family_new(uint32_t n, uint32_t k, struct ExtsetFamily **out_family);

/**
 * Releases a family. NULL is ignored.
 *
 * # Safety
 * `f` must come from this library and not have been freed.
 */
void extset_family_free(struct ExtsetFamily *f);

/**
 * Adds the set `{elements[0], ..., elements[len-1]}`. `inserted` (may be
 * NULL) reports whether it was new.
 *
 * # Safety
 * `elements` must point to `len` readable values; `f` must be live.
 */
enum ExtsetStatus extset_family_insert(struct ExtsetFamily *f,
                                       const uint32_t *elements,
                                       size_t len,
                                       bool *inserted);

/**
 * Number of members.
 *
 * # Safety
 * Pointers must be valid.
 */
enum ExtsetStatus extset_family_len(const struct ExtsetFamily *f, size_t *out_len);

/**
 * Parses the text format (`n k` header, one set per line).
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out_family` valid.
 */
enum ExtsetStatus extset_family_parse(const char *text, struct ExtsetFamily **out_family);

/**
 * `{"n":..,"k":..,"sets":[[..],..]}`; free with `extset_string_free`.
 *
 * # Safety
 * Pointers must be valid.
 */
enum ExtsetStatus extset_family_to_json(const struct ExtsetFamily *f, char **out_json);

/**
 * All k-sets containing `center`.
 *
 * # Safety
 * `out_family` must be valid.
 */
enum ExtsetStatus extset_star(uint32_t n,
                              uint32_t k,
                              uint32_t center,
                              struct ExtsetFamily **out_family);

/**
 * The Hilton-Milner type family `H_u`.
 *
 * # Safety
 * `out_family` must be valid.
 */
enum ExtsetStatus extset_hilton_milner(uint32_t n,
                                       uint32_t k,
                                       uint32_t u,
                                       struct ExtsetFamily **out_family);

/**
 * k-sets meeting `[s]`.
 *
 * # Safety
 * `out_family` must be valid.
 */
enum ExtsetStatus extset_a0(uint32_t n, uint32_t k, uint32_t s, struct ExtsetFamily **out_family);

/**
 * # Safety
 * Pointers must be valid.
 */
enum ExtsetStatus extset_is_intersecting(const struct ExtsetFamily *f, bool *out_flag);

/**
 * Largest and smallest element degree.
 *
 * # Safety
 * Pointers must be valid.
 */
enum ExtsetStatus extset_degrees(const struct ExtsetFamily *f,
                                 uint64_t *out_max,
                                 uint64_t *out_min);

/**
 * Minimum over t-subsets T of `[n]` of the number of members containing T.
 *
 * # Safety
 * Pointers must be valid.
 */
enum ExtsetStatus extset_min_t_degree(const struct ExtsetFamily *f,
                                      uint32_t t,
                                      uint64_t *out_value);

/**
 * Members avoiding a maximum-degree element.
 *
 * # Safety
 * Pointers must be valid.
 */
enum ExtsetStatus extset_diversity(const struct ExtsetFamily *f, uint64_t *out_value);

/**
 * Matching number `nu` and covering number `tau`. `tau` needs a nonempty
 * family.
 *
 * # Safety
 * Pointers must be valid.
 */
enum ExtsetStatus extset_matching_covering(const struct ExtsetFamily *f,
                                           uint64_t *out_nu,
                                           uint64_t *out_tau);

/**
 * Isomorphism-invariant form as lowercase hex (n <= 16).
 *
 * # Safety
 * Pointers must be valid.
 */
enum ExtsetStatus extset_canonical_form(const struct ExtsetFamily *f, char **out_hex);

/**
 * `C(n, k)` as a decimal string (0 outside `0 <= k <= n`).
 *
 * # Safety
 * `out_decimal` must be valid.
 */
enum ExtsetStatus extset_binom(int64_t n, int64_t k, char **out_decimal);

/**
 * Evaluates a named claim (full name or short alias such as `EQ25`).
 * Missing parameters give `EXTSET_STATUS_INVALID_ARGUMENT`.
 *
 * # Safety
 * `claim` must be a NUL-terminated string; `params` and `out_holds` valid.
 */
enum ExtsetStatus extset_check_claim(const char *claim,
                                     const struct ExtsetParams *params,
                                     bool *out_holds);

/**
 * Solves a search problem given as JSON and returns the result as JSON.
 * A search that runs out of nodes still returns `EXTSET_STATUS_OK` with
 * `"status": "timeout"`.
 *
 * # Safety
 * `problem_json` must be a NUL-terminated string; `out_json` valid.
 */
enum ExtsetStatus extset_search_json(const char *problem_json, uint32_t threads, char **out_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EXTSET_H */
