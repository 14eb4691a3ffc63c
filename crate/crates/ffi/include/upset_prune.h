#ifndef UPSET_PRUNE_H
#define UPSET_PRUNE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every fallible function.
enum UpmStatus
#if defined(__cplusplus) || __STDC_VERSION__ >= 202311L
  : int32_t
#endif // defined(__cplusplus) || __STDC_VERSION__ >= 202311L
 {
  UPM_STATUS_OK = 0,
  // A required pointer argument was null.
  UPM_STATUS_NULL_POINTER = 1,
  // Malformed JSON, rational string or UTF-8.
  UPM_STATUS_PARSE = 2,
  // Well-formed input that violates a precondition.
  UPM_STATUS_VALIDATION = 3,
  // Input too large for an exhaustive search.
  UPM_STATUS_SIZE_CAP = 4,
  // A bug inside the library; the message has details.
  UPM_STATUS_INTERNAL = 5,
};
#ifndef __cplusplus
#if __STDC_VERSION__ >= 202311L
typedef enum UpmStatus UpmStatus;
#else
typedef int32_t UpmStatus;
#endif // __STDC_VERSION__ >= 202311L
#endif // __cplusplus

// Opaque module handle.
typedef struct UpmModule UpmModule;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Last error message on this thread, or null after a successful call. The
// pointer stays valid until the next library call on the same thread.
const char *upm_last_error(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void upm_string_free(char *s);

// Releases a module handle. Null is ignored.
//
// # Safety
// `m` must come from this library and not have been freed.
void upm_module_free(struct UpmModule *m);

// Parses a JSON module file.
//
// # Safety
// `json` must be a nul-terminated string; `out` must be writable.
UpmStatus upm_module_from_json(const char *json, struct UpmModule **out);

// Canonical JSON for a module. Free the result with [`upm_string_free`].
//
// # Safety
// `m` must be a live handle; `out` must be writable.
UpmStatus upm_module_to_json(const struct UpmModule *m, char **out);

// # Safety
// `m` must be a live handle; `out` must be writable.
UpmStatus upm_module_summand_count(const struct UpmModule *m, size_t *out);

// # Safety
// `m` must be a live handle; `out` must be writable.
UpmStatus upm_module_dim(const struct UpmModule *m, size_t *out);

// Seeded random module; identical arguments give identical modules.
//
// # Safety
// `out` must be writable.
UpmStatus upm_random_module(uint64_t seed,
                            size_t summands,
                            size_t dim,
                            size_t gens_per_summand,
                            uint32_t coord_bound,
                            struct UpmModule **out);

// The `alpha`-pruning of `m`; `alpha` is a rational string.
//
// # Safety
// `m` must be a live handle, `alpha` a nul-terminated string and `out`
// writable.
UpmStatus upm_prune(const struct UpmModule *m, const char *alpha, struct UpmModule **out);

// 1 when the two modules are isomorphic, 0 otherwise.
//
// # Safety
// `a` and `b` must be live handles; `out` must be writable.
UpmStatus upm_module_isomorphic(const struct UpmModule *a, const struct UpmModule *b, int32_t *out);

// Bottleneck distance.
//
// # Safety
// `a` and `b` must be live handles; `value` must be writable.
UpmStatus upm_bottleneck_distance(const struct UpmModule *a,
                                  const struct UpmModule *b,
                                  char **value);

// Pruning distance. `tol` may be null for the default `1/1000000000`.
// With `exact` nonzero the result is snapped to an exact critical value
// when possible. `is_exact` (nullable) reports whether `value` is exact; if
// not, `value` is the midpoint of a bracket of width at most `tol`.
//
// # Safety
// `a` and `b` must be live handles, `tol` null or a nul-terminated string
// and `value` writable.
UpmStatus upm_pruning_distance(const struct UpmModule *a,
                               const struct UpmModule *b,
                               const char *tol,
                               int32_t exact,
                               char **value,
                               int32_t *is_exact);

// Interleaving distance by exhaustive search over the field with
// `field_order` elements (2 or 3). Returns `UPM_STATUS_SIZE_CAP` when a
// module has more than `max_r` summands.
//
// # Safety
// `a` and `b` must be live handles; `value` must be writable.
UpmStatus upm_interleaving_distance(const struct UpmModule *a,
                                    const struct UpmModule *b,
                                    uint32_t field_order,
                                    size_t max_r,
                                    char **value);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* UPSET_PRUNE_H */
