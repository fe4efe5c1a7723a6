#ifndef STABLEREP_H
#define STABLEREP_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Status code returned by every `sr_*` function.
 */
typedef enum SrStatus {
  SR_STATUS_OK = 0,
  SR_STATUS_INVALID_ARGUMENT = 1,
  SR_STATUS_BUDGET_EXCEEDED = 2,
  SR_STATUS_VERIFICATION_FAILED = 3,
  SR_STATUS_NULL_POINTER = 4,
  SR_STATUS_INTERNAL = 5,
} SrStatus;

/**
 * Opaque integer partition.
 */
typedef struct SrPartition SrPartition;

/**
 * Opaque stable cohomology result.
 */
typedef struct SrStableResult SrStableResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failure on this thread, or NULL. Free with
 * `sr_string_free`.
 */
char *sr_last_error(void);

/**
 * Frees a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void sr_string_free(char *s);

/**
 * Parses "5,3,1" (or "0" for the empty partition).
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum SrStatus sr_partition_parse(const char *text, struct SrPartition **out);

/**
 * # Safety
 * `p` must come from this library and not have been freed. NULL is ignored.
 */
void sr_partition_free(struct SrPartition *p);

/**
 * Sum of the parts.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum SrStatus sr_partition_weight(const struct SrPartition *p, size_t *out);

/**
 * Number of nonzero parts.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum SrStatus sr_partition_len(const struct SrPartition *p, size_t *out);

/**
 * Part `i` (0-based); 0 past the end.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum SrStatus sr_partition_part(const struct SrPartition *p, size_t i, size_t *out);

/**
 * Conjugate partition, as a new handle.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum SrStatus sr_partition_transpose(const struct SrPartition *p, struct SrPartition **out);

/**
 * Canonical text form. Free with `sr_string_free`.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum SrStatus sr_partition_to_string(const struct SrPartition *p, char **out);

/**
 * `dim S^λ`.
 *
 * # Safety
 * `lambda` must be a live handle; `out` must be writable.
 */
enum SrStatus sr_specht_dimension(const struct SrPartition *lambda, uint64_t *out);

/**
 * `dim S_λ(Q^d)`.
 *
 * # Safety
 * `lambda` must be a live handle; `out` must be writable.
 */
enum SrStatus sr_schur_gl_dimension(const struct SrPartition *lambda, size_t d, uint64_t *out);

/**
 * `c^λ_{μν}`.
 *
 * # Safety
 * All handles must be live; `out` must be writable.
 */
enum SrStatus sr_lr_coefficient(const struct SrPartition *lambda,
                                const struct SrPartition *mu,
                                const struct SrPartition *nu,
                                uint64_t *out);

/**
 * `χ^λ` on the class of cycle type `rho`.
 *
 * # Safety
 * Both handles must be live; `out` must be writable.
 */
enum SrStatus sr_character_value(const struct SrPartition *lambda,
                                 const struct SrPartition *rho,
                                 int64_t *out);

/**
 * `|𝒫_{p,q}|`, or `|𝒫_p(Ω)|` when `general` is true.
 *
 * # Safety
 * `out` must be writable.
 */
enum SrStatus sr_labeled_partition_count(size_t p,
                                         size_t q,
                                         bool general,
                                         size_t budget_limit,
                                         uint64_t *out);

/**
 * `H^degree(Aut(F_n); H^⊗p ⊗ (H^*)^⊗q)` in the stable range.
 *
 * # Safety
 * `out` must be writable.
 */
enum SrStatus sr_stable_cohomology(size_t p,
                                   size_t q,
                                   int64_t degree,
                                   size_t budget_limit,
                                   struct SrStableResult **out);

/**
 * # Safety
 * `r` must come from this library and not have been freed. NULL is ignored.
 */
void sr_stable_result_free(struct SrStableResult *r);

/**
 * # Safety
 * `r` must be a live handle; `out` must be writable.
 */
enum SrStatus sr_stable_result_dimension(const struct SrStableResult *r, uint64_t *out);

/**
 * Smallest `n` for which the result is in the stable range.
 *
 * # Safety
 * `r` must be a live handle; `out` must be writable.
 */
enum SrStatus sr_stable_result_valid_n_bound(const struct SrStableResult *r, size_t *out);

/**
 * JSON form of the result. Free with `sr_string_free`.
 *
 * # Safety
 * `r` must be a live handle; `out` must be writable.
 */
enum SrStatus sr_stable_result_to_json(const struct SrStableResult *r, char **out);

/**
 * Checks that φ is an isomorphism for `dim V = d`. On a failed check the
 * status is `SR_STATUS_OK` and `*pass` is false.
 *
 * # Safety
 * `pass` must be writable.
 */
enum SrStatus sr_verify_rw_prop(size_t p, size_t q, size_t d, size_t budget_limit, bool *pass);

/**
 * Classwise check of the splitting of the Hom space. Same conventions as
 * `sr_verify_rw_prop`.
 *
 * # Safety
 * `pass` must be writable.
 */
enum SrStatus sr_verify_splitting(size_t p, size_t q, size_t d, size_t budget_limit, bool *pass);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* STABLEREP_H */
