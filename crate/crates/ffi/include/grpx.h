#ifndef GRPX_H
#define GRPX_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Independence complex kinds.
 */
typedef enum GrpxComplexKind {
  GRPX_COMPLEX_KIND_INDEPENDENCE = 0,
  GRPX_COMPLEX_KIND_STRONG = 1,
} GrpxComplexKind;

/**
 * Outcome of an isomorphism search.
 */
typedef enum GrpxIsoResult {
  GRPX_ISO_RESULT_ISOMORPHIC = 0,
  GRPX_ISO_RESULT_NOT_ISOMORPHIC = 1,
} GrpxIsoResult;

/**
 * Result codes of fallible calls.
 */
typedef enum GrpxStatus {
  GRPX_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  GRPX_STATUS_NULL_ARGUMENT = 1,
  /**
   * Construction text could not be parsed or names an unknown group.
   */
  GRPX_STATUS_PARSE = 2,
  /**
   * A search or enumeration budget ran out; the answer is unknown.
   */
  GRPX_STATUS_BUDGET = 3,
  /**
   * Input was parsed but describes no valid group or object.
   */
  GRPX_STATUS_INVALID_INPUT = 4,
  /**
   * A verification run reported failures.
   */
  GRPX_STATUS_VERIFICATION_FAILED = 5,
  /**
   * Unexpected internal failure.
   */
  GRPX_STATUS_INTERNAL = 6,
} GrpxStatus;

typedef struct GrpxComplex GrpxComplex;

typedef struct GrpxGroup GrpxGroup;

typedef struct GrpxLattice GrpxLattice;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread; valid until the next
 * failing call on the same thread. Never null.
 */
const char *grpx_last_error(void);

/**
 * Builds a group from construction text such as `"C(9) x C(3)"` or a
 * corpus key.
 *
 * # Safety
 * `spec` must be a NUL-terminated string; `group_out` must be writable.
 */
enum GrpxStatus grpx_group_build(const char *spec, struct GrpxGroup **group_out);

/**
 * # Safety
 * `group` must come from `grpx_group_build` and not be used afterwards.
 */
void grpx_group_free(struct GrpxGroup *group);

/**
 * Order of the group; 0 for a null handle.
 *
 * # Safety
 * `group` must be a live handle or null.
 */
uint64_t grpx_group_order(const struct GrpxGroup *group);

/**
 * Order of element `x`; 0 when `x` is out of range or the handle is null.
 *
 * # Safety
 * `group` must be a live handle or null.
 */
uint32_t grpx_group_element_order(const struct GrpxGroup *group, uint32_t x);

/**
 * Product `a * b`; writes to `product_out`.
 *
 * # Safety
 * `group` must be a live handle; `product_out` must be writable.
 */
enum GrpxStatus grpx_group_mul(const struct GrpxGroup *group,
                               uint32_t a,
                               uint32_t b,
                               uint32_t *product_out);

/**
 * Enumerates all subgroups.
 *
 * # Safety
 * `group` must be a live handle; `lattice_out` must be writable.
 */
enum GrpxStatus grpx_lattice_new(const struct GrpxGroup *group, struct GrpxLattice **lattice_out);

/**
 * # Safety
 * `lattice` must come from `grpx_lattice_new` and not be used afterwards.
 */
void grpx_lattice_free(struct GrpxLattice *lattice);

/**
 * Number of subgroups; 0 for a null handle.
 *
 * # Safety
 * `lattice` must be a live handle or null.
 */
uint64_t grpx_lattice_len(const struct GrpxLattice *lattice);

/**
 * Order of subgroup `i` (subgroups are sorted by order; 0 is trivial, the
 * last is the whole group); 0 when out of range.
 *
 * # Safety
 * `lattice` must be a live handle or null.
 */
uint64_t grpx_lattice_subgroup_order(const struct GrpxLattice *lattice, uint32_t i);

/**
 * Minimal number of generators of subgroup `i`; `u32::MAX` when out of
 * range.
 *
 * # Safety
 * `lattice` must be a live handle or null.
 */
uint32_t grpx_lattice_d(const struct GrpxLattice *lattice, uint32_t i);

/**
 * Largest minimal generator count over all subgroups.
 *
 * # Safety
 * `lattice` must be a live handle or null.
 */
uint32_t grpx_lattice_rank(const struct GrpxLattice *lattice);

/**
 * Enumerates an independence complex. `face_budget` of 0 selects the
 * default budget.
 *
 * # Safety
 * `lattice` must be a live handle; `complex_out` must be writable.
 */
enum GrpxStatus grpx_complex_new(const struct GrpxLattice *lattice,
                                 enum GrpxComplexKind kind,
                                 uint64_t face_budget,
                                 struct GrpxComplex **complex_out);

/**
 * # Safety
 * `complex` must come from `grpx_complex_new` and not be used afterwards.
 */
void grpx_complex_free(struct GrpxComplex *complex);

/**
 * Copies up to `cap` entries of the f-vector (faces of size 1, 2, ...)
 * into `buf` and returns its full length.
 *
 * # Safety
 * `complex` must be a live handle or null; `buf` must hold `cap` values
 * (it may be null when `cap` is 0).
 */
uintptr_t grpx_complex_f_vector(const struct GrpxComplex *complex, uint64_t *buf, uintptr_t cap);

/**
 * Searches for a vertex bijection between two complexes. `map_out`, when
 * not null, receives the image of each vertex of `a` (it must hold as many
 * entries as `a` has vertices). `budget` of 0 selects the default.
 *
 * # Safety
 * Handles must be live; `result_out` must be writable; `map_out` as above.
 */
enum GrpxStatus grpx_complex_isomorphism(const struct GrpxComplex *a,
                                         const struct GrpxComplex *b,
                                         uint64_t budget,
                                         enum GrpxIsoResult *result_out,
                                         uint32_t *map_out);

/**
 * Runs corpus checks. `suites` is a comma-separated list or "all";
 * `group` restricts to one corpus key and may be null. Writes the number
 * of failing checks to `failures_out` and returns `VerificationFailed`
 * when it is nonzero.
 *
 * # Safety
 * `suites` must be a NUL-terminated string; `group` null or NUL-terminated;
 * `failures_out` writable.
 */
enum GrpxStatus grpx_verify(const char *suites, const char *group, uint64_t *failures_out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GRPX_H */
