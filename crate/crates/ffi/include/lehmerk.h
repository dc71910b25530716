#ifndef LEHMERK_H
#define LEHMERK_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum {
  /**
   * `d` is not a rational prime, or the field is `Q`.
   */
  LK_SPLITTING_NONE = 0,
  LK_SPLITTING_INERT = 1,
  LK_SPLITTING_SPLIT = 2,
  LK_SPLITTING_RAMIFIED = 3,
} LkSplitting;

typedef enum {
  LK_STATUS_OK = 0,
  LK_STATUS_NULL_POINTER = 1,
  LK_STATUS_INVALID_ARGUMENT = 2,
  LK_STATUS_NOT_SQUAREFREE = 3,
  LK_STATUS_UNSUPPORTED_FIELD = 4,
  LK_STATUS_NOT_PRIME = 5,
  LK_STATUS_DEGREE_ONE = 6,
  LK_STATUS_NOT_COPRIME = 7,
  LK_STATUS_BUDGET_EXCEEDED = 8,
  LK_STATUS_OVERFLOW = 9,
  LK_STATUS_UNKNOWN_SUITE = 10,
  LK_STATUS_INTERNAL = 11,
  LK_STATUS_PANIC = 12,
} LkStatus;

/**
 * Opaque field handle. Safe to share across threads.
 */
typedef struct LkField LkField;

/**
 * Opaque verification report.
 */
typedef struct LkReport LkReport;

/**
 * Opaque ratio-scan result.
 */
typedef struct LkScan LkScan;

/**
 * One classification row; mirrors the CSV columns.
 */
typedef struct {
  uint64_t d;
  uint64_t phi;
  uint64_t phi_k;
  LkSplitting splitting;
  bool squarefree;
  bool irreducible;
  bool divides;
  bool realizable;
  bool normal;
  bool lehmer;
  bool strongly_lehmer;
} LkRecord;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static description of a status code. Never null, never freed.
 */
const char *lk_status_message(LkStatus status);

/**
 * Library version as a static NUL-terminated string.
 */
const char *lk_version(void);

/**
 * Create a field handle for `Q(sqrt m)`; `m = 1` gives `Q`.
 *
 * # Safety
 * `out` must be valid for a pointer write.
 */
LkStatus lk_field_new(int64_t m, LkField **out);

/**
 * # Safety
 * `field` must come from [`lk_field_new`] and not be freed already. Null is a no-op.
 */
void lk_field_free(LkField *field);

/**
 * Radicand `m`, or 0 for a null handle.
 *
 * # Safety
 * `field` must be null or a live handle.
 */
int64_t lk_field_m(const LkField *field);

/**
 * Degree over `Q` (1 or 2), or 0 for a null handle.
 *
 * # Safety
 * `field` must be null or a live handle.
 */
uint32_t lk_field_degree(const LkField *field);

/**
 * Discriminant, or 0 for a null handle.
 *
 * # Safety
 * `field` must be null or a live handle.
 */
int64_t lk_field_disc(const LkField *field);

/**
 * `phi_K(d)` by the closed form.
 *
 * # Safety
 * `field` must be a live handle and `out` valid for writes.
 */
LkStatus lk_phi(const LkField *field, uint64_t d, uint64_t *out);

/**
 * `phi_K(d)` by exhaustive enumeration, refusing `d > cap`.
 *
 * # Safety
 * `field` must be a live handle and `out` valid for writes.
 */
LkStatus lk_phi_oracle(const LkField *field, uint64_t d, uint64_t cap, uint64_t *out);

/**
 * # Safety
 * `field` must be a live handle and `out` valid for writes.
 */
LkStatus lk_splitting_type(const LkField *field, uint64_t p, LkSplitting *out);

/**
 * Classification row for `d >= 2`.
 *
 * # Safety
 * `field` must be a live handle and `out` valid for writes.
 */
LkStatus lk_classify(const LkField *field, uint64_t d, LkRecord *out);

/**
 * Run the named suite up to `bound` with the default oracle settings.
 *
 * # Safety
 * `field` must be a live handle, `suite` a NUL-terminated string and `out`
 * valid for a pointer write. Free the report with [`lk_report_free`].
 */
LkStatus lk_verify(const LkField *field,
                   const char *suite,
                   uint64_t bound,
                   uint32_t threads,
                   LkReport **out);

/**
 * # Safety
 * `report` must be null or a live report handle.
 */
bool lk_report_passed(const LkReport *report);

/**
 * # Safety
 * `report` must be null or a live report handle.
 */
uint64_t lk_report_checked(const LkReport *report);

/**
 * # Safety
 * `report` must be null or a live report handle.
 */
uint64_t lk_report_failure_count(const LkReport *report);

/**
 * Human-readable summary, owned by the report and valid until it is freed.
 *
 * # Safety
 * `report` must be null or a live report handle.
 */
const char *lk_report_text(const LkReport *report);

/**
 * # Safety
 * `report` must come from [`lk_verify`] and not be freed already. Null is a no-op.
 */
void lk_report_free(LkReport *report);

/**
 * Squarefree multiples `d <= bound` of `w` with `(d - 1) / phi(d) = l_num / l_den`.
 *
 * # Safety
 * `out` must be valid for a pointer write. Free the result with [`lk_scan_free`].
 */
LkStatus lk_ratio_scan(uint64_t w, int64_t l_num, uint64_t l_den, uint64_t bound, LkScan **out);

/**
 * # Safety
 * `scan` must be null or a live scan handle.
 */
size_t lk_scan_len(const LkScan *scan);

/**
 * Match at `index`, or 0 when out of range.
 *
 * # Safety
 * `scan` must be null or a live scan handle.
 */
uint64_t lk_scan_get(const LkScan *scan, size_t index);

/**
 * # Safety
 * `scan` must be null or a live scan handle.
 */
bool lk_scan_hypothesis_holds(const LkScan *scan);

/**
 * # Safety
 * `scan` must come from [`lk_ratio_scan`] and not be freed already. Null is a no-op.
 */
void lk_scan_free(LkScan *scan);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LEHMERK_H */
