#ifndef FROBLAB_H
#define FROBLAB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/*
 Result codes shared by every fallible function.
 */
typedef enum FroblabStatus {
  FROBLAB_STATUS_OK = 0,
  FROBLAB_STATUS_INVALID_ARGUMENT = 1,
  FROBLAB_STATUS_NOT_COPRIME = 2,
  FROBLAB_STATUS_NOT_INVERTIBLE = 3,
  FROBLAB_STATUS_NOT_COVERABLE = 4,
  FROBLAB_STATUS_NULL_POINTER = 5,
  FROBLAB_STATUS_OUT_OF_RANGE = 6,
  FROBLAB_STATUS_DUPLICATE_MULTIPLE = 7,
  FROBLAB_STATUS_PANIC = 99,
} FroblabStatus;

/*
 Opaque continued-fraction bound report.
 */
typedef struct FroblabBoundReport FroblabBoundReport;

/*
 Opaque list of `(b, c)` pairs.
 */
typedef struct FroblabPairList FroblabPairList;

/*
 Opaque residue table.
 */
typedef struct FroblabResidueTable FroblabResidueTable;

/*
 One convergent row; every rational is `num / den` in lowest terms.
 */
typedef struct FroblabConvergentRow {
  uint64_t p;
  uint64_t q;
  uint64_t delta_num;
  uint64_t delta_den;
  uint64_t lower_proxy_num;
  uint64_t lower_proxy_den;
  uint64_t upper_proxy_num;
  uint64_t upper_proxy_den;
  uint64_t gap_bound_num;
  uint64_t gap_bound_den;
} FroblabConvergentRow;

typedef struct FroblabProp1Interval {
  uint64_t n;
  int64_t f;
  uint64_t paper_lower;
  int64_t corrected_lower;
  uint64_t upper;
  bool paper_lower_ok;
  bool corrected_lower_ok;
  bool upper_ok;
} FroblabProp1Interval;

typedef struct FroblabScanRecord {
  uint64_t a;
  uint64_t b;
  uint64_t c;
  int64_t f;
  uint64_t n;
  /*
   `(abc)^{5/8}`, display only.
   */
  double bez_bound;
  /*
   `f^8 > (abc)^5`, decided exactly.
   */
  bool bez_violated;
  bool prop1_paper_lower_ok;
  bool prop1_upper_ok;
  bool near_progression;
} FroblabScanRecord;

typedef struct FroblabDensityResult {
  uint64_t a;
  double delta_exp;
  uint64_t threshold;
  uint64_t pairs_tested;
  uint64_t pairs_exceeding;
  double fraction;
  double predicted_scale;
  bool exhaustive;
} FroblabDensityResult;

/*
 Optional pair: `found` is false when the windows hold no inverse pair.
 */
typedef struct FroblabWindowPair {
  bool found;
  uint64_t b;
  uint64_t c;
} FroblabWindowPair;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message for the most recent failure on this thread; empty if none. The
 pointer stays valid until the next froblab call on the same thread.
 */
const char *froblab_last_error_message(void);

/*
 Static, NUL-terminated crate version.
 */
const char *froblab_version(void);

uint64_t froblab_gcd(uint64_t x, uint64_t y);

/*
 Inverse of `x` modulo `m` in `[1, m-1]`.

 # Safety
 `out` must be a valid pointer to writable memory.
 */
enum FroblabStatus froblab_mod_inv(int64_t x, uint64_t m, uint64_t *out);

/*
 Frobenius number of `(a, b, c)`; `-1` when a generator is 1.

 # Safety
 `out` must be a valid pointer to writable memory.
 */
enum FroblabStatus froblab_frobenius_number(uint64_t a, uint64_t b, uint64_t c, int64_t *out);

/*
 # Safety
 `out` must be a valid pointer to writable memory.
 */
enum FroblabStatus froblab_frobenius_two(uint64_t a, uint64_t b, int64_t *out);

/*
 # Safety
 `gens` must point to `len` values; `out` must be writable.
 */
enum FroblabStatus froblab_is_representable(uint64_t n,
                                            const uint64_t *gens,
                                            size_t len,
                                            bool *out);

/*
 Covering function `N_a(b, c)`.

 # Safety
 `out` must be a valid pointer to writable memory.
 */
enum FroblabStatus froblab_n_exact(uint64_t a, uint64_t b, uint64_t c, uint64_t *out);

/*
 `t = c·b⁻¹ mod a`.

 # Safety
 `out` must be a valid pointer to writable memory.
 */
enum FroblabStatus froblab_reduce_to_unit(uint64_t a, uint64_t b, uint64_t c, uint64_t *out);

/*
 `N_a(1, t)`.

 # Safety
 `out` must be a valid pointer to writable memory.
 */
enum FroblabStatus froblab_n_unit(uint64_t a, uint64_t t, uint64_t *out);

/*
 Largest cyclic gap between the first `q` multiples of `t` modulo `a`.

 # Safety
 `out` must be a valid pointer to writable memory.
 */
enum FroblabStatus froblab_max_gap(uint64_t a, uint64_t t, uint64_t q, uint64_t *out);

/*
 # Safety
 `gens` must point to `len` values; `out` must be writable. The handle
 written to `out` must be released with [`froblab_residue_table_free`].
 */
enum FroblabStatus froblab_residue_table_new(uint64_t modulus,
                                             const uint64_t *gens,
                                             size_t len,
                                             struct FroblabResidueTable **out);

/*
 # Safety
 `table` must come from [`froblab_residue_table_new`] and not be used afterwards.
 */
void froblab_residue_table_free(struct FroblabResidueTable *table);

/*
 # Safety
 `table` must be a live handle or null.
 */
uint64_t froblab_residue_table_modulus(const struct FroblabResidueTable *table);

/*
 Least representable value congruent to `residue` modulo the table's modulus.

 # Safety
 `table` must be a live handle; `out` must be writable.
 */
enum FroblabStatus froblab_residue_table_entry(const struct FroblabResidueTable *table,
                                               uint64_t residue,
                                               uint64_t *out);

/*
 # Safety
 `table` must be a live handle; `out` must be writable.
 */
enum FroblabStatus froblab_residue_table_frobenius(const struct FroblabResidueTable *table,
                                                   int64_t *out);

/*
 # Safety
 `out` must be writable. Release the handle with [`froblab_bound_report_free`].
 */
enum FroblabStatus froblab_bound_report_new(uint64_t a,
                                            uint64_t b,
                                            uint64_t c,
                                            struct FroblabBoundReport **out);

/*
 # Safety
 `report` must come from [`froblab_bound_report_new`] and not be used afterwards.
 */
void froblab_bound_report_free(struct FroblabBoundReport *report);

/*
 # Safety
 `report` must be a live handle or null.
 */
uint64_t froblab_bound_report_n(const struct FroblabBoundReport *report);

/*
 # Safety
 `report` must be a live handle or null.
 */
uint64_t froblab_bound_report_t(const struct FroblabBoundReport *report);

/*
 # Safety
 `report` must be a live handle or null.
 */
size_t froblab_bound_report_row_count(const struct FroblabBoundReport *report);

/*
 # Safety
 `report` must be a live handle; `out` must be writable.
 */
enum FroblabStatus froblab_bound_report_row(const struct FroblabBoundReport *report,
                                            size_t index,
                                            struct FroblabConvergentRow *out);

/*
 # Safety
 `out` must be a valid pointer to writable memory.
 */
enum FroblabStatus froblab_prop1_interval(uint64_t a,
                                          uint64_t b,
                                          uint64_t c,
                                          struct FroblabProp1Interval *out);

/*
 # Safety
 `out` must be a valid pointer to writable memory.
 */
enum FroblabStatus froblab_bez_test(uint64_t a,
                                    uint64_t b,
                                    uint64_t c,
                                    struct FroblabScanRecord *out);

/*
 Pass `UINT64_MAX` as `sample_size` for an exhaustive scan.

 # Safety
 `out` must be a valid pointer to writable memory.
 */
enum FroblabStatus froblab_density_scan(uint64_t a,
                                        double delta_exp,
                                        uint64_t sample_size,
                                        uint64_t seed,
                                        struct FroblabDensityResult *out);

/*
 # Safety
 `out` must be a valid pointer to writable memory.
 */
enum FroblabStatus froblab_window_search(uint64_t a,
                                         double alpha,
                                         double beta,
                                         double eps,
                                         struct FroblabWindowPair *out);

/*
 Inverse pairs `a < b < c < 2a` with `b·c ≡ 1 (mod a)`.

 # Safety
 `out` must be writable. Release the handle with [`froblab_pair_list_free`].
 */
enum FroblabStatus froblab_inverse_pairs(uint64_t a, struct FroblabPairList **out);

/*
 # Safety
 `list` must be a live handle or null.
 */
size_t froblab_pair_list_len(const struct FroblabPairList *list);

/*
 # Safety
 `list` must be a live handle; `b` and `c` must be writable.
 */
enum FroblabStatus froblab_pair_list_get(const struct FroblabPairList *list,
                                         size_t index,
                                         uint64_t *b,
                                         uint64_t *c);

/*
 # Safety
 `list` must come from [`froblab_inverse_pairs`] and not be used afterwards.
 */
void froblab_pair_list_free(struct FroblabPairList *list);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FROBLAB_H */
