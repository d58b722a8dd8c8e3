#ifndef ZONEDET_H
#define ZONEDET_H

/* This file is generated by cbindgen from zonedet-ffi; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Checkerboard classification of the off-diagonal part.
typedef enum ZdParity {
  ZD_PARITY_ODD = 0,
  ZD_PARITY_EVEN = 1,
  ZD_PARITY_NONE = 2,
} ZdParity;

// How the spectral radius estimate of a report was obtained.
typedef enum ZdRhoMethod {
  ZD_RHO_METHOD_POWER_ITERATION = 0,
  ZD_RHO_METHOD_GERSCHGORIN_BOUND = 1,
  ZD_RHO_METHOD_HERMITIAN_EXACT = 2,
  ZD_RHO_METHOD_USER_SUPPLIED = 3,
} ZdRhoMethod;

// Spectral radius estimation mode for [`zd_zone_expansion`].
typedef enum ZdRhoMode {
  ZD_RHO_MODE_AUTO = 0,
  ZD_RHO_MODE_POWER = 1,
  ZD_RHO_MODE_GERSCHGORIN = 2,
  ZD_RHO_MODE_HERMITIAN = 3,
  // Uses the `rho_value` argument.
  ZD_RHO_MODE_VALUE = 4,
} ZdRhoMode;

// Status codes returned by every fallible call.
typedef enum ZdStatus {
  ZD_STATUS_OK = 0,
  ZD_STATUS_NULL_POINTER = 1,
  ZD_STATUS_INVALID_ARGUMENT = 2,
  ZD_STATUS_PARSE_ERROR = 3,
  ZD_STATUS_SINGULAR_BLOCK = 4,
  ZD_STATUS_NOT_HERMITIAN = 5,
  ZD_STATUS_NOT_POSITIVE_DEFINITE = 6,
  ZD_STATUS_CHOLESKY_BREAKDOWN = 7,
  ZD_STATUS_DENSE_CAP_EXCEEDED = 8,
  ZD_STATUS_MEMORY_BUDGET_EXCEEDED = 9,
  ZD_STATUS_ZERO_DIAGONAL = 10,
  ZD_STATUS_RHO_NOT_LESS_THAN_ONE = 11,
  ZD_STATUS_IO_ERROR = 12,
  ZD_STATUS_PANIC = 13,
} ZdStatus;

// Opaque sparse matrix handle.
typedef struct ZdMatrix ZdMatrix;

// Opaque zone expansion report handle.
typedef struct ZdReport ZdReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// A short static description of a status code.
const char *zd_status_message(enum ZdStatus status);

// Build a matrix from 0-based coordinate triples; duplicates are summed.
//
// # Safety
// `rows`, `cols`, `re`, `im` must point to `nnz` readable elements and
// `out` must be a valid out-pointer.
enum ZdStatus zd_matrix_from_entries(size_t order,
                                     size_t nnz,
                                     const size_t *rows,
                                     const size_t *cols,
                                     const double *re,
                                     const double *im,
                                     struct ZdMatrix **out);

// Read a Matrix Market coordinate file.
//
// # Safety
// `path` must be a NUL-terminated string, `out` a valid out-pointer.
enum ZdStatus zd_matrix_read_file(const char *path, struct ZdMatrix **out);

// Write a matrix as `complex general` Matrix Market text.
//
// # Safety
// `matrix` must be a live handle; `path` a NUL-terminated string.
enum ZdStatus zd_matrix_write_file(const struct ZdMatrix *matrix, const char *path);

// Matrix order `n`.
//
// # Safety
// `matrix` must be a live handle.
size_t zd_matrix_order(const struct ZdMatrix *matrix);

// Number of stored non-zero entries.
//
// # Safety
// `matrix` must be a live handle.
size_t zd_matrix_nnz(const struct ZdMatrix *matrix);

// Whether `||M - M*||_1 <= tol * ||M||_1`.
//
// # Safety
// `matrix` must be a live handle.
bool zd_matrix_is_hermitian(const struct ZdMatrix *matrix, double tol);

// Release a matrix handle (accepts NULL).
//
// # Safety
// `matrix` must have come from this library and not been freed before.
void zd_matrix_free(struct ZdMatrix *matrix);

// 2-D Poisson matrix of order `m*m` (`m >= 2`).
//
// # Safety
// `out` must be a valid out-pointer.
enum ZdStatus zd_generate_laplacian_2d(size_t m, struct ZdMatrix **out);

// Symmetric tridiagonal Toeplitz matrix (`n >= 1`).
//
// # Safety
// `out` must be a valid out-pointer.
enum ZdStatus zd_generate_toeplitz(size_t n, double a, double b, struct ZdMatrix **out);

// Block diagonal of T_3 blocks (`n` a positive multiple of 3).
//
// # Safety
// `out` must be a valid out-pointer.
enum ZdStatus zd_generate_block_t3(size_t n, struct ZdMatrix **out);

// Seeded bipartite zone matrix (`k` even and >= 2, `block_size >= 1`).
//
// # Safety
// `out` must be a valid out-pointer.
enum ZdStatus zd_generate_checkerboard(size_t k,
                                       size_t block_size,
                                       double coupling_scale,
                                       uint64_t seed,
                                       struct ZdMatrix **out);

// Seeded Hermitian positive-definite matrix `B*B + dominance*I`.
//
// # Safety
// `out` must be a valid out-pointer.
enum ZdStatus zd_generate_hpd(size_t n, uint64_t seed, double dominance, struct ZdMatrix **out);

// Seeded strictly row diagonally dominant matrix.
//
// # Safety
// `out` must be a valid out-pointer.
enum ZdStatus zd_generate_diag_dominant(size_t n,
                                        uint64_t seed,
                                        double margin,
                                        struct ZdMatrix **out);

// The 2x2 example `[[1, alpha], [alpha, 1]]`.
//
// # Safety
// `out` must be a valid out-pointer.
enum ZdStatus zd_generate_example_2x2(double alpha_re, double alpha_im, struct ZdMatrix **out);

// Run the zone determinant expansion.
//
// `offsets` is the full partition offsets list (`0, ..., n`) with
// `offsets_len` elements. `rho_value` is only read for
// [`ZdRhoMode::Value`]. On success `*out` owns the report.
//
// # Safety
// `matrix` must be a live handle, `offsets` readable for `offsets_len`
// elements, `out` a valid out-pointer.
enum ZdStatus zd_zone_expansion(const struct ZdMatrix *matrix,
                                const size_t *offsets,
                                size_t offsets_len,
                                size_t order,
                                enum ZdRhoMode rho_mode,
                                double rho_value,
                                double pivot_tol,
                                struct ZdReport **out);

// Highest order of a report.
//
// # Safety
// `report` must be a live handle.
size_t zd_report_order(const struct ZdReport *report);

// `delta_p` of a report (`p <= order`).
//
// # Safety
// `report` must be a live handle; `re`/`im` valid out-pointers.
enum ZdStatus zd_report_delta(const struct ZdReport *report, size_t p, double *re, double *im);

// `trace(A^p)` of a report (`1 <= p <= order`). Orders suppressed by
// checkerboard parity read as exactly zero.
//
// # Safety
// `report` must be a live handle; `re`/`im` valid out-pointers.
enum ZdStatus zd_report_trace(const struct ZdReport *report, size_t p, double *re, double *im);

// Spectral radius estimate of a report.
//
// # Safety
// `report` must be a live handle; out-pointers valid.
enum ZdStatus zd_report_rho(const struct ZdReport *report,
                            double *value,
                            enum ZdRhoMethod *method,
                            bool *converged,
                            size_t *iterations);

// Error bounds at order `p`; fails with `RhoNotLessThanOne` when the
// report carries no bounds. `*has_tight` says whether `*tight_rel` is
// meaningful (`c * rho^p < 1`).
//
// # Safety
// `report` must be a live handle; out-pointers valid.
enum ZdStatus zd_report_bound(const struct ZdReport *report,
                              size_t p,
                              double *abs_log,
                              double *rel_det,
                              double *tight_rel,
                              bool *has_tight);

// Checkerboard classification of the report's off-diagonal part.
//
// # Safety
// `report` must be a live handle.
enum ZdParity zd_report_checkerboard(const struct ZdReport *report);

// Whether order `p` was suppressed by checkerboard parity.
//
// # Safety
// `report` must be a live handle.
bool zd_report_is_skipped(const struct ZdReport *report, size_t p);

// Release a report handle (accepts NULL).
//
// # Safety
// `report` must have come from this library and not been freed before.
void zd_report_free(struct ZdReport *report);

// Exact dense LU log-determinant (`cap = 0` means the default cap).
//
// # Safety
// `matrix` must be a live handle; out-pointers valid.
enum ZdStatus zd_exact_logdet(const struct ZdMatrix *matrix,
                              size_t cap,
                              double *ln_abs,
                              double *phase);

// Sparse-inverse determinant approximation with the level-`level`
// lower-neighbour pattern. On Cholesky breakdown the offending index is
// written to `*breakdown_index`.
//
// # Safety
// `matrix` must be a live handle; out-pointers valid.
enum ZdStatus zd_spai_logdet(const struct ZdMatrix *matrix,
                             size_t level,
                             size_t cap,
                             double *ln_sigma,
                             size_t *breakdown_index);

// `ln prod_i m_ii` with its accumulated phase.
//
// # Safety
// `matrix` must be a live handle; out-pointers valid.
enum ZdStatus zd_hadamard_logdet(const struct ZdMatrix *matrix, double *ln_abs, double *phase);

// Gerschgorin upper bound on the point-partition spectral radius.
//
// # Safety
// `matrix` must be a live handle; `out` a valid out-pointer.
enum ZdStatus zd_gerschgorin_rho_bound(const struct ZdMatrix *matrix, double *out);

// `c * rho^order` with `c = -n ln(1 - rho)`.
//
// # Safety
// `out` must be a valid out-pointer.
enum ZdStatus zd_log_error_bound(size_t n, double rho, size_t order, double *out);

// Relative determinant bounds; `*has_tight` says whether `*tight` holds.
//
// # Safety
// Out-pointers must be valid.
enum ZdStatus zd_det_rel_error_bounds(size_t n,
                                      double rho,
                                      size_t order,
                                      double *general,
                                      double *tight,
                                      bool *has_tight);

// Real-spectrum pinching bound `1 - exp(-n rho^2 / (1 + lambda_min))`.
//
// # Safety
// `out` must be a valid out-pointer.
enum ZdStatus zd_pinching_bound_real(size_t n, double rho, double lambda_min, double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ZONEDET_H */
