/* C API for the lpsd library: k-locally PSD cone membership, eigenvalue and
 * distance bounds, spectrum realization, locally singular matrix
 * classification, and quartic boundary certificates.
 *
 * Conventions:
 *   - All functions return an lpsd_status; LPSD_OK means success.
 *   - On failure, lpsd_last_error() returns a thread-local message.
 *   - Strings returned through char** are heap-allocated JSON documents;
 *     release them with lpsd_string_free.
 *   - Matrices are opaque handles; release them with lpsd_matrix_free.
 *   - Index sets inside JSON reports are 1-based.
 */
#ifndef LPSD_H
#define LPSD_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lpsd_status {
  LPSD_OK = 0,
  LPSD_ERR_DOMAIN = 1,   /* invalid argument / precondition violated */
  LPSD_ERR_PARSE = 2,    /* malformed input text */
  LPSD_ERR_NUMERIC = 3,  /* numerical failure (singularity, no convergence) */
  LPSD_FALSIFIED = 4     /* a structural claim was falsified by the data */
} lpsd_status;

typedef enum lpsd_verdict {
  LPSD_INSIDE = 0,
  LPSD_BOUNDARY = 1,
  LPSD_OUTSIDE = 2
} lpsd_verdict;

typedef enum lpsd_norm {
  LPSD_NORM_TRACE = 0,
  LPSD_NORM_FROBENIUS = 1,
  LPSD_NORM_SCHATTEN = 2
} lpsd_norm;

typedef struct lpsd_matrix lpsd_matrix; /* opaque; float or exact mode */

/* Thread-local message describing the most recent failure in this thread. */
const char* lpsd_last_error(void);
void lpsd_string_free(char* s);
void lpsd_matrix_free(lpsd_matrix* m);

/* Parses either the JSON matrix format or whitespace-separated plain text. */
lpsd_status lpsd_matrix_parse(const char* text, lpsd_matrix** out);
lpsd_status lpsd_matrix_dim(const lpsd_matrix* m, int* n);
/* 1 when the handle stores exact rational entries, 0 for float. */
lpsd_status lpsd_matrix_is_exact(const lpsd_matrix* m, int* exact);
lpsd_status lpsd_matrix_to_json(const lpsd_matrix* m, char** json);
/* G(n,k) in float (exact = 0) or rational (exact = 1) mode. */
lpsd_status lpsd_gram_g(int n, int k, int exact, lpsd_matrix** out);
/* Eigenvalues ascending into values[0..n-1] (exact handles are converted). */
lpsd_status lpsd_eigenvalues(const lpsd_matrix* m, double* values);

/* Membership reports: JSON {"verdict","margin","certificate"}. Either out
 * pointer may be NULL when only the other is wanted. */
lpsd_status lpsd_membership_s_nk(const lpsd_matrix* m, int k, double tol,
                                 int full_certificates, lpsd_verdict* verdict,
                                 char** report_json);
lpsd_status lpsd_membership_h_e(const double* x, int n, int k, double tol,
                                lpsd_verdict* verdict, char** report_json);
lpsd_status lpsd_membership_h_c(const lpsd_matrix* m, int k, double tol,
                                lpsd_verdict* verdict, char** report_json);

/* Closed-form bounds. p is the Schatten exponent (ignored otherwise). */
lpsd_status lpsd_min_eig_bound(lpsd_norm norm, double p, int n, int k, double* out);
lpsd_status lpsd_frobenius_dist_bound(int n, int k, double* out);
lpsd_status lpsd_frobenius_dist_to_psd(const lpsd_matrix* m, double* out);
/* Samples `samples` matrices in S^{n,k}, normalizes per the norm, and
 * reports the smallest eigenvalue seen (trace/Schatten norms) or the
 * largest normalized PSD distance (pass dist = 1). Deterministic per seed;
 * `threads` <= 0 means use all logical processors. */
lpsd_status lpsd_bound_verify(lpsd_norm norm, double p, int n, int k, int dist,
                              int samples, uint64_t seed, int threads,
                              double* worst);

/* Realization: JSON {"matrix","shift","route","verification":{...}}. */
lpsd_status lpsd_realize_k1(const double* x, int n, double tol, char** json);
lpsd_status lpsd_realize_h_nminus1(const double* x, int n, double tol, char** json);
/* Realizes a good-rooted monic quartic a0 + a1 x + a2 x^2 + a3 x^3 + x^4 as
 * D G(4,2) D; the JSON includes the almost-nonnegative-root certificate. */
lpsd_status lpsd_realize_quartic(double a0, double a1, double a2, double a3,
                                 char** json);

/* Classification. */
lpsd_status lpsd_classify_nls(const lpsd_matrix* m, int k, double tol,
                              int* nls, char** json);
/* All 64 unit-diagonal +-1 sign cases; LPSD_FALSIFIED if any case is
 * neither singular nor congruent to G(4,2). */
lpsd_status lpsd_enumerate_sign_cases_42(char** json);
/* Recovery witness for M = D G(n,k) D. found reports success. */
lpsd_status lpsd_diag_congruent_to_g(const lpsd_matrix* m, int k, double tol,
                                     int* found, char** json);
/* Random structure-theorem verification; LPSD_FALSIFIED when any sample
 * fails recovery or the minor sign pattern. */
lpsd_status lpsd_verify_structure(int n, int k, int samples, uint64_t seed,
                                  char** json);

#ifdef __cplusplus
}
#endif

#endif /* LPSD_H */
