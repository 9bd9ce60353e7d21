/* C interface to the zernike-disc library. All handles are opaque; every
 * function returning zd_status leaves a message in zd_last_error() on
 * failure (thread-local, valid until the next failing call on that thread). */
#ifndef ZDISC_H
#define ZDISC_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define ZD_API __declspec(dllexport)
#else
#define ZD_API __attribute__((visibility("default")))
#endif

typedef enum zd_status {
  ZD_OK = 0,
  ZD_ERR_DOMAIN,
  ZD_ERR_OVERFLOW,
  ZD_ERR_PATH,
  ZD_ERR_PARSE,
  ZD_ERR_INVALID_ARGUMENT,
  ZD_ERR_CONVERGENCE,
  ZD_ERR_CUTOFF,
  ZD_ERR_METADATA_MISMATCH,
  ZD_ERR_EVALUATION,
  ZD_ERR_IO,
  ZD_ERR_INTERNAL
} zd_status;

typedef struct zd_complex {
  double re;
  double im;
} zd_complex;

typedef enum zd_eval_path { ZD_PATH_J_SUM = 0, ZD_PATH_K_SUM, ZD_PATH_HYPERGEOMETRIC } zd_eval_path;
typedef enum zd_kernel_path { ZD_KERNEL_CLOSED = 0, ZD_KERNEL_SERIES, ZD_KERNEL_DIAGONAL } zd_kernel_path;

typedef struct zd_poly zd_poly;
typedef struct zd_rule zd_rule;
typedef struct zd_observable zd_observable;
typedef struct zd_operator zd_operator;
typedef struct zd_report zd_report;

ZD_API const char* zd_last_error(void);
ZD_API const char* zd_status_name(zd_status status);

/* Parses a constant such as "0.3-0.4i" or "1/2". */
ZD_API zd_status zd_parse_complex(const char* text, zd_complex* out);

/* polynomials */
ZD_API zd_status zd_poly_build(int m, int n, double alpha, zd_poly** out);
ZD_API void zd_poly_free(zd_poly* p);
ZD_API size_t zd_poly_term_count(const zd_poly* p);
/* Terms in increasing (a, b) order: coefficient of z^a zbar^b. */
ZD_API zd_status zd_poly_term(const zd_poly* p, size_t i, int* a, int* b, zd_complex* coefficient);
ZD_API zd_status zd_eval_poly(int m, int n, double alpha, zd_complex z, zd_eval_path path, zd_complex* out);
ZD_API zd_status zd_normalization(int m, int n, double alpha, double* out);

/* kernels */
ZD_API zd_status zd_kernel(int n, double alpha, zd_complex z, zd_complex w, zd_complex* value, zd_kernel_path* path);
ZD_API const char* zd_kernel_path_name(zd_kernel_path path);

/* quadrature */
ZD_API zd_status zd_rule_create(int n_rad, int n_ang, double alpha, zd_rule** out);
ZD_API void zd_rule_free(zd_rule* r);
ZD_API size_t zd_rule_size(const zd_rule* r);
ZD_API int zd_rule_exact_degree(const zd_rule* r);
ZD_API zd_status zd_rule_integrate(const zd_rule* r, const zd_observable* f, zd_complex* out);

/* observables */
ZD_API zd_status zd_observable_parse(const char* text, zd_observable** out, size_t* error_position);
ZD_API void zd_observable_free(zd_observable* f);
ZD_API zd_status zd_observable_eval(const zd_observable* f, zd_complex z, zd_complex* out);
/* -1 when the expression is not polynomial in (z, zbar). */
ZD_API int zd_observable_degree(const zd_observable* f);
/* Writes the canonical form; *needed receives strlen + 1. */
ZD_API zd_status zd_observable_to_string(const zd_observable* f, char* buffer, size_t capacity, size_t* needed);

/* operators */
ZD_API zd_status zd_quantize(const zd_observable* f, int n, double alpha, int M, zd_operator** out);
ZD_API zd_status zd_ladder(int n, double alpha, int M, zd_operator** az, zd_operator** azbar);
ZD_API zd_status zd_commutator(const zd_operator* a, const zd_operator* b, zd_operator** out);
ZD_API void zd_operator_free(zd_operator* op);
ZD_API int zd_operator_size(const zd_operator* op);
ZD_API zd_status zd_operator_entry(const zd_operator* op, int i, int j, zd_complex* out);
ZD_API size_t zd_operator_warning_count(const zd_operator* op);
ZD_API const char* zd_operator_warning(const zd_operator* op, size_t i);
/* Row-major re,im pairs after a "# n=.. alpha=.. M=.. provenance=.." line; path "-" is stdout. */
ZD_API zd_status zd_operator_write_csv(const zd_operator* op, const char* path);
ZD_API zd_status zd_lower_symbol(const zd_operator* op, zd_complex z, zd_complex* out, double* tail_mass);

ZD_API zd_status zd_berezin(const zd_observable* f, zd_complex z, int n, double alpha, zd_complex* out, double* accuracy);

/* reports; threads <= 0 means one */
ZD_API zd_status zd_verify(const char* suite, double alpha, int max_m, int threads, zd_report** out);
ZD_API zd_status zd_compare_su11(double eta, int n, double alpha, int M, zd_report** out);
ZD_API int zd_report_pass(const zd_report* r);
/* Pretty-printed JSON owned by the report. */
ZD_API const char* zd_report_json(const zd_report* r);
ZD_API zd_status zd_report_write(const zd_report* r, const char* path);
ZD_API void zd_report_free(zd_report* r);

#ifdef __cplusplus
}
#endif

#endif
