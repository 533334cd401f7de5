/* hp0 -- Hilbert series of zeroth Poisson homology over small prime fields.
 *
 * C interface to the hp0 shared library. All functions return an
 * hp0_status; results come back through opaque handles that must be
 * released with the matching *_free call. On any non-OK status,
 * hp0_last_error() describes the problem (thread-local).
 *
 * Status codes mirror the CLI exit codes:
 *   HP0_OK        success (or: series compared equal)
 *   HP0_MISMATCH  a comparison ran to completion and found a difference
 *   HP0_INVALID   malformed input (bad spec file, non-quasihomogeneous Q,
 *                 failed isolated-singularity certificate, bad arguments)
 *   HP0_REFUSED   a computation precondition failed (p divides d, p too
 *                 small, no suitable root of unity, p divides |G|)
 */
#ifndef HP0_H
#define HP0_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hp0_status {
  HP0_OK = 0,
  HP0_MISMATCH = 1,
  HP0_INVALID = 2,
  HP0_REFUSED = 3,
} hp0_status;

typedef struct hp0_series hp0_series;    /* coefficient window of a series */
typedef struct hp0_surface hp0_surface;  /* quasihomogeneous surface spec */
typedef struct hp0_group hp0_group;      /* finite symplectic group action */
typedef struct hp0_strata hp0_strata;    /* characteristic-zero stratum data */

const char* hp0_last_error(void);
void hp0_string_free(char* s);

/* ---- series handles ------------------------------------------------- */

/* First degree of the window (0 for ordinary truncated series). */
int64_t hp0_series_start(const hp0_series* s);
/* Number of coefficients in the window. */
int64_t hp0_series_length(const hp0_series* s);
/* Coefficient of t^deg; 0 outside the window. */
int64_t hp0_series_coeff(const hp0_series* s, int64_t deg);
void hp0_series_free(hp0_series* s);

/* ---- surface specs --------------------------------------------------- */

hp0_status hp0_surface_from_json(const char* text, hp0_surface** out);
/* Built-in ADE presets: labels A1, A2, ..., D4, D5, ..., E6, E7, E8. */
hp0_status hp0_surface_preset(const char* label, hp0_surface** out);
hp0_status hp0_surface_to_json(const hp0_surface* spec, char** out);
/* Characteristic-zero isolated-singularity certificate. */
hp0_status hp0_surface_validate(const hp0_surface* spec);
int64_t hp0_surface_degree(const hp0_surface* spec);
void hp0_surface_free(hp0_surface* spec);

/* ---- surface computations -------------------------------------------- */

hp0_status hp0_surface_brute(const hp0_surface* spec, int64_t p, int64_t max_deg,
                             hp0_series** out);
hp0_status hp0_surface_formula(const hp0_surface* spec, int64_t p, int64_t max_deg,
                                hp0_series** out);
hp0_status hp0_kleinian_formula(const char* label, int64_t p, int64_t max_deg,
                                hp0_series** out);
/* Plane projective curve of degree d with unit weights. */
hp0_status hp0_curve_formula(int64_t d, int64_t p, int64_t max_deg, hp0_series** out);
hp0_status hp0_typea_oracle(int64_t n, int64_t p, int64_t max_deg, hp0_series** out);

/* ---- quotient computations -------------------------------------------- */

hp0_status hp0_group_from_json(const char* text, hp0_group** out);
hp0_status hp0_group_to_json(const hp0_group* g, char** out);
/* Built-in groups: "Z<n>" (cyclic in SL2), "trivial", "S2" (swap on dim 4). */
hp0_status hp0_group_builtin(const char* label, hp0_group** out);
hp0_status hp0_group_order(const hp0_group* g, int64_t p, int64_t* out);
void hp0_group_free(hp0_group* g);

hp0_status hp0_quotient_brute(const hp0_group* g, int64_t p, int64_t max_deg,
                              hp0_series** out);
/* B/{A,B} instead of A/{A,A}. */
hp0_status hp0_quotient_brute_b(const hp0_group* g, int64_t p, int64_t max_deg,
                                hp0_series** out);

hp0_status hp0_strata_from_json(const char* text, hp0_strata** out);
hp0_status hp0_strata_kleinian(const char* label, hp0_strata** out);
hp0_status hp0_strata_to_json(const hp0_strata* s, char** out);
void hp0_strata_free(hp0_strata* s);

hp0_status hp0_quotient_formula(const hp0_strata* s, int64_t p, int64_t max_deg,
                                hp0_series** out);
hp0_status hp0_sympower_formula(int64_t half_dim, int64_t n, int64_t p, int64_t max_deg,
                                hp0_series** out);
hp0_status hp0_sym_kleinian_formula(const char* label, int64_t n, int64_t p,
                                    int64_t max_deg, hp0_series** out);

/* ---- series-lab windows ----------------------------------------------- */

/* op is one of:
 *   "hilb"  coefficients of (1-z^d)/prod(1-z^w_i)
 *   "f"     tail coefficients f_k (needs gcd of weights 1)
 *   "u"     Laurent coefficients of (1-z^d)(1-z^{a+b+c-d})/prod(1-z^w_i)
 *   "s"     coefficients of the reflected negative part
 * The window is [lo, hi]; weights has exactly three entries.
 */
hp0_status hp0_series_op(const char* op, const int64_t* weights, int64_t d,
                         int64_t lo, int64_t hi, hp0_series** out);

/* ---- comparisons, sweeps, acceptance ----------------------------------- */

/* Runs brute force and the closed form side by side. Returns HP0_OK on
 * exact agreement, HP0_MISMATCH otherwise (with *first_mismatch set), or
 * HP0_REFUSED. max_deg <= 0 picks the default depth. Either series output
 * may be NULL if not wanted. */
hp0_status hp0_compare_surface(const hp0_surface* spec, int64_t p, int64_t max_deg,
                               hp0_series** brute, hp0_series** formula,
                               int64_t* first_mismatch);

/* Type A three-way check (explicit decomposition, brute force, formula). */
hp0_status hp0_cross_oracles(int64_t n, int64_t p, int64_t max_deg,
                             hp0_series** brute, int64_t* first_mismatch);

/* Per-prime sweep. Emits a report (TSV or JSON lines depending on
 * `structured`); HP0_MISMATCH when a prime above the annotated threshold
 * disagrees. kleinian_h and max_degree_D (pass <= 0 to omit) annotate the
 * p > h and p > D/2 + 1 thresholds. */
hp0_status hp0_sweep_surface(const hp0_surface* spec, const int64_t* primes,
                             int64_t nprimes, int64_t max_deg, int64_t kleinian_h,
                             int64_t max_degree_D, int structured, char** report);

/* Runs the acceptance suite; writes one line per criterion to the report.
 * HP0_OK iff every criterion passed. */
hp0_status hp0_run_acceptance(char** report);

#ifdef __cplusplus
}
#endif

#endif /* HP0_H */
