/*
 * tamecurve — construction and certification of hyperelliptic curves over Q
 * whose mod-p torsion field is tamely ramified, with Frobenius-sampling
 * evidence for the size of the mod-p Galois image.
 *
 * C API over an opaque-handle core.  Every function returns a tc_status;
 * tc_last_error() describes the most recent failure on the calling thread.
 * Strings returned through char** are heap-allocated and must be released
 * with tc_string_free().  Big integers cross the boundary as decimal strings.
 */

#ifndef TAMECURVE_H
#define TAMECURVE_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tc_status {
  TC_OK = 0,
  TC_ERROR_INVALID_ARGUMENT = 1,
  TC_ERROR_PARSE = 2,
  TC_ERROR_UNSUPPORTED_PRIME = 3,
  TC_ERROR_CONFLICTING_CONSTRAINTS = 4,
  TC_ERROR_NON_COPRIME_MODULI = 5,
  TC_ERROR_NOT_A_UNIT = 6,
  TC_ERROR_ZERO_POLYNOMIAL = 7,
  TC_ERROR_DEGREE_TOO_SMALL = 8,
  TC_ERROR_GENUS_ZERO = 9,
  TC_ERROR_RAMIFIED_CASE = 10,
  TC_ERROR_WRONG_PRIME = 11,
  TC_ERROR_INCOMPLETE_SPEC = 12,
  TC_ERROR_CONSTRUCTION_FAILED = 13,
  TC_ERROR_BAD_REDUCTION = 14,
  TC_ERROR_BUDGET_EXCEEDED = 15,
  TC_ERROR_INSUFFICIENT_DATA = 16,
  TC_ERROR_INTERNAL = 17,
} tc_status;

typedef struct tc_curve tc_curve;             /* an assembled curve + constraints */
typedef struct tc_certificate tc_certificate; /* per-prime tameness certificate */
typedef struct tc_census tc_census;           /* Frobenius records + evidence */

const char* tc_version(void);
const char* tc_status_name(tc_status s);
/* Message of the last failed call on this thread; empty string if none. */
const char* tc_last_error(void);
void tc_string_free(char* s);

/* ---- construction ---------------------------------------------------- */

/* Builds the congruence constraints for (genus, p), CRT-assembles f, and
 * returns the curve y^2 = f(x).  prime is an odd prime as a decimal string;
 * kisin_depth is the congruence precision N at p (0 picks the default
 * 2*genus + 2). */
tc_status tc_construct(uint32_t genus, const char* prime, uint32_t kisin_depth,
                       tc_curve** out);

tc_status tc_curve_from_json(const char* json, tc_curve** out);
tc_status tc_curve_to_json(const tc_curve* curve, int pretty, char** out);
void tc_curve_free(tc_curve* curve);

/* ---- certification ---------------------------------------------------- */

tc_status tc_certify(const tc_curve* curve, tc_certificate** out);
/* 1 when every entry passes, 0 otherwise. */
int tc_certificate_overall(const tc_certificate* cert);
tc_status tc_certificate_to_json(const tc_certificate* cert, int pretty, char** out);
void tc_certificate_free(tc_certificate* cert);

/* ---- endomorphism structure ------------------------------------------ */

/* JSON description of the CM algebra of Jac(y^2 = x^n - a): cyclotomic
 * factors, splitting of p in each, unit-group order, ramification flag. */
tc_status tc_endo_structure(const char* n, const char* prime, int pretty,
                            char** out_json);

/* ---- Frobenius census -------------------------------------------------- */

/* Census over good odd primes ell <= ell_bound (ell != p).  budget caps the
 * enumeration size ell^r (0 = default 1e7); workers 0 = TAMECURVE_WORKERS
 * env or hardware. */
tc_status tc_frobenius_census(const tc_curve* curve, uint64_t ell_bound,
                              uint64_t budget, uint32_t workers, uint64_t seed,
                              tc_census** out);
/* Same census for a bare polynomial ("c0,c1,..." or {"coeffs":[...]}). */
tc_status tc_frobenius_census_poly(const char* poly, const char* prime,
                                   uint64_t ell_bound, uint64_t budget,
                                   uint32_t workers, uint64_t seed,
                                   tc_census** out);
/* One record per line, then the evidence object (pretty = wrapped object). */
tc_status tc_census_format(const tc_census* census, int pretty, char** out);
/* "ConsistentWithFullImage", "Inconclusive" or "ObstructionFound". */
const char* tc_census_verdict(const tc_census* census);
void tc_census_free(tc_census* census);

/* ---- auxiliary checks -------------------------------------------------- */

/* Table of the endomorphism-polynomial eigenvalue identity over
 * n_min..n_max; *all_ok set to 1 when every n checks out. */
tc_status tc_pn_check(uint64_t n_min, uint64_t n_max, int pretty, int* all_ok,
                      char** out_json);

/* y^2 = prod_{j=0}^{2g}(x-j): genus-g curve with rational 2-torsion, JSON
 * polynomial. */
tc_status tc_two_torsion_split_curve(uint32_t genus, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* TAMECURVE_H */
