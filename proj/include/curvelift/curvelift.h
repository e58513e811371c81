/* curvelift C API.
 *
 * All functions return a clift_status; on failure clift_last_error() holds a
 * message for the calling thread. Strings returned through char** are
 * NUL-terminated JSON (or CSV) owned by the caller and released with
 * clift_string_free. Rationals cross the boundary as "p/q" strings.
 */
#ifndef CURVELIFT_H
#define CURVELIFT_H

#include <stdint.h>

#if defined(_WIN32)
#define CLIFT_API __declspec(dllexport)
#else
#define CLIFT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum clift_status {
  CLIFT_OK = 0,
  CLIFT_INVALID_ARGUMENT = 1,
  CLIFT_DOMAIN = 2,
  CLIFT_UNSUPPORTED_ORDER = 3,
  CLIFT_INVALID_DIMENSION = 4,
  CLIFT_CAP_EXCEEDED = 5,
  CLIFT_PARSE = 6,
  CLIFT_SUBSET_VIOLATION = 7,
  CLIFT_UNDEFINED = 8,
  CLIFT_INVALID_FORM = 9,
  CLIFT_IO = 10,
  CLIFT_INTERNAL = 99
} clift_status;

typedef enum clift_format { CLIFT_FORMAT_JSON = 0, CLIFT_FORMAT_CSV = 1 } clift_format;

typedef struct clift_curve clift_curve;
typedef struct clift_monomials clift_monomials;

CLIFT_API const char* clift_version(void);
CLIFT_API const char* clift_last_error(void);
CLIFT_API const char* clift_status_name(clift_status status);
CLIFT_API void clift_string_free(char* text);

/* Curves. base_dir resolves file references inside the document (may be NULL). */
CLIFT_API clift_status clift_curve_from_json(const char* json, const char* base_dir,
                                             clift_curve** out);
CLIFT_API clift_status clift_curve_load(const char* path, clift_curve** out);
CLIFT_API clift_status clift_curve_moment(int n, clift_curve** out);
CLIFT_API void clift_curve_free(clift_curve* curve);
CLIFT_API clift_status clift_curve_dimension(const clift_curve* curve, int* out);
CLIFT_API clift_status clift_curve_to_json(const clift_curve* curve, char** out);

/* Monomial sets: "[[a, b], ...]" or "M<s>". */
CLIFT_API clift_status clift_monomials_from_json(const char* json, clift_monomials** out);
CLIFT_API void clift_monomials_free(clift_monomials* monomials);

/* {"value", "error_estimate", "exact"} at the rational parameter t. */
CLIFT_API clift_status clift_wronskian(const clift_curve* curve, const char* t, char** out);
CLIFT_API clift_status clift_certify(const clift_curve* curve, double c0, int grid, char** out);

CLIFT_API clift_status clift_lift(const clift_curve* curve, const clift_monomials* monomials,
                                  clift_curve** out);
/* {"n", "degrees", "exponent", "lipschitz_squared_at_1"}. */
CLIFT_API clift_status clift_exponent(const clift_monomials* monomials, char** out);
CLIFT_API clift_status clift_lipschitz(const clift_monomials* monomials, double radius,
                                       double* out);
/* Lattice bijection report for the on-curve points of a polynomial graph. */
CLIFT_API clift_status clift_bijection(const clift_curve* curve, const clift_monomials* monomials,
                                       uint64_t n, char** out);

/* Tube count from a query document {curve, delta, source}. */
CLIFT_API clift_status clift_count(const char* query_json, const char* base_dir, char** out);

/* Energy of {"points": [...]} or {"gap": {...}} with "m". cap = 0 keeps defaults. */
CLIFT_API clift_status clift_energy(const char* doc_json, uint64_t cap, char** out);

CLIFT_API clift_status clift_intersect(const clift_curve* curve, const char* hyperplane_json,
                                       char** out);
/* Seeded random hyperplanes; includes mean-value checks for exact graphs. */
CLIFT_API clift_status clift_hyperplanes(const clift_curve* curve, int trials, uint64_t seed,
                                         char** out);

/* mode: "exponent" or "energy". cap = 0 keeps the config's caps. */
CLIFT_API clift_status clift_experiment(const char* config_json, const char* base_dir,
                                        const char* mode, clift_format format,
                                        int with_runtime, uint64_t cap, char** out);

/* *failures receives the number of failing trials (0 or 1: campaigns stop
 * at the first counterexample). */
CLIFT_API clift_status clift_campaign(const char* kind, uint64_t seed, int trials, uint64_t cap,
                                      char** out, int* failures);

#ifdef __cplusplus
}
#endif

#endif /* CURVELIFT_H */
