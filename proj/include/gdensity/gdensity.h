/* C interface to the gdensity library. */
#ifndef GDENSITY_H
#define GDENSITY_H

#include <stdint.h>

#if defined(GD_BUILDING_LIBRARY)
#define GD_API __attribute__((visibility("default")))
#else
#define GD_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gd_status {
  GD_OK = 0,
  GD_ERR_INVALID_ARGUMENT = 1, /* null pointer or bad enum text */
  GD_ERR_PARSE = 2,            /* malformed spec, rational or JSON */
  GD_ERR_DOMAIN = 3,           /* outside an operation's domain, e.g. a validity radius */
  GD_ERR_HYPOTHESIS = 4,       /* a required hypothesis is not met */
  GD_ERR_INTERNAL = 5
} gd_status;

typedef struct gd_modulus gd_modulus;
typedef struct gd_set gd_set;
typedef struct gd_function gd_function;

GD_API const char* gd_version(void);
/* Message of the last failure on this thread; empty after a success. */
GD_API const char* gd_last_error(void);
/* Frees every char* returned through an out parameter. */
GD_API void gd_string_free(char* s);

/* Moduli: "identity", "power:1/2", "bounded", "log", "psi:power:<c>:<p>",
   "psi:saturating:<c>", "psi:log:<c>". */
GD_API gd_status gd_modulus_parse(const char* spec, gd_modulus** out);
GD_API void gd_modulus_free(gd_modulus* g);
GD_API gd_status gd_modulus_name(const gd_modulus* g, char** out);
/* t is a rational in text form ("1/3", "0.25", "1e-9"). */
GD_API gd_status gd_modulus_eval(const gd_modulus* g, const char* t, double* out);

/* Sets: "empty", "reals", "dyadic-gap[@a]", "bump-support[@a]", "dyadic-gap-u[@a]",
   "reciprocals[:N]", "complement-reciprocals[:N]", "complement:<spec>",
   "(a,b)u(c,d)+{x}-{y}", or a JSON object. */
GD_API gd_status gd_set_parse(const char* spec, gd_set** out);
GD_API void gd_set_free(gd_set* s);
GD_API gd_status gd_set_contains(const gd_set* s, const char* x, int* out);
/* Exact measure of the set inside (lo, hi), written as "p/q". */
GD_API gd_status gd_set_measure_within(const gd_set* s, const char* lo, const char* hi, char** out);
GD_API gd_status gd_set_describe(const gd_set* s, char** out_json);

/* Functions: JSON {"pieces": [...], "points": [...]} or {"special": "bump_sum", "n_max": N}. */
GD_API gd_status gd_function_parse(const char* json, gd_function** out);
GD_API void gd_function_free(gd_function* f);
GD_API gd_status gd_function_eval(const gd_function* f, const char* x, char** out);

/* options_json may be NULL or an object with keys alpha0, q, K, W, tol, theta, theta_limsup,
   and for traces "side" (left, right, both) and "measured" (complement, set).
   format is one of csv, json, ascii, svg. */
GD_API gd_status gd_trace(const gd_modulus* g, const gd_set* s, const char* point, const char* format,
                          const char* options_json, char** out);
GD_API gd_status gd_classify(const gd_modulus* g, const gd_set* s, const char* point, const char* options_json,
                             char** out_json);
GD_API gd_status gd_condition_a(const gd_modulus* g, double epsilon, char** out_json);
GD_API gd_status gd_validate_modulus(const gd_modulus* g, char** out_json, int* passed);
GD_API gd_status gd_open(const gd_modulus* g, const gd_set* s, const char* options_json, char** out_json);
GD_API gd_status gd_approx_continuity(const gd_function* f, const gd_set* witness, const char* x0,
                                      const gd_modulus* g, const char* options_json, char** out_json);

/* Reports carry "passed". id is ex17, ex28 or bump. */
GD_API gd_status gd_reproduce(const char* id, char** out_json, int* passed);
/* suite: interval, families, modulus, density, criteria, coincidence, topology, approx or all. options_json may also
   set pairs, points, translations and function_pairs. */
GD_API gd_status gd_verify(const char* suite, uint64_t seed, const char* options_json, char** out_json,
                           int* passed);

#ifdef __cplusplus
}
#endif

#endif
