#ifndef SECOH_SECOH_H
#define SECOH_SECOH_H

/* C interface to the secondary cohomology library. Problems and results are
 * JSON documents; every call returns a status code and the last failure
 * message is available per thread through secoh_last_error(). */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(SECOH_BUILDING_LIBRARY)
#define SECOH_API __declspec(dllexport)
#else
#define SECOH_API __declspec(dllimport)
#endif
#else
#define SECOH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum secoh_status {
  SECOH_OK = 0,
  SECOH_ERR_VALIDATION = 1,       /* malformed document or failed axiom */
  SECOH_ERR_SCALE = 2,            /* ambient rank above the ceiling */
  SECOH_ERR_VERIFY = 3,           /* an identity check failed; result still produced */
  SECOH_ERR_INVALID_ARGUMENT = 4, /* null pointer, bad degree, ... */
  SECOH_ERR_INTERNAL = 5
} secoh_status;

typedef struct secoh_problem secoh_problem;

SECOH_API const char* secoh_version(void);

/* Message describing the most recent failure on this thread ("" if none). */
SECOH_API const char* secoh_last_error(void);

/* Parses and validates a problem document. On success *out owns a handle
 * released with secoh_problem_free. */
SECOH_API secoh_status secoh_problem_parse(const char* text, size_t length, secoh_problem** out);
SECOH_API void secoh_problem_free(secoh_problem* problem);

/* Hex content hash of the validated document. Valid while the handle lives. */
SECOH_API const char* secoh_problem_hash(const secoh_problem* problem);

/* Runs the mode named in the document. Result documents are written to
 * *out_json (free with secoh_string_free) whenever the status is SECOH_OK or
 * SECOH_ERR_VERIFY. ceiling == 0 selects the default ambient-rank ceiling. */
SECOH_API secoh_status secoh_run(const secoh_problem* problem, uint64_t ceiling, char** out_json);

SECOH_API secoh_status secoh_compute(const secoh_problem* problem, uint64_t ceiling, char** out_json);
/* samples == 0 selects the default sample count. */
SECOH_API secoh_status secoh_verify(const secoh_problem* problem, uint32_t samples, uint64_t seed, char** out_json);
SECOH_API secoh_status secoh_oracle(const secoh_problem* problem, char** out_json);
/* degree < 0 uses the first degree listed in the document. */
SECOH_API secoh_status secoh_faces(const secoh_problem* problem, int degree, char** out_json);

/* Ambient rank that the last SECOH_ERR_SCALE failure on this thread needed. */
SECOH_API uint64_t secoh_last_required_rank(void);

SECOH_API void secoh_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
