/* C interface to the trigcas verification suites.
 *
 * Handles are opaque.  Every function returning trigcas_status leaves a
 * message for trigcas_last_error() on failure; the message is per thread and
 * valid until the next failing call on that thread.  Strings returned by a
 * run handle live as long as the handle.
 */
#ifndef TRIGCAS_TRIGCAS_H
#define TRIGCAS_TRIGCAS_H

#include <stddef.h>

#if defined(TRIGCAS_BUILDING_LIBRARY)
#define TRIGCAS_API __attribute__((visibility("default")))
#else
#define TRIGCAS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values match the command line exit codes. */
typedef enum trigcas_status {
  TRIGCAS_OK = 0,
  TRIGCAS_CHECK_FAILED = 1,
  TRIGCAS_USAGE = 2,
  TRIGCAS_NUMERICAL = 3,
  TRIGCAS_INTERNAL = 4
} trigcas_status;

typedef struct trigcas_config trigcas_config;
typedef struct trigcas_run trigcas_run;

TRIGCAS_API const char* trigcas_version(void);
TRIGCAS_API const char* trigcas_last_error(void);

/* Defaults: suite "all", seeded parameters, lambda 1, tol 1e-10, seed 1. */
TRIGCAS_API trigcas_config* trigcas_config_new(void);
TRIGCAS_API void trigcas_config_free(trigcas_config* config);
/* Keys: suite, type, n, m, a, kappa-step, lambda, tol, seed,
 * negative-control, omit-timing, out.  Boolean keys take "true"/"false".
 * Returns TRIGCAS_USAGE for unknown keys or unparsable values. */
TRIGCAS_API trigcas_status trigcas_config_set(trigcas_config* config, const char* key, const char* value);

/* Runs the configured suite.  *out is set on TRIGCAS_OK, TRIGCAS_CHECK_FAILED
 * and TRIGCAS_NUMERICAL, and is NULL otherwise. */
TRIGCAS_API trigcas_status trigcas_run_suite(const trigcas_config* config, trigcas_run** out);
TRIGCAS_API void trigcas_run_free(trigcas_run* run);
TRIGCAS_API trigcas_status trigcas_run_status(const trigcas_run* run);
TRIGCAS_API size_t trigcas_run_check_count(const trigcas_run* run);
/* name stays valid while run lives; pass receives 0 or 1. */
TRIGCAS_API trigcas_status trigcas_run_check(const trigcas_run* run, size_t index, const char** name, int* pass);
/* The JSON report as UTF-8. */
TRIGCAS_API const char* trigcas_run_json(const trigcas_run* run);
/* Atomically writes the JSON report to path. */
TRIGCAS_API trigcas_status trigcas_run_write(const trigcas_run* run, const char* path);

#ifdef __cplusplus
}
#endif

#endif
