/* C interface to the load-sharing reliability library.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every call returns a status; on failure the
 * message and diagnostic code of the last error on the calling thread are
 * available from lshare_last_error() and lshare_last_diagnostic(). */
#ifndef LSHARE_H
#define LSHARE_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(LSHARE_BUILDING_LIBRARY)
#define LSHARE_API __attribute__((visibility("default")))
#else
#define LSHARE_API
#endif

typedef enum lshare_status {
  LSHARE_OK = 0,
  LSHARE_ERR_ARGUMENT = 1,     /* null handle, unknown command, bad value */
  LSHARE_ERR_CONFIG = 2,       /* scenario failed validation */
  LSHARE_ERR_DOMAIN = 3,       /* argument outside an operation's domain */
  LSHARE_ERR_NUMERICAL = 4,    /* support, singularity or accuracy failure */
  LSHARE_ERR_REPRODUCTION = 5, /* counterexample witness not found */
  LSHARE_ERR_INTERNAL = 6
} lshare_status;

typedef enum lshare_format {
  LSHARE_FORMAT_DEFAULT = 0, /* CSV for eval and simulate, JSON otherwise */
  LSHARE_FORMAT_JSON = 1,
  LSHARE_FORMAT_CSV = 2
} lshare_format;

typedef struct lshare_scenario lshare_scenario;
typedef struct lshare_report lshare_report;
typedef struct lshare_distribution lshare_distribution;

LSHARE_API const char* lshare_version(void);
LSHARE_API const char* lshare_last_error(void);
LSHARE_API const char* lshare_last_diagnostic(void);

LSHARE_API lshare_status lshare_scenario_load_file(const char* path, lshare_scenario** out);
LSHARE_API lshare_status lshare_scenario_load_string(const char* json, lshare_scenario** out);
LSHARE_API void lshare_scenario_free(lshare_scenario* scenario);
/* Sets both the absolute and the relative quadrature tolerance. */
LSHARE_API lshare_status lshare_scenario_set_quadrature_tolerance(lshare_scenario* scenario, double tol);
LSHARE_API lshare_status lshare_scenario_set_threads(lshare_scenario* scenario, unsigned threads);

/* Runs "eval", "simulate", "order", "allocate", "verify" or "counterexample".
 * Returns LSHARE_OK whenever a report was produced; the command outcome is
 * lshare_report_exit_code(): 0 ok, 2 config, 3 hypothesis violated,
 * 4 conclusion violated or witness not found, 5 numerical failure. */
LSHARE_API lshare_status lshare_run(const lshare_scenario* scenario, const char* command, lshare_format format,
                                    lshare_report** out);
LSHARE_API int lshare_report_exit_code(const lshare_report* report);
LSHARE_API const char* lshare_report_output(const lshare_report* report, size_t* length);
LSHARE_API const char* lshare_report_diagnostics(const lshare_report* report);
LSHARE_API void lshare_report_free(lshare_report* report);

/* Distribution in the scenario schema, e.g. {"kind":"weibull","shape":2,"scale":1}. */
LSHARE_API lshare_status lshare_distribution_from_json(const char* json, lshare_distribution** out);
LSHARE_API void lshare_distribution_free(lshare_distribution* d);
LSHARE_API lshare_status lshare_distribution_cdf(const lshare_distribution* d, double t, double* out);
LSHARE_API lshare_status lshare_distribution_survival(const lshare_distribution* d, double t, double* out);
LSHARE_API lshare_status lshare_distribution_density(const lshare_distribution* d, double t, double* out);
LSHARE_API lshare_status lshare_distribution_hazard(const lshare_distribution* d, double t, double* out);
LSHARE_API lshare_status lshare_distribution_reversed_hazard(const lshare_distribution* d, double t, double* out);
LSHARE_API lshare_status lshare_distribution_quantile(const lshare_distribution* d, double p, double* out);

#ifdef __cplusplus
}
#endif

#endif /* LSHARE_H */
