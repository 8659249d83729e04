/* C interface to the hyperharm library. All handles are opaque; every call returns a status and
   leaves details of the last failure in a thread-local message. */
#ifndef HYPERHARM_H
#define HYPERHARM_H

#include <stddef.h>

#if defined(HYH_BUILDING_LIBRARY)
#define HYH_API __attribute__((visibility("default")))
#else
#define HYH_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values double as process exit codes. */
typedef enum {
  HYH_OK = 0,
  HYH_ASSERTION_FAILED = 1,
  HYH_VALIDATION_ERROR = 2,
  HYH_NUMERICAL_ERROR = 3,
  HYH_INTERNAL_ERROR = 4
} hyh_status;

typedef struct hyh_geometry hyh_geometry;
typedef struct hyh_config hyh_config;
typedef struct hyh_result hyh_result;

HYH_API const char* hyh_version(void);
/* Message and error kind of the last failing call on this thread; empty strings after success. */
HYH_API const char* hyh_last_error(void);
HYH_API const char* hyh_last_error_kind(void);

HYH_API hyh_status hyh_geometry_hyperbolic(int n, hyh_geometry** out);
HYH_API hyh_status hyh_geometry_jacobi(double alpha, double beta, hyh_geometry** out);
HYH_API void hyh_geometry_free(hyh_geometry* geom);
HYH_API hyh_status hyh_geometry_rho(const hyh_geometry* geom, double* rho);

HYH_API hyh_status hyh_spherical_function(const hyh_geometry* geom, double lambda_re, double lambda_im, double r,
                                          double* re, double* im);
HYH_API hyh_status hyh_c_function(const hyh_geometry* geom, double lambda_re, double lambda_im, double* re,
                                  double* im);
HYH_API hyh_status hyh_plancherel_density(const hyh_geometry* geom, double lambda, double* value);
HYH_API hyh_status hyh_heat_bound(const hyh_geometry* geom, double t, double sigma, double p, double q,
                                  double* value);

HYH_API hyh_status hyh_config_new(hyh_config** out);
HYH_API void hyh_config_free(hyh_config* config);
HYH_API hyh_status hyh_config_set(hyh_config* config, const char* key, const char* value);
HYH_API hyh_status hyh_config_load(hyh_config* config, const char* path);
/* Copies the value into buf (truncated to size-1); *needed receives the full length when not NULL. */
HYH_API hyh_status hyh_config_get(const hyh_config* config, const char* key, char* buf, size_t size,
                                  size_t* needed);

/* command is one of transform, bound, verify, heat-curve. On HYH_OK or HYH_ASSERTION_FAILED a result
   is returned through out; otherwise *out is NULL. */
HYH_API hyh_status hyh_run(const char* command, const hyh_config* config, hyh_result** out);
HYH_API void hyh_result_free(hyh_result* result);
HYH_API const char* hyh_result_json(const hyh_result* result);
HYH_API const char* hyh_result_summary(const hyh_result* result);
HYH_API int hyh_result_passed(const hyh_result* result);

#ifdef __cplusplus
}
#endif

#endif
