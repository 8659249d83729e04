#include "hyperharm.h"

#include <exception>
#include <new>
#include <string>

#include "hyperharm/bounds.hpp"
#include "hyperharm/config.hpp"
#include "hyperharm/error.hpp"
#include "hyperharm/report.hpp"
#include "hyperharm/runner.hpp"
#include "hyperharm/specfun.hpp"

struct hyh_geometry {
  hyperharm::Geometry geom;
};

struct hyh_config {
  hyperharm::RunConfig config;
};

struct hyh_result {
  std::string json;
  std::string summary;
  int status = 0;
};

namespace {

thread_local std::string last_error;
thread_local std::string last_kind;

hyh_status record(hyh_status status, std::string kind, std::string message) {
  last_kind = std::move(kind);
  last_error = std::move(message);
  return status;
}

template <class F>
hyh_status guarded(F&& body) {
  try {
    last_error.clear();
    last_kind.clear();
    return body();
  } catch (const hyperharm::Error& e) {
    return record(static_cast<hyh_status>(hyperharm::exit_code_for(e.kind())), hyperharm::kind_name(e.kind()),
                  e.what());
  } catch (const std::bad_alloc&) {
    return record(HYH_INTERNAL_ERROR, "out-of-memory", "allocation failed");
  } catch (const std::exception& e) {
    return record(HYH_INTERNAL_ERROR, "internal", e.what());
  } catch (...) {
    return record(HYH_INTERNAL_ERROR, "internal", "unknown exception");
  }
}

hyh_status null_argument(const char* what) {
  return record(HYH_VALIDATION_ERROR, "usage", std::string("null argument: ") + what);
}

}  // namespace

extern "C" {

const char* hyh_version(void) { return "1.0.0"; }
const char* hyh_last_error(void) { return last_error.c_str(); }
const char* hyh_last_error_kind(void) { return last_kind.c_str(); }

hyh_status hyh_geometry_hyperbolic(int n, hyh_geometry** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    *out = new hyh_geometry{hyperharm::make_hyperbolic(n)};
    return HYH_OK;
  });
}

hyh_status hyh_geometry_jacobi(double alpha, double beta, hyh_geometry** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    *out = new hyh_geometry{hyperharm::make_jacobi(alpha, beta)};
    return HYH_OK;
  });
}

void hyh_geometry_free(hyh_geometry* geom) { delete geom; }

hyh_status hyh_geometry_rho(const hyh_geometry* geom, double* rho) {
  if (!geom || !rho) return null_argument("geometry or rho");
  *rho = geom->geom.rho;
  return HYH_OK;
}

hyh_status hyh_spherical_function(const hyh_geometry* geom, double lambda_re, double lambda_im, double r,
                                  double* re, double* im) {
  if (!geom || !re || !im) return null_argument("geometry or outputs");
  return guarded([&] {
    auto v = hyperharm::spherical_function({lambda_re, lambda_im}, r, geom->geom);
    *re = v.real();
    *im = v.imag();
    return HYH_OK;
  });
}

hyh_status hyh_c_function(const hyh_geometry* geom, double lambda_re, double lambda_im, double* re, double* im) {
  if (!geom || !re || !im) return null_argument("geometry or outputs");
  return guarded([&] {
    auto v = hyperharm::c_function({lambda_re, lambda_im}, geom->geom);
    *re = v.real();
    *im = v.imag();
    return HYH_OK;
  });
}

hyh_status hyh_plancherel_density(const hyh_geometry* geom, double lambda, double* value) {
  if (!geom || !value) return null_argument("geometry or value");
  return guarded([&] {
    *value = hyperharm::plancherel_density(lambda, geom->geom);
    return HYH_OK;
  });
}

hyh_status hyh_heat_bound(const hyh_geometry* geom, double t, double sigma, double p, double q, double* value) {
  if (!geom || !value) return null_argument("geometry or value");
  return guarded([&] {
    *value = hyperharm::heat_bound(t, sigma, hyperharm::ExponentPair(p, q), geom->geom);
    return HYH_OK;
  });
}

hyh_status hyh_config_new(hyh_config** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    *out = new hyh_config{};
    return HYH_OK;
  });
}

void hyh_config_free(hyh_config* config) { delete config; }

hyh_status hyh_config_set(hyh_config* config, const char* key, const char* value) {
  if (!config || !key || !value) return null_argument("config, key or value");
  return guarded([&] {
    config->config.set(key, value);
    return HYH_OK;
  });
}

hyh_status hyh_config_load(hyh_config* config, const char* path) {
  if (!config || !path) return null_argument("config or path");
  return guarded([&] {
    config->config.load_file(path);
    return HYH_OK;
  });
}

hyh_status hyh_config_get(const hyh_config* config, const char* key, char* buf, size_t size, size_t* needed) {
  if (!config || !key) return null_argument("config or key");
  return guarded([&] {
    const std::string& v = config->config.get(key);
    if (needed) *needed = v.size();
    if (buf && size > 0) {
      size_t n = v.size() < size - 1 ? v.size() : size - 1;
      v.copy(buf, n);
      buf[n] = '\0';
    }
    return HYH_OK;
  });
}

hyh_status hyh_run(const char* command, const hyh_config* config, hyh_result** out) {
  if (!command || !config || !out) return null_argument("command, config or out");
  *out = nullptr;
  return guarded([&] {
    hyperharm::RunResult r = hyperharm::run_command(command, config->config);
    *out = new hyh_result{r.document.dump(2), r.summary, r.status};
    return static_cast<hyh_status>(r.status);
  });
}

void hyh_result_free(hyh_result* result) { delete result; }
const char* hyh_result_json(const hyh_result* result) { return result ? result->json.c_str() : ""; }
const char* hyh_result_summary(const hyh_result* result) { return result ? result->summary.c_str() : ""; }
int hyh_result_passed(const hyh_result* result) { return result && result->status == 0; }

}  // extern "C"
