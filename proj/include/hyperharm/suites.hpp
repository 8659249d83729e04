#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "hyperharm/verify.hpp"

namespace hyperharm {

/// Suite inputs. NaN exponents pick the suite's own defaults, which are echoed in the report.
struct SuiteOptions {
  Geometry geom = make_hyperbolic(3);
  double p = std::numeric_limits<double>::quiet_NaN();
  double q = std::numeric_limits<double>::quiet_NaN();
  double b = std::numeric_limits<double>::quiet_NaN();
  double sigma = 1.0;
  std::vector<double> t_grid;  // heat; empty means the default grid
  double fit_lo = 1e-3;        // small-t slope window
  double fit_hi = 1e-1;
  int sweep_count = 9;   // items per dilation sweep
  int heat_items = 17;   // gaussian dilations behind the heat curve
  std::uint64_t seed = 1729;
  bool exploratory = false;
  double spread_limit = 10.0;  // max/median
  double hy_margin = 5e-3;
};

struct Assertion {
  std::string name;
  bool passed = false;
  double value = 0.0;
  double limit = 0.0;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  Geometry geometry;
  Parameters parameters;
  std::vector<VerificationRecord> records;
  std::vector<Assertion> assertions;
  std::vector<SlopeFit> fits;
  std::vector<HeatPoint> curve;
  double max_ratio = 0.0;
  double median_ratio = 0.0;
  std::vector<std::string> notes;

  bool passed() const;
};

const std::vector<std::string>& suite_names();

/// Runs one of hy, paley, hyp, multiplier, heat, sobolev, nonunitary.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {});

}  // namespace hyperharm
