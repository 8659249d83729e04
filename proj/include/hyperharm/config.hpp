#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hyperharm/bounds.hpp"
#include "hyperharm/corpus.hpp"
#include "hyperharm/multiplier.hpp"
#include "hyperharm/specfun.hpp"
#include "hyperharm/suites.hpp"

namespace hyperharm {

/// Flat key=value configuration. Every known key carries a default, so the resolved view is always
/// complete; an empty value means "let the command decide".
class RunConfig {
 public:
  RunConfig();

  /// Unknown keys raise a usage error.
  void set(const std::string& key, const std::string& value);
  /// Lines of key=value; '#' starts a comment. Parse errors name the line.
  void load_file(const std::string& path);
  void load_text(const std::string& text, const std::string& origin = "<text>");

  const std::string& get(const std::string& key) const;
  bool has_value(const std::string& key) const { return !get(key).empty(); }
  double number(const std::string& key) const;
  /// NaN when the value is empty.
  double number_or_nan(const std::string& key) const;
  long integer(const std::string& key) const;
  bool flag(const std::string& key) const;
  /// Comma separated numbers.
  std::vector<double> list(const std::string& key) const;

  const std::map<std::string, std::string>& entries() const { return entries_; }

 private:
  std::map<std::string, std::string> entries_;
};

const std::map<std::string, std::string>& config_defaults();

Geometry geometry_from(const RunConfig& config);
/// Exponents with per-command fallbacks when p or q is empty.
ExponentPair exponents_from(const RunConfig& config, double p_fallback, double q_fallback);
Symbol symbol_from(const RunConfig& config, const Geometry& geom);
SpectralProfile profile_from(const RunConfig& config, const Geometry& geom);
WeightFunction weight_from(const RunConfig& config, const Geometry& geom);
SuiteOptions suite_options_from(const RunConfig& config);

/// Two numeric columns with an optional header line; parse errors carry the line number.
std::vector<std::pair<double, double>> read_two_column_csv(const std::string& path);

}  // namespace hyperharm
