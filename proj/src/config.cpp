#include "hyperharm/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "hyperharm/error.hpp"

namespace hyperharm {

namespace {

std::string trim(const std::string& s) {
  auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return {};
  auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

bool parse_double(const std::string& text, double& out) {
  std::string t = trim(text);
  if (t.empty()) return false;
  if (t == "inf" || t == "+inf") {
    out = kInfinity;
    return true;
  }
  char* end = nullptr;
  out = std::strtod(t.c_str(), &end);
  return end == t.c_str() + t.size();
}

}  // namespace

const std::map<std::string, std::string>& config_defaults() {
  static const std::map<std::string, std::string> defaults{
      // geometry and grids
      {"geometry", "hyperbolic"}, {"n", "3"}, {"alpha", ""}, {"beta", ""},
      {"lambda_max", ""}, {"r_max", ""}, {"points_per_panel", "32"},
      // exponents
      {"p", ""}, {"q", ""}, {"b", ""},
      // symbols and profiles
      {"symbol", "heat"}, {"t", "1"}, {"sigma", "1"}, {"sigma_im", "0"}, {"R", "1"}, {"a", "4"},
      {"kappa", "1"}, {"c", "1"}, {"zeta", "0"}, {"z", "0"}, {"z_im", "0"}, {"rate", "1"},
      {"symbol_file", ""},
      // weights
      {"weight", "power"}, {"weight_a", ""}, {"weight_c", "1"}, {"weight_t", "1"},
      // transform input
      {"input", "gaussian"}, {"s", "1"}, {"inner", "0.5"}, {"outer", "3"}, {"input_file", ""},
      {"shift", "0"}, {"round_trip", "false"},
      // commands
      {"bound", "weak"}, {"suite", "hy"}, {"corpus", "standard"},
      {"t_grid", ""}, {"fit_lo", "0.001"}, {"fit_hi", "0.1"}, {"sweep_count", "9"}, {"heat_items", "17"},
      {"spread_limit", "10"}, {"hy_margin", "0.005"},
      {"out", "out"}, {"seed", "1729"}, {"exploratory", "false"},
  };
  return defaults;
}

RunConfig::RunConfig() : entries_(config_defaults()) {}

void RunConfig::set(const std::string& key, const std::string& value) {
  auto it = entries_.find(trim(key));
  if (it == entries_.end()) fail(ErrorKind::Usage, "unknown configuration key '", trim(key), "'");
  it->second = trim(value);
}

void RunConfig::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot open configuration file ", path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  load_text(buffer.str(), path);
}

void RunConfig::load_text(const std::string& text, const std::string& origin) {
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (trim(line).empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) fail(ErrorKind::Parse, origin, ":", number, ": expected key=value");
    std::string key = trim(line.substr(0, eq));
    if (!entries_.count(key)) fail(ErrorKind::Parse, origin, ":", number, ": unknown key '", key, "'");
    entries_[key] = trim(line.substr(eq + 1));
  }
}

const std::string& RunConfig::get(const std::string& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) fail(ErrorKind::Usage, "unknown configuration key '", key, "'");
  return it->second;
}

double RunConfig::number(const std::string& key) const {
  double v = 0.0;
  if (!parse_double(get(key), v)) fail(ErrorKind::Parse, "key '", key, "' needs a number, got '", get(key), "'");
  return v;
}

double RunConfig::number_or_nan(const std::string& key) const {
  return has_value(key) ? number(key) : std::numeric_limits<double>::quiet_NaN();
}

long RunConfig::integer(const std::string& key) const {
  double v = number(key);
  if (v != std::floor(v) || std::fabs(v) > 9e15)
    fail(ErrorKind::Parse, "key '", key, "' needs an integer, got '", get(key), "'");
  return static_cast<long>(v);
}

bool RunConfig::flag(const std::string& key) const {
  const std::string& v = get(key);
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off" || v.empty()) return false;
  fail(ErrorKind::Parse, "key '", key, "' needs true or false, got '", v, "'");
}

std::vector<double> RunConfig::list(const std::string& key) const {
  std::vector<double> out;
  std::stringstream in(get(key));
  std::string item;
  while (std::getline(in, item, ',')) {
    if (trim(item).empty()) continue;
    double v = 0.0;
    if (!parse_double(item, v)) fail(ErrorKind::Parse, "key '", key, "' has a non-numeric entry '", trim(item), "'");
    out.push_back(v);
  }
  return out;
}

Geometry geometry_from(const RunConfig& config) {
  const std::string& kind = config.get("geometry");
  if (kind == "hyperbolic") {
    double n = config.number("n");
    if (n != std::floor(n)) fail(ErrorKind::InvalidDimension, "hyperbolic dimension must be an integer, got ", n);
    return make_hyperbolic(static_cast<int>(n));
  }
  if (kind == "jacobi") {
    if (!config.has_value("alpha") || !config.has_value("beta"))
      fail(ErrorKind::InvalidParameters, "jacobi geometry needs alpha and beta");
    return make_jacobi(config.number("alpha"), config.number("beta"));
  }
  fail(ErrorKind::Usage, "geometry must be hyperbolic or jacobi, got '", kind, "'");
}

ExponentPair exponents_from(const RunConfig& config, double p_fallback, double q_fallback) {
  double p = config.has_value("p") ? config.number("p") : p_fallback;
  double q = config.has_value("q") ? config.number("q") : q_fallback;
  return ExponentPair(p, q);
}

std::vector<std::pair<double, double>> read_two_column_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot open ", path);
  std::vector<std::pair<double, double>> rows;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (trim(line).empty() || trim(line)[0] == '#') continue;
    auto comma = line.find(',');
    double a = 0.0;
    double b = 0.0;
    bool ok = comma != std::string::npos && parse_double(line.substr(0, comma), a) &&
              parse_double(line.substr(comma + 1), b);
    if (!ok) {
      if (rows.empty() && number == 1) continue;  // header
      fail(ErrorKind::Parse, path, ":", number, ": expected two numeric columns, got '", trim(line), "'");
    }
    rows.emplace_back(a, b);
  }
  if (rows.size() < 2) fail(ErrorKind::Parse, path, ": need at least two data rows");
  return rows;
}

namespace {

std::pair<std::vector<double>, std::vector<cplx>> table_from(const RunConfig& config) {
  if (!config.has_value("symbol_file")) fail(ErrorKind::Usage, "tabulated family needs symbol_file");
  std::vector<double> x;
  std::vector<cplx> y;
  for (auto [a, b] : read_two_column_csv(config.get("symbol_file"))) {
    x.push_back(a);
    y.emplace_back(b, 0.0);
  }
  return {x, y};
}

}  // namespace

Symbol symbol_from(const RunConfig& config, const Geometry& geom) {
  const std::string& family = config.get("symbol");
  if (family == "heat") return heat_symbol(config.number("t"), config.number("sigma"), geom);
  if (family == "indicator") return indicator_symbol(config.number("R"));
  if (family == "power") return power_decay_symbol(config.number("a"));
  if (family == "constant") return constant_symbol(config.number("c"));
  if (family == "sobolev") return sobolev_symbol(config.number("kappa"), geom);
  if (family == "potential")
    return potential_symbol(cplx(config.number("z"), config.number("z_im")),
                            cplx(config.number("sigma"), config.number("sigma_im")), geom);
  if (family == "tabulated") {
    auto [x, y] = table_from(config);
    return tabulated_symbol(std::move(x), std::move(y));
  }
  fail(ErrorKind::Usage, "unknown symbol family '", family,
       "' (expected heat, indicator, power, constant, sobolev, potential, tabulated)");
}

SpectralProfile profile_from(const RunConfig& config, const Geometry& geom) {
  const std::string& family = config.get("symbol");
  if (family == "heat") return heat_profile(config.number("t"), config.number("sigma"), geom);
  if (family == "power") return power_profile(config.number("zeta"), config.number("sigma"), geom);
  if (family == "exponential") return exponential_profile(config.number("rate"), geom);
  if (family == "constant") return constant_profile(config.number("c"), geom);
  if (family == "tabulated") {
    auto [x, y] = table_from(config);
    return tabulated_profile(std::move(x), std::move(y), geom);
  }
  fail(ErrorKind::Usage, "unknown profile family '", family,
       "' (expected heat, power, exponential, constant, tabulated)");
}

WeightFunction weight_from(const RunConfig& config, const Geometry& geom) {
  const std::string& family = config.get("weight");
  if (family == "power") return power_weight(config.has_value("weight_a") ? config.number("weight_a") : geom.n);
  if (family == "constant") return constant_weight(config.number("weight_c"));
  if (family == "gaussian") return gaussian_weight(config.number("weight_t"));
  fail(ErrorKind::Usage, "unknown weight family '", family, "' (expected power, constant, gaussian)");
}

SuiteOptions suite_options_from(const RunConfig& config) {
  SuiteOptions o;
  o.geom = geometry_from(config);
  o.p = config.number_or_nan("p");
  o.q = config.number_or_nan("q");
  o.b = config.number_or_nan("b");
  o.sigma = config.number("sigma");
  o.t_grid = config.list("t_grid");
  o.fit_lo = config.number("fit_lo");
  o.fit_hi = config.number("fit_hi");
  o.sweep_count = static_cast<int>(config.integer("sweep_count"));
  o.heat_items = static_cast<int>(config.integer("heat_items"));
  o.seed = static_cast<std::uint64_t>(config.integer("seed"));
  o.exploratory = config.flag("exploratory");
  o.spread_limit = config.number("spread_limit");
  o.hy_margin = config.number("hy_margin");
  if (!(o.spread_limit >= 1.0)) fail(ErrorKind::InvalidParameter, "spread_limit must be at least 1");
  if (!(o.hy_margin >= 0.0)) fail(ErrorKind::InvalidParameter, "hy_margin must be non-negative");
  if (!(o.fit_lo > 0.0 && o.fit_hi > o.fit_lo)) fail(ErrorKind::InvalidParameter, "fit window needs 0 < fit_lo < fit_hi");
  if (o.sweep_count < 2 || o.heat_items < 2) fail(ErrorKind::InvalidParameter, "sweeps need at least two items");
  for (double t : o.t_grid)
    if (!(t > 0.0)) fail(ErrorKind::InvalidParameter, "t_grid entries must be positive, got ", t);
  // exponent constraints are checked before any work starts
  if (!std::isnan(o.p) || !std::isnan(o.q)) {
    double p = std::isnan(o.p) ? 4.0 / 3.0 : o.p;
    double q = std::isnan(o.q) ? 4.0 : o.q;
    if (!(p > 1.0 && p <= 2.0)) fail(ErrorKind::InvalidExponent, "p must lie in (1, 2], got ", p);
    if (!(q > 1.0) || !std::isfinite(q)) fail(ErrorKind::InvalidExponent, "q must be finite and > 1, got ", q);
  }
  return o;
}

}  // namespace hyperharm
