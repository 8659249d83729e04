#include "hyperharm/runner.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hyperharm/corpus.hpp"
#include "hyperharm/error.hpp"
#include "hyperharm/quadrature.hpp"
#include "hyperharm/report.hpp"
#include "hyperharm/verify.hpp"

namespace hyperharm {

namespace {

class Output {
 public:
  explicit Output(const RunConfig& config) : dir_(config.get("out")) {}

  void write(RunResult& result, const std::string& name, const std::string& text) const {
    if (dir_.empty()) return;
    std::string path = dir_ + "/" + name;
    write_text(path, text);
    result.files.push_back(path);
  }

 private:
  std::string dir_;
};

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int points_per_panel(const RunConfig& config) {
  long ppp = config.integer("points_per_panel");
  if (ppp < 2 || ppp > 128) fail(ErrorKind::InvalidParameter, "points_per_panel must lie in [2, 128], got ", ppp);
  return static_cast<int>(ppp);
}

Recipe input_recipe(const RunConfig& config) {
  const std::string& kind = config.get("input");
  Recipe r;
  r.scale = config.number("s");
  if (kind == "gaussian") {
    r.shape = Shape::Gaussian;
  } else if (kind == "bump") {
    r.shape = Shape::Bump;
  } else if (kind == "heat_kernel") {
    r.shape = Shape::HeatKernel;
    r.scale = config.number("t");
  } else if (kind == "plateau") {
    r.shape = Shape::Plateau;
    r.inner = config.number("inner");
    r.outer = config.number("outer");
    if (!(r.inner > 0.0 && r.outer > r.inner)) fail(ErrorKind::InvalidParameter, "plateau needs 0 < inner < outer");
  } else {
    fail(ErrorKind::Usage, "unknown input '", kind, "' (expected gaussian, bump, heat_kernel, plateau)");
  }
  if (!(r.scale > 0.0)) fail(ErrorKind::InvalidParameter, "input scale must be positive");
  return r;
}

RadialFunction input_function(const RunConfig& config, const Geometry& geom, std::string& label) {
  const int ppp = points_per_panel(config);
  if (config.has_value("input_file")) {
    auto rows = read_two_column_csv(config.get("input_file"));
    for (std::size_t k = 1; k < rows.size(); ++k)
      if (!(rows[k].first > rows[k - 1].first))
        fail(ErrorKind::Parse, config.get("input_file"), ": radii must increase (data row ", k + 1, ")");
    double r_max = config.has_value("r_max") ? config.number("r_max") : default_r_max(geom);
    double bw = config.has_value("lambda_max") ? config.number("lambda_max") : default_lambda_max(geom);
    auto grid = std::make_shared<const RadialGrid>(RadialGrid::for_bandwidth(r_max, bw, ppp));
    label = "csv:" + config.get("input_file");
    return RadialFunction::sample(grid, [&rows](double r) {
      if (r < rows.front().first || r > rows.back().first) return 0.0;
      auto hi = std::lower_bound(rows.begin(), rows.end(), r,
                                 [](const std::pair<double, double>& row, double x) { return row.first < x; });
      if (hi == rows.begin()) return hi->second;
      auto lo = hi - 1;
      double w = (r - lo->first) / (hi->first - lo->first);
      return (1.0 - w) * lo->second + w * hi->second;
    });
  }
  Recipe recipe = input_recipe(config);
  label = recipe.describe();
  RadialGridPtr grid;
  if (config.has_value("r_max")) {
    double bw = config.has_value("lambda_max") ? config.number("lambda_max") : recipe.bandwidth(geom);
    grid = std::make_shared<const RadialGrid>(RadialGrid::for_bandwidth(config.number("r_max"), bw, ppp));
  } else {
    grid = item_grid(recipe, geom);
  }
  RadialFunction f = realize(recipe, grid, geom);
  check_support(label, f);
  return f;
}

RunResult cmd_transform(const RunConfig& config) {
  Geometry geom = geometry_from(config);
  const double shift = config.number("shift");
  if (!(shift >= 0.0)) fail(ErrorKind::InvalidShift, "shift must be nonnegative, got ", shift);
  if (shift > geom.rho) fail(ErrorKind::OutOfStrip, "shift ", shift, " exceeds rho = ", geom.rho);
  std::string label;
  RadialFunction f = input_function(config, geom, label);
  SpectralGridPtr sgrid =
      config.has_value("lambda_max")
          ? std::make_shared<const SpectralGrid>(
                SpectralGrid::build(config.number("lambda_max"), f.grid().r_max(), points_per_panel(config)))
          : spectral_grid_for(f.grid());
  SpectralFunction F = spherical_transform(f, sgrid, geom);

  RunResult result;
  Output out(config);
  out.write(result, "transform.csv", spectral_csv(F));
  Json j;
  j["command"] = "transform";
  j["geometry"] = to_json(geom);
  j["input"] = label;
  j["radial_nodes"] = f.size();
  j["r_max"] = f.grid().r_max();
  j["spectral_nodes"] = F.size();
  j["lambda_max"] = sgrid->lambda_max();
  j["lp_norms"] = {{"1", json_number(lp_norm(f, 1.0, geom))}, {"2", json_number(lp_norm(f, 2.0, geom))}};
  std::ostringstream text;
  text << "transform of " << label << " on " << geom.label() << ": " << F.size() << " spectral nodes up to "
       << format_number(sgrid->lambda_max()) << "\n";
  if (shift > 0.0) {
    SpectralFunction S = shifted_transform(f, sgrid, shift, geom);
    out.write(result, "transform_shifted.csv", spectral_csv(S));
    j["shift"] = shift;
  }
  if (config.flag("round_trip")) {
    double defect = plancherel_defect(f, sgrid, geom);
    j["plancherel_defect"] = json_number(defect);
    text << "plancherel defect " << format_number(defect) << "\n";
  }
  j["config"] = to_json(config);
  out.write(result, "transform.json", dump(j));
  j["files"] = result.files;
  result.document = j;
  result.summary = text.str();
  return result;
}

RunResult cmd_bound(const RunConfig& config) {
  Geometry geom = geometry_from(config);
  const std::string kind = config.get("bound");
  BoundReport report;
  Json extra = Json::object();
  if (kind == "weak") {
    ExponentPair e = exponents_from(config, 4.0 / 3.0, 4.0);
    Symbol m = symbol_from(config, geom);
    report = weak_multiplier_bound(m, e, geom);
    extra["symbol"] = m.describe();
  } else if (kind == "spectral" || kind == "integral") {
    ExponentPair e = exponents_from(config, 4.0 / 3.0, 4.0);
    SpectralProfile phi = profile_from(config, geom);
    report = kind == "spectral" ? spectral_two_sup_bound(phi, e, geom) : integral_spectral_bound(phi, e, geom);
    extra["profile"] = phi.describe();
  } else if (kind == "heat") {
    ExponentPair e = exponents_from(config, 4.0 / 3.0, 4.0);
    const double t = config.number("t");
    const double sigma = config.number("sigma");
    HeatBranches b = heat_bound_branches(t, sigma, e, geom);
    report.value = heat_bound(t, sigma, e, geom);
    report.components.push_back({"small_time", b.small_time, std::numeric_limits<double>::quiet_NaN(), true});
    report.components.push_back({"large_time", b.large_time, std::numeric_limits<double>::quiet_NaN(), true});
    if (t == 1.0) report.notes.push_back("t = 1: both branches reported, the larger is returned");
    extra["t"] = t;
    extra["sigma"] = sigma;
  } else if (kind == "potential") {
    ExponentPair e = exponents_from(config, 4.0 / 3.0, 4.0);
    cplx sigma(config.number("sigma"), config.number("sigma_im"));
    cplx z(config.number("z"), config.number("z_im"));
    Admissibility adm = potential_admissible(z, sigma, e, geom);
    report.value = potential_bound(config.number("zeta"), sigma, e, geom);
    report.notes.push_back("admissibility at z: " + adm.reason);
    extra["admissible"] = adm.admissible;
    extra["zeta"] = config.number("zeta");
  } else if (kind == "weak_c_norm" || kind == "l1_c_norm") {
    WeightFunction u = weight_from(config, geom);
    report = kind == "weak_c_norm" ? weak_c_norm(u, geom) : l1_c_norm(u, geom);
    extra["weight"] = u.describe();
  } else {
    fail(ErrorKind::Usage, "unknown bound '", kind,
         "' (expected weak, spectral, integral, heat, potential, weak_c_norm, l1_c_norm)");
  }

  RunResult result;
  Json j = to_json(report);
  j["command"] = "bound";
  j["bound"] = kind;
  j["geometry"] = to_json(geom);
  j["inputs"] = extra;
  j["config"] = to_json(config);
  Output(config).write(result, "bound.json", dump(j));
  j["files"] = result.files;
  result.document = j;
  result.summary = summarize(kind, report);
  return result;
}

RunResult cmd_verify(const RunConfig& config) {
  SuiteOptions options = suite_options_from(config);
  const std::string suite = config.get("suite");
  SuiteReport report = run_suite(suite, options);
  RunResult result;
  Output out(config);
  Json j = to_json(report);
  j["config"] = to_json(config);
  out.write(result, suite + "_report.json", dump(j));
  out.write(result, suite + "_records.csv", records_csv(report.records));
  if (!report.curve.empty()) out.write(result, suite + "_curve.csv", curve_csv(report.curve));
  j["files"] = result.files;
  result.document = j;
  result.summary = summarize(report);
  result.status = report.passed() ? kExitPass : kExitAssertion;
  return result;
}

RunResult cmd_heat_curve(const RunConfig& config) {
  SuiteOptions options = suite_options_from(config);
  const Geometry& geom = options.geom;
  ExponentPair e = exponents_from(config, 4.0 / 3.0, 4.0);
  std::vector<double> times = options.t_grid;
  if (times.empty()) times = log_spaced(options.fit_lo, options.fit_hi, 7);
  CorpusOptions co;
  co.s_min = 1e-4;
  co.s_max = 1.0;
  co.count = options.heat_items;
  co.seed = options.seed;
  Corpus corpus = build_corpus(geom, "gaussian_dilation", co);
  std::vector<HeatPoint> curve = heat_decay_curve(e, options.sigma, times, corpus, geom);

  std::vector<double> x, y;
  for (const auto& p : curve) {
    if (p.t < options.fit_lo * (1 - 1e-12) || p.t > options.fit_hi * (1 + 1e-12)) continue;
    x.push_back(p.t);
    y.push_back(p.empirical);
  }
  SlopeFit fit = fit_loglog("small-t", x, y);
  fit.expected = -(geom.n / (2.0 * options.sigma)) * e.inv_r();

  RunResult result;
  Output out(config);
  out.write(result, "heat_curve.csv", curve_csv(curve));
  Json points = Json::array();
  for (const auto& p : curve)
    points.push_back({{"t", json_number(p.t)},
                      {"empirical", json_number(p.empirical)},
                      {"bound", json_number(p.bound)},
                      {"argmax_item", p.argmax_item}});
  Json j;
  j["command"] = "heat-curve";
  j["geometry"] = to_json(geom);
  j["parameters"] = to_json(Parameters{{"p", e.p()}, {"q", e.q()}, {"sigma", options.sigma}});
  j["curve"] = points;
  j["slope_fit"] = to_json(fit);
  j["config"] = to_json(config);
  out.write(result, "heat_curve.json", dump(j));
  j["files"] = result.files;
  result.document = j;
  std::ostringstream text;
  text << "heat curve on " << geom.label() << ": " << curve.size() << " times, small-t slope "
       << format_number(fit.slope) << " (expected " << format_number(fit.expected) << ")\n";
  result.summary = text.str();
  return result;
}

}  // namespace

RunResult run_command(const std::string& command, const RunConfig& config) {
  if (command == "transform") return cmd_transform(config);
  if (command == "bound") return cmd_bound(config);
  if (command == "verify") return cmd_verify(config);
  if (command == "heat-curve") return cmd_heat_curve(config);
  fail(ErrorKind::Usage, "unknown command '", command, "' (expected transform, bound, verify, heat-curve)");
}

}  // namespace hyperharm
