#include "hyperharm/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "hyperharm/error.hpp"
#include "hyperharm/quadrature.hpp"

namespace hyperharm {

namespace {

// sqrt(2 log 1e12): a gaussian drops below 1e-12 of its peak here (in units of s)
constexpr double kGaussianTail = 7.4338;
// sqrt(2 log 1e14), used for the weighted tail f·Δ
constexpr double kWeightedTail = 8.0276;
constexpr double kResolutionTolerance = 1e-10;
constexpr int kMaxPointsPerPanel = 128;
constexpr double kMaxDilationRadius = 60.0;

double psi(double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; }

double smooth_step(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  double a = psi(x);
  return a / (a + psi(1.0 - x));
}

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1p-53; }

std::string format_name(const std::string& family, std::initializer_list<std::pair<const char*, double>> args) {
  std::ostringstream out;
  out.precision(6);
  out << family << '(';
  bool first = true;
  for (const auto& [k, v] : args) {
    if (!first) out << ',';
    first = false;
    out << k << '=' << v;
  }
  out << ')';
  return out.str();
}

}  // namespace

double Recipe::support(const Geometry& geom) const {
  switch (shape) {
    case Shape::Gaussian:
      return std::max(kGaussianTail * scale, 2.0 * geom.rho * scale * scale + kWeightedTail * scale);
    case Shape::Bump:
      return scale;
    case Shape::Plateau:
      return outer;
    case Shape::HeatKernel:
      // h_t(r) ≲ e^{-ρr - r²/4t}
      return 2.0 * scale * (-geom.rho + std::sqrt(geom.rho * geom.rho + 35.0 / scale));
    case Shape::Mixture: {
      double r = 0.0;
      for (const auto& t : terms) r = std::max(r, t[1] + kGaussianTail * t[2]);
      return r;
    }
  }
  return 0.0;
}

double Recipe::bandwidth(const Geometry& geom) const {
  switch (shape) {
    case Shape::Gaussian:
      return 9.0 / scale;
    case Shape::Bump:
      return 370.0 / scale;
    case Shape::Plateau:
      return default_lambda_max(geom);
    case Shape::HeatKernel:
      return std::sqrt(37.0 / scale);
    case Shape::Mixture: {
      double w = kInfinity;
      for (const auto& t : terms) w = std::min(w, t[2]);
      return 9.0 / w;
    }
  }
  return 0.0;
}

double Recipe::operator()(double r) const {
  switch (shape) {
    case Shape::Gaussian:
      return std::exp(-0.5 * r * r / (scale * scale));
    case Shape::Bump: {
      double x = r / scale;
      return x < 1.0 ? std::exp(1.0 - 1.0 / (1.0 - x * x)) : 0.0;
    }
    case Shape::Plateau:
      return smooth_step((outer - r) / (outer - inner));
    case Shape::Mixture: {
      double v = 0.0;
      for (const auto& t : terms) {
        double a = (r - t[1]) / t[2];
        double b = (r + t[1]) / t[2];
        v += t[0] * (std::exp(-0.5 * a * a) + std::exp(-0.5 * b * b));
      }
      return v;
    }
    case Shape::HeatKernel:
      break;
  }
  fail(ErrorKind::CorpusConstruction, "heat kernels have no closed-form profile");
}

std::string Recipe::describe() const {
  switch (shape) {
    case Shape::Gaussian:
      return format_name("gaussian", {{"s", scale}});
    case Shape::Bump:
      return format_name("bump", {{"s", scale}});
    case Shape::Plateau:
      return format_name("plateau", {{"a", inner}, {"b", outer}});
    case Shape::HeatKernel:
      return format_name("heat_kernel", {{"t", scale}});
    case Shape::Mixture:
      return "mixture";
  }
  return "?";
}

std::vector<double> log_spaced(double lo, double hi, int count) {
  if (count < 1 || !(lo > 0.0) || !(hi >= lo)) fail(ErrorKind::InvalidParameter, "bad log-spaced range");
  std::vector<double> out;
  if (count == 1) return {lo};
  for (int k = 0; k < count; ++k) out.push_back(lo * std::pow(hi / lo, static_cast<double>(k) / (count - 1)));
  out.back() = hi;
  return out;
}

double legendre_tail(const RadialFunction& f) {
  const RadialGrid& grid = f.grid();
  const auto& bps = grid.rule().breakpoints();
  const auto& nodes = grid.nodes();
  const auto& weights = grid.weights();
  const int n = grid.rule().points_per_panel();
  const double peak = f.peak();
  if (peak == 0.0 || n < 4) return 0.0;
  double worst = 0.0;
  for (int panel = 0; panel + 1 < static_cast<int>(bps.size()); ++panel) {
    double a = bps[panel];
    double b = bps[panel + 1];
    double c_last = 0.0;
    double c_prev = 0.0;
    for (int j = 0; j < n; ++j) {
      std::size_t idx = static_cast<std::size_t>(panel) * n + j;
      double x = (2.0 * nodes[idx] - a - b) / (b - a);
      double w = weights[idx] * 2.0 / (b - a);
      // P_{n-2}(x), P_{n-1}(x) by the three-term recurrence
      double p0 = 1.0;
      double p1 = x;
      for (int k = 1; k < n - 1; ++k) {
        double p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
        p0 = p1;
        p1 = p2;
      }
      double v = f.samples()[idx].real();
      c_prev += w * v * p0;
      c_last += w * v * p1;
    }
    c_prev *= (2.0 * (n - 2) + 1.0) / 2.0;
    c_last *= (2.0 * (n - 1) + 1.0) / 2.0;
    worst = std::max(worst, std::fabs(c_prev) + std::fabs(c_last));
  }
  return worst / peak;
}

void check_support(const std::string& name, const RadialFunction& f) {
  if (f.peak() == 0.0) fail(ErrorKind::CorpusConstruction, "corpus item ", name, " vanishes identically");
  double tail = f.tail_ratio(0.8);
  if (tail >= 1e-12)
    fail(ErrorKind::CorpusConstruction, "corpus item ", name, " leaks past 0.8*r_max (tail/peak = ", tail, ")");
}

RadialFunction realize(const Recipe& recipe, const RadialGridPtr& grid, const Geometry& geom) {
  if (recipe.shape == Shape::HeatKernel) {
    const double t = recipe.scale;
    const double rho2 = geom.rho * geom.rho;
    SpectralFunction F = SpectralFunction::sample(spectral_grid_for(*grid), [&](double l) {
      return cplx(std::exp(-t * (l * l + rho2)), 0.0);
    });
    RadialFunction h = inverse_transform(F, grid, geom);
    // the kernel is real; drop rounding in the imaginary part
    std::vector<cplx> values;
    values.reserve(h.size());
    for (const cplx& v : h.samples()) values.emplace_back(v.real(), 0.0);
    return RadialFunction(grid, std::move(values));
  }
  RadialGridPtr current = grid;
  while (true) {
    RadialFunction f = RadialFunction::sample(current, [&](double r) { return recipe(r); });
    if (legendre_tail(f) <= kResolutionTolerance) return f;
    int points = current->rule().points_per_panel() * 2;
    if (points > kMaxPointsPerPanel)
      fail(ErrorKind::CorpusConstruction, "corpus item ", recipe.describe(),
           " is not resolved by the grid even at 128 points per panel");
    current = std::make_shared<const RadialGrid>(
        RadialGrid::from_breakpoints(current->rule().breakpoints(), points, current->bandwidth()));
  }
}

RadialGridPtr item_grid(const Recipe& recipe, const Geometry& geom) {
  double r_max = recipe.support(geom) / 0.8;
  return std::make_shared<const RadialGrid>(RadialGrid::for_bandwidth(r_max, recipe.bandwidth(geom)));
}

RadialGridPtr extended_grid(const Recipe& recipe, const Geometry& geom, double r_out, double out_bandwidth,
                            bool geometric_tail) {
  const double supp = recipe.support(geom);
  const double bw = recipe.bandwidth(geom);
  RadialGrid inner = RadialGrid::for_bandwidth(supp, bw);
  std::vector<double> bps = inner.rule().breakpoints();
  if (r_out > supp * (1.0 + 1e-12)) {
    const double cap = panel_width_for(out_bandwidth);
    double width = bps[bps.size() - 1] - bps[bps.size() - 2];
    double pos = supp;
    while (pos < r_out * (1.0 - 1e-12)) {
      width = geometric_tail ? std::min(2.0 * width, cap) : cap;
      double next = pos + width;
      // avoid a sliver at the end
      if (next > r_out || r_out - next < 0.25 * width) next = r_out;
      bps.push_back(next);
      pos = next;
    }
  }
  return std::make_shared<const RadialGrid>(
      RadialGrid::from_breakpoints(std::move(bps), kDefaultPointsPerPanel, std::max(bw, out_bandwidth)));
}

Corpus build_corpus(const Geometry& geom, const std::string& recipe, const CorpusOptions& options) {
  Corpus corpus;
  corpus.recipe = recipe;
  RadialGridPtr base = default_radial_grid(geom);

  auto add_default = [&](const Recipe& r, const std::string& name, double dilation) {
    RadialFunction f = realize(r, base, geom);
    check_support(name, f);
    corpus.items.push_back({name, r, dilation, std::move(f)});
  };
  auto add_gaussians = [&] {
    for (double s : {0.25, 0.5, 1.0, 2.0}) {
      Recipe r{Shape::Gaussian, s, 0.0, 0.0, {}};
      add_default(r, r.describe(), s);
    }
  };
  auto add_plateaus = [&] {
    for (auto [a, b] : {std::pair{0.5, 3.0}, std::pair{1.0, 4.0}, std::pair{2.0, 6.0}}) {
      Recipe r{Shape::Plateau, 1.0, a, b, {}};
      add_default(r, r.describe(), b);
    }
  };
  auto add_heat = [&] {
    for (double t : {0.1, 0.5, 1.0, 2.0}) {
      Recipe r{Shape::HeatKernel, t, 0.0, 0.0, {}};
      add_default(r, r.describe(), std::sqrt(t));
    }
  };
  auto add_mixtures = [&] {
    std::mt19937_64 rng(options.seed);
    for (int k = 0; k < options.mixtures; ++k) {
      Recipe r{Shape::Mixture, 1.0, 0.0, 0.0, {}};
      for (int j = 0; j < 3; ++j) {
        double amp = (0.5 + 0.5 * uniform01(rng)) * (uniform01(rng) < 0.3 ? -1.0 : 1.0);
        double centre = 3.0 * uniform01(rng);
        double width = 0.4 + 0.5 * uniform01(rng);
        r.terms.push_back({amp, centre, width});
      }
      add_default(r, "mixture-" + std::to_string(k + 1), 1.0);
    }
  };
  auto add_dilations = [&](Shape shape) {
    for (double s : log_spaced(options.s_min, options.s_max, options.count)) {
      Recipe r{shape, s, 0.0, 0.0, {}};
      if (r.support(geom) / 0.8 > kMaxDilationRadius)
        fail(ErrorKind::CorpusConstruction, "dilation ", r.describe(), " needs r_max > ", kMaxDilationRadius);
      RadialFunction f = realize(r, item_grid(r, geom), geom);
      check_support(r.describe(), f);
      corpus.items.push_back({r.describe(), r, s, std::move(f)});
    }
  };

  if (recipe == "standard") {
    add_gaussians();
    add_plateaus();
    add_heat();
    add_mixtures();
  } else if (recipe == "gaussians") {
    add_gaussians();
  } else if (recipe == "bumps") {
    add_plateaus();
  } else if (recipe == "heat_kernels") {
    add_heat();
  } else if (recipe == "mixtures") {
    add_mixtures();
  } else if (recipe == "dilation_family") {
    add_dilations(Shape::Bump);
  } else if (recipe == "gaussian_dilation") {
    add_dilations(Shape::Gaussian);
  } else {
    fail(ErrorKind::Usage, "unknown corpus recipe '", recipe,
         "' (expected standard, gaussians, bumps, heat_kernels, mixtures, dilation_family, gaussian_dilation)");
  }
  return corpus;
}

}  // namespace hyperharm
