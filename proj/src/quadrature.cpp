#include "hyperharm/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "hyperharm/error.hpp"

namespace hyperharm {

namespace {

constexpr int kMinRadialPanels = 8;
constexpr int kMinSpectralPanels = 8;

GaussRule compute_gauss_legendre(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-16) break;
    }
    {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
    }
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

void append_uniform(std::vector<double>& bps, double end, double width, int min_panels) {
  double start = bps.back();
  int count = std::max(min_panels, static_cast<int>(std::ceil((end - start) / width - 1e-9)));
  for (int k = 1; k < count; ++k) bps.push_back(start + (end - start) * k / count);
  bps.push_back(end);
}

void check_breakpoints(const std::vector<double>& bps) {
  if (bps.size() < 2) fail(ErrorKind::InvalidParameter, "a composite rule needs at least one panel");
  for (std::size_t k = 1; k < bps.size(); ++k) {
    if (!(bps[k] > bps[k - 1]) || !std::isfinite(bps[k]))
      fail(ErrorKind::InvalidParameter, "panel breakpoints must be finite and strictly increasing");
  }
}

}  // namespace

const GaussRule& gauss_legendre(int points) {
  if (points < 1 || points > 1024)
    fail(ErrorKind::InvalidParameter, "Gauss-Legendre order out of range: ", points);
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<GaussRule>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[points];
  if (!slot) slot = std::make_unique<GaussRule>(compute_gauss_legendre(points));
  return *slot;
}

CompositeRule::CompositeRule(std::vector<double> breakpoints, int points_per_panel)
    : breakpoints_(std::move(breakpoints)), points_(points_per_panel) {
  check_breakpoints(breakpoints_);
  const GaussRule& g = gauss_legendre(points_);
  nodes_.reserve(breakpoints_.size() * points_);
  weights_.reserve(breakpoints_.size() * points_);
  for (std::size_t p = 0; p + 1 < breakpoints_.size(); ++p) {
    double a = breakpoints_[p];
    double b = breakpoints_[p + 1];
    double half = 0.5 * (b - a);
    double mid = 0.5 * (a + b);
    for (int k = 0; k < points_; ++k) {
      nodes_.push_back(mid + half * g.nodes[k]);
      weights_.push_back(half * g.weights[k]);
    }
  }
}

double panel_width_for(double frequency, int points_per_panel) {
  return 0.5 * std::numbers::pi * points_per_panel / frequency;
}

RadialGrid RadialGrid::uniform(double r_max, int panel_count, int points_per_panel) {
  if (!(r_max > 0.0) || panel_count < 1)
    fail(ErrorKind::InvalidParameter, "radial grid needs r_max > 0 and at least one panel");
  std::vector<double> bps{0.0};
  for (int k = 1; k <= panel_count; ++k) bps.push_back(r_max * k / panel_count);
  double width = r_max / panel_count;
  return from_breakpoints(std::move(bps), points_per_panel,
                          0.5 * std::numbers::pi * points_per_panel / width);
}

RadialGrid RadialGrid::for_bandwidth(double r_max, double bandwidth, int points_per_panel) {
  if (!(bandwidth > 0.0)) fail(ErrorKind::InvalidParameter, "bandwidth must be positive");
  double width = panel_width_for(bandwidth, points_per_panel);
  int count = std::max(kMinRadialPanels, static_cast<int>(std::ceil(r_max / width - 1e-9)));
  RadialGrid grid = uniform(r_max, count, points_per_panel);
  grid.bandwidth_ = bandwidth;
  return grid;
}

RadialGrid RadialGrid::graded(const std::vector<double>& ends, const std::vector<double>& bandwidths,
                              int points_per_panel) {
  if (ends.empty() || ends.size() != bandwidths.size())
    fail(ErrorKind::InvalidParameter, "graded grid needs one bandwidth per segment");
  std::vector<double> bps{0.0};
  double top = 0.0;
  for (std::size_t k = 0; k < ends.size(); ++k) {
    if (!(ends[k] > bps.back())) fail(ErrorKind::InvalidParameter, "graded grid segments must increase");
    int min_panels = k == 0 ? kMinRadialPanels : 2;
    append_uniform(bps, ends[k], panel_width_for(bandwidths[k], points_per_panel), min_panels);
    top = std::max(top, bandwidths[k]);
  }
  return from_breakpoints(std::move(bps), points_per_panel, top);
}

RadialGrid RadialGrid::from_breakpoints(std::vector<double> breakpoints, int points_per_panel,
                                        double bandwidth) {
  if (breakpoints.empty() || breakpoints.front() != 0.0)
    fail(ErrorKind::InvalidParameter, "radial grid must start at r=0");
  RadialGrid grid;
  grid.rule_ = CompositeRule(std::move(breakpoints), points_per_panel);
  grid.bandwidth_ = bandwidth;
  return grid;
}

SpectralGrid SpectralGrid::build(double lambda_max, double r_extent, int points_per_panel,
                                 const std::vector<double>& extra_breakpoints) {
  if (!(lambda_max > kSpectralFloor) || !(r_extent > 0.0))
    fail(ErrorKind::InvalidParameter, "spectral grid needs lambda_max > 1e-4 and r_extent > 0");
  std::vector<double> bps{0.0, kSpectralFloor};
  for (double b : {1e-3, 1e-2, 1e-1, 1.0}) {
    if (b < lambda_max) bps.push_back(b);
  }
  if (bps.back() < lambda_max) {
    double start = bps.back();
    if (start < 1.0) {
      bps.push_back(lambda_max);
    } else {
      append_uniform(bps, lambda_max, panel_width_for(r_extent, points_per_panel), kMinSpectralPanels);
    }
  }
  for (double b : extra_breakpoints) {
    if (b > 0.0 && b < lambda_max) bps.push_back(b);
  }
  std::sort(bps.begin(), bps.end());
  std::vector<double> merged;
  for (double b : bps) {
    if (merged.empty() || b - merged.back() > 1e-12 * std::max(1.0, b)) merged.push_back(b);
  }
  return from_breakpoints(std::move(merged), points_per_panel);
}

SpectralGrid SpectralGrid::from_breakpoints(std::vector<double> breakpoints, int points_per_panel) {
  if (breakpoints.empty() || breakpoints.front() != 0.0)
    fail(ErrorKind::InvalidParameter, "spectral grid must start at lambda=0");
  SpectralGrid grid;
  grid.rule_ = CompositeRule(std::move(breakpoints), points_per_panel);
  return grid;
}

double default_lambda_max(const Geometry& geom) { return 64.0 * (1.0 + geom.rho); }

double default_r_max(const Geometry& geom) {
  return std::clamp(30.0 / (1.0 + std::min(1.0, geom.rho)), 20.0, 40.0);
}

}  // namespace hyperharm
