#pragma once

#include <vector>

#include "hyperharm/specfun.hpp"

namespace hyperharm {

/// Gauss–Legendre nodes and weights on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

const GaussRule& gauss_legendre(int points);

/// Composite Gauss–Legendre rule over consecutive panels.
class CompositeRule {
 public:
  CompositeRule() = default;
  CompositeRule(std::vector<double> breakpoints, int points_per_panel);

  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }
  const std::vector<double>& breakpoints() const { return breakpoints_; }
  int points_per_panel() const { return points_; }
  int panel_count() const { return static_cast<int>(breakpoints_.size()) - 1; }
  std::size_t size() const { return nodes_.size(); }
  bool operator==(const CompositeRule& other) const {
    return points_ == other.points_ && breakpoints_ == other.breakpoints_;
  }

 private:
  std::vector<double> breakpoints_;
  int points_ = 0;
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

constexpr int kDefaultPointsPerPanel = 32;

/// Radial grid on [0, r_max]. bandwidth is the largest λ the panel widths resolve.
class RadialGrid {
 public:
  RadialGrid() = default;
  static RadialGrid uniform(double r_max, int panel_count, int points_per_panel = kDefaultPointsPerPanel);
  static RadialGrid for_bandwidth(double r_max, double bandwidth,
                                  int points_per_panel = kDefaultPointsPerPanel);
  /// Piecewise resolution: segment k ends at ends[k] and resolves bandwidths[k].
  static RadialGrid graded(const std::vector<double>& ends, const std::vector<double>& bandwidths,
                           int points_per_panel = kDefaultPointsPerPanel);
  static RadialGrid from_breakpoints(std::vector<double> breakpoints, int points_per_panel,
                                     double bandwidth);

  double r_max() const { return rule_.breakpoints().back(); }
  double bandwidth() const { return bandwidth_; }
  const std::vector<double>& nodes() const { return rule_.nodes(); }
  const std::vector<double>& weights() const { return rule_.weights(); }
  const CompositeRule& rule() const { return rule_; }
  std::size_t size() const { return rule_.size(); }
  bool operator==(const RadialGrid& other) const { return rule_ == other.rule_; }

 private:
  CompositeRule rule_;
  double bandwidth_ = 0.0;
};

/// Spectral grid on [0, lambda_max]: log panels on [1e-4, 1] then uniform panels.
class SpectralGrid {
 public:
  SpectralGrid() = default;
  static SpectralGrid build(double lambda_max, double r_extent,
                            int points_per_panel = kDefaultPointsPerPanel,
                            const std::vector<double>& extra_breakpoints = {});
  static SpectralGrid from_breakpoints(std::vector<double> breakpoints, int points_per_panel);

  double lambda_max() const { return rule_.breakpoints().back(); }
  const std::vector<double>& nodes() const { return rule_.nodes(); }
  const std::vector<double>& weights() const { return rule_.weights(); }
  const CompositeRule& rule() const { return rule_; }
  std::size_t size() const { return rule_.size(); }
  bool operator==(const SpectralGrid& other) const { return rule_ == other.rule_; }

 private:
  CompositeRule rule_;
};

constexpr double kSpectralFloor = 1e-4;

double default_lambda_max(const Geometry& geom);
double default_r_max(const Geometry& geom);
/// Largest panel width that keeps the phase per Gauss point below π/2.
double panel_width_for(double frequency, int points_per_panel = kDefaultPointsPerPanel);

}  // namespace hyperharm
