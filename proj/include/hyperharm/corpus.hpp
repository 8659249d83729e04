#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hyperharm/specfun.hpp"
#include "hyperharm/transform.hpp"

namespace hyperharm {

enum class Shape { Gaussian, Bump, Plateau, HeatKernel, Mixture };

/// How to (re)build a corpus item on any radial grid.
struct Recipe {
  Shape shape = Shape::Gaussian;
  double scale = 1.0;  // s for gaussians and bumps, t for heat kernels
  double inner = 0.0;  // plateau: flat up to inner
  double outer = 0.0;  // plateau: zero from outer on
  // mixture terms (amplitude, centre, width); each term is symmetrized in r
  std::vector<std::array<double, 3>> terms;

  /// Radius beyond which f and f·Δ are negligible.
  double support(const Geometry& geom) const;
  /// Spectral extent beyond which f̂ is negligible.
  double bandwidth(const Geometry& geom) const;
  /// Closed-form profile; heat kernels have none.
  double operator()(double r) const;
  std::string describe() const;
};

struct CorpusItem {
  std::string name;
  Recipe recipe;
  double dilation = 1.0;
  RadialFunction f;
};

struct Corpus {
  std::string recipe;
  std::vector<CorpusItem> items;
};

struct CorpusOptions {
  std::uint64_t seed = 1729;
  double s_min = 0.1;
  double s_max = 10.0;
  int count = 9;
  int mixtures = 3;
};

/// Recipes: standard, gaussians, bumps, heat_kernels, mixtures, dilation_family (compact bumps),
/// gaussian_dilation. Dilation recipes get per-item grids; the others use the default grid.
Corpus build_corpus(const Geometry& geom, const std::string& recipe, const CorpusOptions& options = {});

/// Samples the recipe on grid; closed-form items are checked for panel resolution.
RadialFunction realize(const Recipe& recipe, const RadialGridPtr& grid, const Geometry& geom);

/// Grid on [0, support/0.8] resolving the recipe's bandwidth.
RadialGridPtr item_grid(const Recipe& recipe, const Geometry& geom);

/// Item resolution on [0, support] followed by a coarser tail out to r_out.
/// A geometric tail doubles panel widths (capped by out_bandwidth) instead of using uniform panels.
RadialGridPtr extended_grid(const Recipe& recipe, const Geometry& geom, double r_out, double out_bandwidth,
                            bool geometric_tail = false);

/// Largest trailing Legendre coefficient over all panels, relative to the peak.
double legendre_tail(const RadialFunction& f);

/// Throws corpus-construction when f leaks past 0.8·r_max or vanishes.
void check_support(const std::string& name, const RadialFunction& f);

/// Log-spaced dilation parameters, inclusive of both ends.
std::vector<double> log_spaced(double lo, double hi, int count);

}  // namespace hyperharm
