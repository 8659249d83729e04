#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <vector>

#include "hyperharm/quadrature.hpp"
#include "hyperharm/specfun.hpp"

namespace hyperharm {

using RadialGridPtr = std::shared_ptr<const RadialGrid>;
using SpectralGridPtr = std::shared_ptr<const SpectralGrid>;

/// Radial function sampled at the nodes of a radial grid.
class RadialFunction {
 public:
  RadialFunction() = default;
  RadialFunction(RadialGridPtr grid, std::vector<cplx> samples);

  static RadialFunction sample(RadialGridPtr grid, const std::function<double(double)>& f);

  const RadialGrid& grid() const { return *grid_; }
  const RadialGridPtr& grid_ptr() const { return grid_; }
  const std::vector<cplx>& samples() const { return samples_; }
  std::size_t size() const { return samples_.size(); }
  bool is_real() const;
  double peak() const;
  /// Largest |f| at nodes beyond fraction·r_max, relative to the peak.
  double tail_ratio(double fraction = 0.8) const;

  RadialFunction scaled(cplx factor) const;

 private:
  RadialGridPtr grid_;
  std::vector<cplx> samples_;
};

/// Spherical transform samples on a spectral grid, possibly at λ + i·shift.
class SpectralFunction {
 public:
  SpectralFunction() = default;
  SpectralFunction(SpectralGridPtr grid, std::vector<cplx> samples, double shift = 0.0);

  static SpectralFunction sample(SpectralGridPtr grid, const std::function<cplx(double)>& F);

  const SpectralGrid& grid() const { return *grid_; }
  const SpectralGridPtr& grid_ptr() const { return grid_; }
  const std::vector<cplx>& samples() const { return samples_; }
  double shift() const { return shift_; }
  std::size_t size() const { return samples_.size(); }

 private:
  SpectralGridPtr grid_;
  std::vector<cplx> samples_;
  double shift_ = 0.0;
};

/// Table of φ_{λ_i + i·shift}(r_j) for a pair of grids.
class SphericalBasis {
 public:
  SphericalBasis(const Geometry& geom, RadialGridPtr rgrid, SpectralGridPtr sgrid, double shift);

  const Geometry& geometry() const { return geom_; }
  const RadialGrid& radial_grid() const { return *rgrid_; }
  const SpectralGrid& spectral_grid() const { return *sgrid_; }
  double shift() const { return shift_; }
  bool is_real() const { return shift_ == 0.0; }
  std::size_t rows() const { return sgrid_->size(); }
  std::size_t cols() const { return rgrid_->size(); }
  const double* real_row(std::size_t i) const { return real_.data() + i * cols(); }
  const cplx* complex_row(std::size_t i) const { return complex_.data() + i * cols(); }
  std::size_t bytes() const;

  bool matches(const Geometry& geom, const RadialGrid& rgrid, const SpectralGrid& sgrid,
               double shift) const;

 private:
  Geometry geom_;
  RadialGridPtr rgrid_;
  SpectralGridPtr sgrid_;
  double shift_;
  std::vector<double> real_;
  std::vector<cplx> complex_;
};

/// Shared basis table; recently used tables are kept in a small process-wide cache.
std::shared_ptr<const SphericalBasis> spherical_basis(const Geometry& geom, const RadialGridPtr& rgrid,
                                                      const SpectralGridPtr& sgrid, double shift = 0.0);
void clear_basis_cache();

/// Spectral grid matched to a radial grid's support and bandwidth.
SpectralGridPtr spectral_grid_for(const RadialGrid& rgrid);
RadialGridPtr default_radial_grid(const Geometry& geom);

constexpr double kInfinity = std::numeric_limits<double>::infinity();

double lp_norm(const RadialFunction& f, double p, const Geometry& geom);

/// ((1/|W|)∫_ℝ |F|^p |c|⁻² dλ)^{1/p} = (∫_0^Λ |F|^p |c|⁻² dλ)^{1/p}; p=∞ gives the max over nodes.
double spectral_norm(const SpectralFunction& F, double p, const Geometry& geom);

SpectralFunction spherical_transform(const RadialFunction& f, const SpectralGridPtr& sgrid,
                                     const Geometry& geom);
RadialFunction inverse_transform(const SpectralFunction& F, const RadialGridPtr& rgrid,
                                 const Geometry& geom);
SpectralFunction shifted_transform(const RadialFunction& f, const SpectralGridPtr& sgrid, double shift,
                                   const Geometry& geom);

double plancherel_defect(const RadialFunction& f, const Geometry& geom);
double plancherel_defect(const RadialFunction& f, const SpectralGridPtr& sgrid, const Geometry& geom);

/// ∫ f·conj(g) Δ dr
cplx inner_product(const RadialFunction& f, const RadialFunction& g, const Geometry& geom);
/// (1/|W|)∫_ℝ F·conj(G) |c|⁻² dλ
cplx spectral_inner_product(const SpectralFunction& F, const SpectralFunction& G, const Geometry& geom);

/// Plancherel density at the nodes of a spectral grid.
std::vector<double> density_on(const SpectralGrid& sgrid, const Geometry& geom);
std::vector<double> weight_on(const RadialGrid& rgrid, const Geometry& geom);

}  // namespace hyperharm
