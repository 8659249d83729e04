#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

namespace hyperharm {

using cplx = std::complex<double>;

/// Rank-one space described by its Jacobi parameters.
struct Geometry {
  double alpha = 0.5;
  double beta = -0.5;
  double rho = 1.0;
  double n = 3.0;  // 2*alpha + 2; integral for the hyperbolic presets
  int nu = 3;
  int l = 1;
  int weyl_order = 2;
  bool preset = true;

  std::string label() const;
  /// Empty for hyperbolic presets.
  std::string convention_notice() const;
  bool operator==(const Geometry& other) const = default;
};

Geometry make_hyperbolic(int n);
Geometry make_jacobi(double alpha, double beta);

cplx log_gamma(cplx z);

/// log c(λ); c(λ) = sqrt(2π) 2^{ρ-iλ} Γ(α+1) Γ(iλ) / (Γ((iλ+ρ)/2) Γ((iλ+α-β+1)/2)).
cplx log_c_function(cplx lambda, const Geometry& geom);
cplx c_function(cplx lambda, const Geometry& geom);

/// |c(λ)|^{-2}, zero at λ = 0.
double plancherel_density(double lambda, const Geometry& geom);

double radial_weight(double r, const Geometry& geom);
double log_radial_weight(double r, const Geometry& geom);

/// Elementary spherical function φ_λ(r) for |Im λ| ≤ ρ.
cplx spherical_function(cplx lambda, double r, const Geometry& geom);

/// φ_λ at every node of an increasing sequence of radii.
std::vector<cplx> spherical_row(cplx lambda, std::span<const double> radii, const Geometry& geom);

/// Real-λ version; φ_λ is real there.
std::vector<double> spherical_row_real(double lambda, std::span<const double> radii,
                                       const Geometry& geom);

}  // namespace hyperharm
