#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "hyperharm/multiplier.hpp"
#include "hyperharm/specfun.hpp"

namespace hyperharm {

/// Lebesgue exponents with 1 < p ≤ 2 ≤ q < ∞.
class ExponentPair {
 public:
  ExponentPair(double p, double q);
  double p() const { return p_; }
  double q() const { return q_; }
  /// 1/r = 1/p − 1/q
  double inv_r() const { return 1.0 / p_ - 1.0 / q_; }
  double r() const;
  double p_dual() const { return p_ / (p_ - 1.0); }

 private:
  double p_;
  double q_;
};

struct BoundComponent {
  std::string name;
  double value = 0.0;
  double argmax = std::numeric_limits<double>::quiet_NaN();
  bool converged = true;
};

struct BoundReport {
  double value = 0.0;
  std::vector<BoundComponent> components;
  double argmax = std::numeric_limits<double>::quiet_NaN();
  bool converged = true;
  int refinements = 0;
  std::vector<std::string> notes;

  bool infinite() const { return value == std::numeric_limits<double>::infinity(); }
};

/// Positive even weight u(λ).
class WeightFunction {
 public:
  using Rule = std::function<double(double)>;

  WeightFunction() = default;
  WeightFunction(std::string family, Parameters params, Rule rule);

  double operator()(double lambda) const { return rule_(std::fabs(lambda)); }
  const std::string& family() const { return family_; }
  const Parameters& parameters() const { return params_; }
  std::string describe() const;
  WeightFunction scaled(double factor) const;

 private:
  std::string family_;
  Parameters params_;
  Rule rule_;
};

/// (1+|λ|)^{-a}
WeightFunction power_weight(double a);
WeightFunction constant_weight(double c);
/// e^{-tλ²}
WeightFunction gaussian_weight(double t);

/// Cumulative Plancherel mass ∫_0^λ |c|⁻² on the half line.
class PlancherelMeasure {
 public:
  explicit PlancherelMeasure(const Geometry& geom);
  double cumulative(double lambda) const;
  double between(double a, double b) const { return cumulative(b) - cumulative(a); }
  double density(double lambda) const { return plancherel_density(lambda, geom_); }

 private:
  double segment(double a, double b) const;

  Geometry geom_;
  double small_coefficient_ = 0.0;
  std::vector<double> breaks_;
  std::vector<double> totals_;
};

/// sup_α α·(μ{|g| > α})^{exponent} with μ the Plancherel measure on the full line.
BoundReport weak_functional(const std::function<double(double)>& abs_value, double exponent,
                            const Geometry& geom);

BoundReport weak_multiplier_bound(const Symbol& m, const ExponentPair& e, const Geometry& geom);
BoundReport spectral_two_sup_bound(const SpectralProfile& phi, const ExponentPair& e, const Geometry& geom);
BoundReport integral_spectral_bound(const SpectralProfile& phi, const ExponentPair& e, const Geometry& geom);

struct HeatBranches {
  double small_time;  // t^{-(n/2σ)/r}
  double large_time;  // t^{-(ν/2)/r} e^{-tρ^{2σ}}
};
HeatBranches heat_bound_branches(double t, double sigma, const ExponentPair& e, const Geometry& geom);
/// Small-time branch for t < 1, large-time branch for t > 1, the larger of both at t = 1.
double heat_bound(double t, double sigma, const ExponentPair& e, const Geometry& geom);

double potential_bound(double zeta, cplx sigma, const ExponentPair& e, const Geometry& geom);

struct Admissibility {
  bool admissible = false;
  std::string reason;
};
Admissibility potential_admissible(cplx z, cplx sigma, const ExponentPair& e, const Geometry& geom);

BoundReport weak_c_norm(const WeightFunction& u, const Geometry& geom);
BoundReport l1_c_norm(const WeightFunction& u, const Geometry& geom);

double hyp_weight(double lambda, const WeightFunction& u, double p, double b, const Geometry& geom);

/// sup_{s>ρ²} (s−ρ²)^{a/(2r)} (s+ζ)^{−σ/2} in closed form.
double power_sup_closed_form(double zeta, double sigma, double a, double inv_r, const Geometry& geom);
/// Maximizer s₀ of the same function.
double power_sup_location(double zeta, double sigma, double a, double inv_r, const Geometry& geom);

}  // namespace hyperharm
