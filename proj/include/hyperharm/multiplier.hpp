#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hyperharm/specfun.hpp"
#include "hyperharm/transform.hpp"

namespace hyperharm {

using Parameters = std::vector<std::pair<std::string, double>>;

enum class SymbolKind { ClosedForm, Tabulated };

/// Even multiplier m(λ); evaluation uses |λ|.
class Symbol {
 public:
  using Rule = std::function<cplx(double)>;

  Symbol() = default;
  Symbol(std::string family, Parameters params, Rule rule, SymbolKind kind = SymbolKind::ClosedForm,
         bool singular_at_zero = false);

  cplx operator()(double lambda) const { return rule_(std::fabs(lambda)); }
  const std::string& family() const { return family_; }
  const Parameters& parameters() const { return params_; }
  SymbolKind kind() const { return kind_; }
  bool singular_at_zero() const { return singular_; }
  std::string describe() const;

  /// Marks |m| as non-increasing in |λ|, which lets bound evaluators skip level-set searches.
  Symbol& set_radially_decreasing(bool value) {
    decreasing_ = value;
    return *this;
  }
  bool radially_decreasing() const { return decreasing_; }

 private:
  std::string family_;
  Parameters params_;
  Rule rule_;
  SymbolKind kind_ = SymbolKind::ClosedForm;
  bool singular_ = false;
  bool decreasing_ = false;
};

Symbol operator*(const Symbol& a, const Symbol& b);

Symbol constant_symbol(cplx value);
Symbol heat_symbol(double t, double sigma, const Geometry& geom);
Symbol potential_symbol(cplx z, cplx sigma, const Geometry& geom);
Symbol sobolev_symbol(double kappa, const Geometry& geom);
Symbol indicator_symbol(double R);
/// Power decay (1+|λ|)^{-a}.
Symbol power_decay_symbol(double a);
/// Linear interpolation between (λ_k, m_k); zero beyond the last node.
Symbol tabulated_symbol(std::vector<double> lambdas, std::vector<cplx> values);

enum class Monotonicity { Unknown, Claimed };

/// φ(s) on (ρ², ∞) for a fixed geometry.
class SpectralProfile {
 public:
  using Rule = std::function<cplx(double)>;

  SpectralProfile() = default;
  /// A claimed monotonicity flag is validated on a dense s-grid; failure throws hypothesis-violation.
  SpectralProfile(std::string family, Parameters params, Rule rule, double rho2,
                  Monotonicity flag = Monotonicity::Unknown);

  cplx operator()(double s) const { return rule_(s); }
  const std::string& family() const { return family_; }
  const Parameters& parameters() const { return params_; }
  double rho2() const { return rho2_; }
  Monotonicity monotonicity() const { return flag_; }
  std::string describe() const;

  /// True when |φ| is numerically non-increasing on the dense validation grid.
  bool check_monotone() const;

 private:
  std::string family_;
  Parameters params_;
  Rule rule_;
  double rho2_ = 0.0;
  Monotonicity flag_ = Monotonicity::Unknown;
};

SpectralProfile constant_profile(cplx value, const Geometry& geom);
SpectralProfile heat_profile(double t, double sigma, const Geometry& geom);
/// (s+ζ)^{-σ/2} with ζ ≥ -ρ².
SpectralProfile power_profile(double zeta, double sigma, const Geometry& geom);
SpectralProfile exponential_profile(double rate, const Geometry& geom);
/// Linear interpolation in s; zero beyond the last node.
SpectralProfile tabulated_profile(std::vector<double> s, std::vector<cplx> values, const Geometry& geom,
                                  Monotonicity flag = Monotonicity::Claimed);

Symbol lift_profile(const SpectralProfile& phi, const Geometry& geom);

/// m·F on the grid of F; λ nodes are strictly positive so singular-at-zero symbols are fine.
SpectralFunction apply_symbol(const Symbol& m, const SpectralFunction& F);

RadialFunction apply_multiplier(const Symbol& m, const RadialFunction& f, const Geometry& geom);
RadialFunction apply_multiplier(const Symbol& m, const RadialFunction& f, const Geometry& geom,
                                const SpectralGridPtr& sgrid, const RadialGridPtr& out_grid);

}  // namespace hyperharm
