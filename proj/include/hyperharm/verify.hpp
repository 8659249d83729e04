#pragma once

#include <string>
#include <vector>

#include "hyperharm/bounds.hpp"
#include "hyperharm/corpus.hpp"
#include "hyperharm/multiplier.hpp"
#include "hyperharm/transform.hpp"

namespace hyperharm {

struct VerificationRecord {
  std::string inequality;
  std::string item;
  double lhs = 0.0;
  double rhs_core = 0.0;
  double ratio = 0.0;
  Parameters parameters;
  bool exploratory = false;
};

/// lhs = ((1/|W|)∫|f̂|^{p'}|c|⁻²)^{1/p'}, rhs = ‖f‖_p; p ∈ [1, 2].
VerificationRecord check_hausdorff_young(const RadialFunction& f, double p, const Geometry& geom);
/// lhs = ‖f‖_p, rhs = ((1/|W|)∫|f̂|^{p'}|c|⁻²)^{1/p'}; p ≥ 2.
VerificationRecord check_dual_hy(const RadialFunction& f, double p, const Geometry& geom);

/// lhs = (∫_ℝ|f̂|^p u^{2−p}|c|⁻²)^{1/p}, rhs = ‖u‖_{c,∞}^{2/p−1}‖f‖_p. weak_norm is ‖u‖_{c,∞}.
VerificationRecord check_paley(const RadialFunction& f, const WeightFunction& u, double weak_norm, double p,
                               const Geometry& geom);
VerificationRecord check_hyp_unitary(const RadialFunction& f, const WeightFunction& u, double weak_norm,
                                     double p, double b, const Geometry& geom);

/// lhs = ‖T_m f‖_q with T_m f on out_grid (f's grid when null); rhs = bound·‖f‖_p.
VerificationRecord check_multiplier(const Symbol& m, const RadialFunction& f, const ExponentPair& e,
                                    double bound, const Geometry& geom, const SpectralGridPtr& sgrid = nullptr,
                                    const RadialGridPtr& out_grid = nullptr);

/// lhs = ‖f‖_q, rhs = ‖(−Δ)^{σ/2} f‖_p. Below the order threshold the record is exploratory when allowed,
/// otherwise inadmissible-order is raised.
VerificationRecord check_sobolev(const RadialFunction& f, double p, double q, double sigma, const Geometry& geom,
                                 bool exploratory = false, const SpectralGridPtr& sgrid = nullptr,
                                 const RadialGridPtr& out_grid = nullptr);
/// lhs = ‖(−Δ)^{κ/2} f‖_q, rhs = ‖(−Δ)^{σ/2} f‖_p.
VerificationRecord check_sobolev_pair(const RadialFunction& f, double p, double q, double kappa, double sigma,
                                      const Geometry& geom, const SpectralGridPtr& sgrid = nullptr,
                                      const RadialGridPtr& out_grid = nullptr);

/// ρ_q = (2/q − 1)ρ
double rho_shift(double q, const Geometry& geom);

/// Spectral density choice for the non-unitary Paley form.
enum class PaleyDensity { Plancherel, Model };

/// Shifted transform magnitudes |f̂(λ+iρ_q)|·|λ+iρ_q|/|λ+iρ_q+2iρ| on the default spectral grid of f.
struct ShiftedData {
  SpectralFunction transform;
  std::vector<double> damped;
  double rho_q = 0.0;
};
ShiftedData shifted_data(const RadialFunction& f, double q, const Geometry& geom);

/// lhs = (∫_ℝ damped^{p'}(1+|λ|)^{n−1})^{1/p'}, rhs = ‖f‖_p.
VerificationRecord check_nonunitary_hy(const RadialFunction& f, double p, double q, const Geometry& geom);
/// lhs = (∫_ℝ damped^p u^{2−p} ω)^{1/p} with ω = |c|⁻² or the model λ²(1+|λ|)^{n−3};
/// rhs = ‖u‖_{L¹(|c|⁻²)}^{2/p−1}‖f‖_p.
VerificationRecord check_nonunitary_paley(const RadialFunction& f, const WeightFunction& u, double l1_norm,
                                          double p, double q, const Geometry& geom,
                                          PaleyDensity density = PaleyDensity::Plancherel);
/// lhs with hyp_weight(λ,u,p,b); rhs = ‖u‖_{L¹(|c|⁻²)}^{1/b−1/p'}‖f‖_p.
VerificationRecord check_nonunitary_hyp(const RadialFunction& f, const WeightFunction& u, double l1_norm,
                                        double p, double b, double q, const Geometry& geom);
/// Same rhs; weight u^{1−b/p'}|c|⁻² instead of the explicit λ-powers.
VerificationRecord check_nonunitary_hyp_plancherel(const RadialFunction& f, const WeightFunction& u,
                                                   double l1_norm, double p, double b, double q,
                                                   const Geometry& geom);

/// sup_λ |f̂(λ+i·shift)| against ‖f‖₁.
VerificationRecord check_restriction(const RadialFunction& f, double shift, const Geometry& geom);

struct HeatPoint {
  double t = 0.0;
  double empirical = 0.0;
  double bound = 0.0;
  std::string argmax_item;
};

struct SlopeFit {
  std::string name;
  double slope = 0.0;
  double intercept = 0.0;
  double expected = 0.0;
  std::size_t points = 0;
};

/// Least squares slope of log y against log x.
SlopeFit fit_loglog(const std::string& name, const std::vector<double>& x, const std::vector<double>& y);

/// Grids used for one heat ratio: q = 2 keeps the item's own grid and goes through Plancherel,
/// otherwise the item is resampled on a grid reaching past its support.
struct HeatSetup {
  Symbol symbol;
  RadialFunction f;
  SpectralGridPtr sgrid;
  bool plancherel = false;
};
HeatSetup heat_setup(const CorpusItem& item, double t, double sigma, const ExponentPair& e, const Geometry& geom);

/// ‖e^{−t(−Δ)^σ} f‖_q/‖f‖_p at time t; q = 2 goes through Plancherel, otherwise the output is
/// sampled on a grid extended past the support of the item.
double heat_ratio(const CorpusItem& item, double t, double sigma, const ExponentPair& e, const Geometry& geom);

/// empirical(t) = max over the corpus of heat_ratio; bound(t) from heat_bound.
std::vector<HeatPoint> heat_decay_curve(const ExponentPair& e, double sigma, const std::vector<double>& t_grid,
                                        const Corpus& corpus, const Geometry& geom);

/// L²→L² heat norm seen by the spectral test function e^{−λ²/2κ²}; exact value for H³ is
/// e^{−tρ²}(1+2tκ²)^{−3/4}.
double heat_l2_ratio(double t, double sigma, double kappa, const Geometry& geom);

double median(std::vector<double> values);

}  // namespace hyperharm
