#include "hyperharm/verify.hpp"

#include <algorithm>
#include <cmath>

#include "hyperharm/error.hpp"
#include "hyperharm/quadrature.hpp"

namespace hyperharm {

namespace {

constexpr double kSlack = 1e-12;

double dual(double p) { return p == 1.0 ? kInfinity : p / (p - 1.0); }

VerificationRecord make_record(std::string inequality, const std::string& item, double lhs, double rhs,
                               Parameters params) {
  VerificationRecord rec;
  rec.inequality = std::move(inequality);
  rec.item = item;
  rec.lhs = lhs;
  rec.rhs_core = rhs;
  rec.ratio = rhs > 0.0 ? lhs / rhs : kInfinity;
  rec.parameters = std::move(params);
  return rec;
}

std::string item_label(const RadialFunction& f) { return "n=" + std::to_string(f.size()); }

SpectralFunction transform_of(const RadialFunction& f, const Geometry& geom) {
  return spherical_transform(f, spectral_grid_for(f.grid()), geom);
}

// (2 Σ w g(λ) |c|⁻²)^{1/e} over the half-line nodes; e = ∞ gives the max of g^{...} supplied by caller
double full_line_norm(const SpectralGrid& sgrid, const std::vector<double>& integrand, double e) {
  const auto& w = sgrid.weights();
  double sum = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) sum += w[i] * integrand[i];
  return std::pow(2.0 * sum, 1.0 / e);
}

void check_weak(double weak_norm) {
  if (!std::isfinite(weak_norm) || !(weak_norm > 0.0))
    fail(ErrorKind::InadmissibleWeight, "weight norm must be finite and positive, got ", weak_norm);
}

void check_b(double p, double b) {
  double pd = dual(p);
  if (!(b >= p - kSlack && b <= pd + kSlack))
    fail(ErrorKind::InvalidExponent, "b must lie in [p, p'] = [", p, ", ", pd, "], got ", b);
}

void check_q(double p, double q) {
  double pd = dual(p);
  if (!(q >= p - kSlack && q <= pd + kSlack))
    fail(ErrorKind::InvalidExponent, "q must lie in [p, p'] = [", p, ", ", pd, "], got ", q);
}

}  // namespace

double median(std::vector<double> values) {
  if (values.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(values.begin(), values.end());
  std::size_t n = values.size();
  return n % 2 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

VerificationRecord check_hausdorff_young(const RadialFunction& f, double p, const Geometry& geom) {
  if (!(p >= 1.0 && p <= 2.0)) fail(ErrorKind::InvalidExponent, "Hausdorff-Young needs p in [1, 2], got ", p);
  SpectralFunction F = transform_of(f, geom);
  double lhs = spectral_norm(F, dual(p), geom);
  double rhs = lp_norm(f, p, geom);
  return make_record("hausdorff-young", item_label(f), lhs, rhs, {{"p", p}});
}

VerificationRecord check_dual_hy(const RadialFunction& f, double p, const Geometry& geom) {
  if (!(p >= 2.0) || !std::isfinite(p))
    fail(ErrorKind::InvalidExponent, "dual Hausdorff-Young needs 2 <= p < inf, got ", p);
  SpectralFunction F = transform_of(f, geom);
  double lhs = lp_norm(f, p, geom);
  double rhs = spectral_norm(F, dual(p), geom);
  return make_record("dual-hausdorff-young", item_label(f), lhs, rhs, {{"p", p}});
}

VerificationRecord check_paley(const RadialFunction& f, const WeightFunction& u, double weak_norm, double p,
                               const Geometry& geom) {
  if (!(p > 1.0 && p <= 2.0)) fail(ErrorKind::InvalidExponent, "Paley needs p in (1, 2], got ", p);
  check_weak(weak_norm);
  SpectralFunction F = transform_of(f, geom);
  const auto& lam = F.grid().nodes();
  std::vector<double> density = density_on(F.grid(), geom);
  std::vector<double> g(lam.size());
  for (std::size_t i = 0; i < lam.size(); ++i)
    g[i] = std::pow(std::abs(F.samples()[i]), p) * std::pow(u(lam[i]), 2.0 - p) * density[i];
  double lhs = full_line_norm(F.grid(), g, p);
  double rhs = std::pow(weak_norm, 2.0 / p - 1.0) * lp_norm(f, p, geom);
  return make_record("paley", item_label(f), lhs, rhs, {{"p", p}});
}

VerificationRecord check_hyp_unitary(const RadialFunction& f, const WeightFunction& u, double weak_norm,
                                     double p, double b, const Geometry& geom) {
  if (!(p > 1.0 && p <= 2.0)) fail(ErrorKind::InvalidExponent, "HYP needs p in (1, 2], got ", p);
  check_b(p, b);
  check_weak(weak_norm);
  const double pd = dual(p);
  SpectralFunction F = transform_of(f, geom);
  const auto& lam = F.grid().nodes();
  std::vector<double> density = density_on(F.grid(), geom);
  const double eu = 1.0 - b / pd;
  std::vector<double> g(lam.size());
  for (std::size_t i = 0; i < lam.size(); ++i) {
    double w = eu == 0.0 ? 1.0 : std::pow(u(lam[i]), eu);
    g[i] = std::pow(std::abs(F.samples()[i]), b) * w * density[i];
  }
  double lhs = full_line_norm(F.grid(), g, b);
  double rhs = std::pow(weak_norm, 1.0 / b - 1.0 / pd) * lp_norm(f, p, geom);
  return make_record("hyp-unitary", item_label(f), lhs, rhs, {{"p", p}, {"b", b}});
}

VerificationRecord check_multiplier(const Symbol& m, const RadialFunction& f, const ExponentPair& e,
                                    double bound, const Geometry& geom, const SpectralGridPtr& sgrid,
                                    const RadialGridPtr& out_grid) {
  if (!std::isfinite(bound))
    fail(ErrorKind::InadmissibleSymbol, "symbol ", m.describe(), " has an infinite weak-type bound");
  RadialFunction Tf = apply_multiplier(m, f, geom, sgrid ? sgrid : spectral_grid_for(f.grid()),
                                       out_grid ? out_grid : f.grid_ptr());
  double lhs = lp_norm(Tf, e.q(), geom);
  double rhs = bound * lp_norm(f, e.p(), geom);
  return make_record("multiplier", item_label(f), lhs, rhs, {{"p", e.p()}, {"q", e.q()}, {"bound", bound}});
}

VerificationRecord check_sobolev(const RadialFunction& f, double p, double q, double sigma, const Geometry& geom,
                                 bool exploratory, const SpectralGridPtr& sgrid, const RadialGridPtr& out_grid) {
  if (!(p >= 1.0 && q >= 1.0)) fail(ErrorKind::InvalidExponent, "Sobolev check needs p, q >= 1");
  const double threshold = geom.n * (1.0 / p - 1.0 / q);
  bool outside = sigma < threshold - kSlack || p == q || p > 2.0 || q < 2.0;
  if (outside && !exploratory)
    fail(ErrorKind::InadmissibleOrder, "Sobolev embedding needs sigma >= n(1/p-1/q) = ", threshold,
         " and 1 < p <= 2 <= q, got sigma=", sigma);
  RadialFunction Tf = apply_multiplier(sobolev_symbol(sigma, geom), f, geom,
                                       sgrid ? sgrid : spectral_grid_for(f.grid()),
                                       out_grid ? out_grid : f.grid_ptr());
  double lhs = lp_norm(f, q, geom);
  double rhs = lp_norm(Tf, p, geom);
  VerificationRecord rec =
      make_record("sobolev", item_label(f), lhs, rhs, {{"p", p}, {"q", q}, {"sigma", sigma}});
  rec.exploratory = outside;
  return rec;
}

VerificationRecord check_sobolev_pair(const RadialFunction& f, double p, double q, double kappa, double sigma,
                                      const Geometry& geom, const SpectralGridPtr& sgrid,
                                      const RadialGridPtr& out_grid) {
  const double threshold = geom.n * (1.0 / p - 1.0 / q);
  if (sigma - kappa < threshold - kSlack)
    fail(ErrorKind::InadmissibleOrder, "Sobolev pair needs sigma - kappa >= ", threshold);
  SpectralGridPtr sg = sgrid ? sgrid : spectral_grid_for(f.grid());
  RadialGridPtr og = out_grid ? out_grid : f.grid_ptr();
  RadialFunction low = apply_multiplier(sobolev_symbol(kappa, geom), f, geom, sg, og);
  RadialFunction high = apply_multiplier(sobolev_symbol(sigma, geom), f, geom, sg, og);
  return make_record("sobolev-pair", item_label(f), lp_norm(low, q, geom), lp_norm(high, p, geom),
                     {{"p", p}, {"q", q}, {"kappa", kappa}, {"sigma", sigma}});
}

double rho_shift(double q, const Geometry& geom) { return (2.0 / q - 1.0) * geom.rho; }

ShiftedData shifted_data(const RadialFunction& f, double q, const Geometry& geom) {
  ShiftedData out;
  out.rho_q = rho_shift(q, geom);
  out.transform = shifted_transform(f, spectral_grid_for(f.grid()), std::fabs(out.rho_q), geom);
  const auto& lam = out.transform.grid().nodes();
  out.damped.resize(lam.size());
  for (std::size_t i = 0; i < lam.size(); ++i) {
    cplx mu(lam[i], out.rho_q);
    cplx far(lam[i], out.rho_q + 2.0 * geom.rho);
    out.damped[i] = std::abs(out.transform.samples()[i]) * std::abs(mu) / std::abs(far);
  }
  return out;
}

VerificationRecord check_nonunitary_hy(const RadialFunction& f, double p, double q, const Geometry& geom) {
  if (!(p >= 1.0 && p <= 2.0)) fail(ErrorKind::InvalidExponent, "non-unitary HY needs p in [1, 2], got ", p);
  check_q(p, q);
  ShiftedData data = shifted_data(f, q, geom);
  const auto& lam = data.transform.grid().nodes();
  const double pd = dual(p);
  double lhs = 0.0;
  if (std::isinf(pd)) {
    for (double d : data.damped) lhs = std::max(lhs, d);
  } else {
    std::vector<double> g(lam.size());
    for (std::size_t i = 0; i < lam.size(); ++i)
      g[i] = std::pow(data.damped[i], pd) * std::pow(1.0 + lam[i], geom.n - 1.0);
    lhs = full_line_norm(data.transform.grid(), g, pd);
  }
  double rhs = lp_norm(f, p, geom);
  return make_record("nonunitary-hy", item_label(f), lhs, rhs, {{"p", p}, {"q", q}, {"rho_q", data.rho_q}});
}

VerificationRecord check_nonunitary_paley(const RadialFunction& f, const WeightFunction& u, double l1_norm,
                                          double p, double q, const Geometry& geom, PaleyDensity density) {
  if (!(p > 1.0 && p <= 2.0)) fail(ErrorKind::InvalidExponent, "non-unitary Paley needs p in (1, 2], got ", p);
  check_q(p, q);
  check_weak(l1_norm);
  ShiftedData data = shifted_data(f, q, geom);
  const auto& lam = data.transform.grid().nodes();
  std::vector<double> g(lam.size());
  for (std::size_t i = 0; i < lam.size(); ++i) {
    double omega = density == PaleyDensity::Plancherel
                       ? plancherel_density(lam[i], geom)
                       : lam[i] * lam[i] * std::pow(1.0 + lam[i], geom.n - 3.0);
    g[i] = std::pow(data.damped[i], p) * std::pow(u(lam[i]), 2.0 - p) * omega;
  }
  double lhs = full_line_norm(data.transform.grid(), g, p);
  double rhs = std::pow(l1_norm, 2.0 / p - 1.0) * lp_norm(f, p, geom);
  return make_record(density == PaleyDensity::Plancherel ? "nonunitary-paley" : "nonunitary-paley-model",
                     item_label(f), lhs, rhs, {{"p", p}, {"q", q}, {"rho_q", data.rho_q}});
}

VerificationRecord check_nonunitary_hyp(const RadialFunction& f, const WeightFunction& u, double l1_norm,
                                        double p, double b, double q, const Geometry& geom) {
  check_q(p, q);
  check_weak(l1_norm);
  ShiftedData data = shifted_data(f, q, geom);
  const auto& lam = data.transform.grid().nodes();
  std::vector<double> g(lam.size());
  for (std::size_t i = 0; i < lam.size(); ++i)
    g[i] = std::pow(data.damped[i], b) * hyp_weight(lam[i], u, p, b, geom);
  double lhs = full_line_norm(data.transform.grid(), g, b);
  double rhs = std::pow(l1_norm, 1.0 / b - 1.0 / dual(p)) * lp_norm(f, p, geom);
  return make_record("nonunitary-hyp", item_label(f), lhs, rhs,
                     {{"p", p}, {"b", b}, {"q", q}, {"rho_q", data.rho_q}});
}

VerificationRecord check_nonunitary_hyp_plancherel(const RadialFunction& f, const WeightFunction& u,
                                                   double l1_norm, double p, double b, double q,
                                                   const Geometry& geom) {
  if (!(p > 1.0 && p < 2.0)) fail(ErrorKind::InvalidExponent, "HYP needs 1 < p < 2, got ", p);
  check_b(p, b);
  check_q(p, q);
  check_weak(l1_norm);
  const double pd = dual(p);
  ShiftedData data = shifted_data(f, q, geom);
  const auto& lam = data.transform.grid().nodes();
  std::vector<double> g(lam.size());
  const double eu = 1.0 - b / pd;
  for (std::size_t i = 0; i < lam.size(); ++i) {
    double w = eu == 0.0 ? 1.0 : std::pow(u(lam[i]), eu);
    g[i] = std::pow(data.damped[i], b) * w * plancherel_density(lam[i], geom);
  }
  double lhs = full_line_norm(data.transform.grid(), g, b);
  double rhs = std::pow(l1_norm, 1.0 / b - 1.0 / pd) * lp_norm(f, p, geom);
  return make_record("nonunitary-hyp-plancherel", item_label(f), lhs, rhs,
                     {{"p", p}, {"b", b}, {"q", q}, {"rho_q", data.rho_q}});
}

VerificationRecord check_restriction(const RadialFunction& f, double shift, const Geometry& geom) {
  SpectralFunction F = shifted_transform(f, spectral_grid_for(f.grid()), shift, geom);
  double lhs = 0.0;
  for (const cplx& v : F.samples()) lhs = std::max(lhs, std::abs(v));
  // λ = 0 itself is not a node; add it explicitly
  const auto& r = f.grid().nodes();
  const auto& w = f.grid().weights();
  std::vector<cplx> phi = spherical_row(cplx(0.0, shift), r, geom);
  cplx at_zero = 0.0;
  for (std::size_t j = 0; j < r.size(); ++j) at_zero += w[j] * f.samples()[j] * phi[j] * radial_weight(r[j], geom);
  lhs = std::max(lhs, std::abs(at_zero));
  double rhs = lp_norm(f, 1.0, geom);
  return make_record("restriction", item_label(f), lhs, rhs, {{"shift", shift}});
}

SlopeFit fit_loglog(const std::string& name, const std::vector<double>& x, const std::vector<double>& y) {
  SlopeFit fit;
  fit.name = name;
  std::vector<double> lx;
  std::vector<double> ly;
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (x[i] > 0.0 && y[i] > 0.0 && std::isfinite(y[i])) {
      lx.push_back(std::log(x[i]));
      ly.push_back(std::log(y[i]));
    }
  }
  fit.points = lx.size();
  if (lx.size() < 2) {
    fit.slope = std::numeric_limits<double>::quiet_NaN();
    fit.intercept = fit.slope;
    return fit;
  }
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= lx.size();
  my /= ly.size();
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  return fit;
}

HeatSetup heat_setup(const CorpusItem& item, double t, double sigma, const ExponentPair& e, const Geometry& geom) {
  if (!(t > 0.0)) fail(ErrorKind::InvalidParameter, "heat time must be positive, got ", t);
  const double rho2 = geom.rho * geom.rho;
  const double floor = std::pow(geom.rho, 2.0 * sigma);
  // beyond lambda_eff the symbol is below e^{-40} of its maximum
  double lambda_eff = std::sqrt(std::max(0.0, std::pow(floor + 40.0 / t, 1.0 / sigma) - rho2));
  double lambda_max = std::max(2.0, std::min(item.recipe.bandwidth(geom), lambda_eff));

  HeatSetup setup;
  setup.symbol = heat_symbol(t, sigma, geom);
  if (e.q() == 2.0) {
    setup.plancherel = true;
    setup.f = item.f;
  } else {
    const double supp = item.recipe.support(geom);
    const double reach = (sigma >= 1.0 ? 12.0 : 10.0) * std::pow(t, 1.0 / (2.0 * sigma));
    const double r_out = std::min(40.0, supp + reach);
    setup.f = realize(item.recipe, extended_grid(item.recipe, geom, r_out, lambda_max), geom);
  }
  setup.sgrid = std::make_shared<const SpectralGrid>(SpectralGrid::build(lambda_max, setup.f.grid().r_max()));
  return setup;
}

double heat_ratio(const CorpusItem& item, double t, double sigma, const ExponentPair& e, const Geometry& geom) {
  HeatSetup setup = heat_setup(item, t, sigma, e, geom);
  const RadialFunction& f = setup.f;
  if (setup.plancherel) {
    SpectralFunction F = spherical_transform(f, setup.sgrid, geom);
    std::vector<double> density = density_on(*setup.sgrid, geom);
    const auto& lam = setup.sgrid->nodes();
    const auto& w = setup.sgrid->weights();
    double sum = 0.0;
    for (std::size_t i = 0; i < lam.size(); ++i)
      sum += w[i] * std::norm(setup.symbol(lam[i]) * F.samples()[i]) * density[i];
    return std::sqrt(sum) / lp_norm(f, e.p(), geom);
  }
  RadialFunction Tf = apply_multiplier(setup.symbol, f, geom, setup.sgrid, f.grid_ptr());
  return lp_norm(Tf, e.q(), geom) / lp_norm(f, e.p(), geom);
}

std::vector<HeatPoint> heat_decay_curve(const ExponentPair& e, double sigma, const std::vector<double>& t_grid,
                                        const Corpus& corpus, const Geometry& geom) {
  std::vector<HeatPoint> curve;
  for (double t : t_grid) {
    if (!(t > 0.0)) fail(ErrorKind::InvalidParameter, "heat curve times must be positive, got ", t);
    HeatPoint point;
    point.t = t;
    point.bound = heat_bound(t, sigma, e, geom);
    for (const CorpusItem& item : corpus.items) {
      double ratio = heat_ratio(item, t, sigma, e, geom);
      if (ratio > point.empirical) {
        point.empirical = ratio;
        point.argmax_item = item.name;
      }
    }
    curve.push_back(point);
  }
  return curve;
}

double heat_l2_ratio(double t, double sigma, double kappa, const Geometry& geom) {
  if (!(kappa > 0.0)) fail(ErrorKind::InvalidParameter, "kappa must be positive");
  std::vector<double> bps{0.0};
  for (double b : {0.125, 0.25, 0.5, 1.0, 2.0, 4.0, 10.0}) bps.push_back(b * kappa);
  SpectralGrid grid = SpectralGrid::from_breakpoints(bps, kDefaultPointsPerPanel);
  Symbol m = heat_symbol(t, sigma, geom);
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    double l = grid.nodes()[i];
    double F = std::exp(-0.5 * l * l / (kappa * kappa));
    double w = grid.weights()[i] * plancherel_density(l, geom) * F * F;
    num += w * std::norm(m(l));
    den += w;
  }
  return std::sqrt(num / den);
}

}  // namespace hyperharm
