#include "hyperharm/multiplier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "hyperharm/error.hpp"

namespace hyperharm {

namespace {

const cplx kComplexInf(std::numeric_limits<double>::infinity(), 0.0);

std::string format_call(const std::string& family, const Parameters& params) {
  std::ostringstream out;
  out.precision(17);
  out << family << "(";
  for (std::size_t k = 0; k < params.size(); ++k) {
    if (k) out << ",";
    out << params[k].first << "=" << params[k].second;
  }
  out << ")";
  return out.str();
}

template <class V>
V interpolate(const std::vector<double>& x, const std::vector<V>& y, double at, V beyond) {
  if (at > x.back()) return beyond;
  if (at <= x.front()) return y.front();
  auto it = std::upper_bound(x.begin(), x.end(), at);
  std::size_t k = static_cast<std::size_t>(it - x.begin());
  double t = (at - x[k - 1]) / (x[k] - x[k - 1]);
  return y[k - 1] + (y[k] - y[k - 1]) * t;
}

void check_table(const std::vector<double>& x, std::size_t values, const char* what) {
  if (x.size() < 2 || x.size() != values)
    fail(ErrorKind::InvalidParameter, what, " needs at least two nodes and one value per node");
  for (std::size_t k = 1; k < x.size(); ++k) {
    if (!(x[k] > x[k - 1])) fail(ErrorKind::InvalidParameter, what, " nodes must be strictly increasing");
  }
}

}  // namespace

Symbol::Symbol(std::string family, Parameters params, Rule rule, SymbolKind kind, bool singular_at_zero)
    : family_(std::move(family)),
      params_(std::move(params)),
      rule_(std::move(rule)),
      kind_(kind),
      singular_(singular_at_zero) {}

std::string Symbol::describe() const { return format_call(family_, params_); }

Symbol operator*(const Symbol& a, const Symbol& b) {
  Parameters params;
  for (const auto& p : a.parameters()) params.emplace_back("a." + p.first, p.second);
  for (const auto& p : b.parameters()) params.emplace_back("b." + p.first, p.second);
  return Symbol(a.family() + "*" + b.family(), std::move(params),
                [a, b](double l) { return a(l) * b(l); }, SymbolKind::ClosedForm,
                a.singular_at_zero() || b.singular_at_zero());
}

Symbol constant_symbol(cplx value) {
  return Symbol("constant", {{"re", value.real()}, {"im", value.imag()}},
                [value](double) { return value; });
}

Symbol heat_symbol(double t, double sigma, const Geometry& geom) {
  if (!(t > 0.0) || !(sigma > 0.0))
    fail(ErrorKind::InvalidParameter, "heat symbol needs t > 0 and sigma > 0, got t=", t, " sigma=", sigma);
  double rho2 = geom.rho * geom.rho;
  Symbol m("heat", {{"t", t}, {"sigma", sigma}}, [t, sigma, rho2](double l) {
    double base = l * l + rho2;
    double power = sigma == 1.0 ? base : std::pow(base, sigma);
    return cplx(std::exp(-t * power), 0.0);
  });
  m.set_radially_decreasing(true);
  return m;
}

Symbol potential_symbol(cplx z, cplx sigma, const Geometry& geom) {
  double rho2 = geom.rho * geom.rho;
  if (z.real() < -rho2 * (1.0 + 1e-15))
    fail(ErrorKind::OutOfSpectrum, "potential symbol needs Re z >= -rho^2 = ", -rho2, ", got ", z.real());
  if (sigma.real() < 0.0) fail(ErrorKind::InvalidParameter, "potential symbol needs Re sigma >= 0");
  bool bottom = z.imag() == 0.0 && std::fabs(z.real() + rho2) <= 1e-15 * std::max(1.0, rho2);
  bool singular = bottom && sigma.real() > 0.0;
  if (bottom) z = cplx(-rho2, 0.0);
  Symbol m("potential", {{"z_re", z.real()}, {"z_im", z.imag()}, {"sigma_re", sigma.real()},
                         {"sigma_im", sigma.imag()}},
           [z, sigma, rho2, singular](double l) {
             cplx base = l * l + rho2 + z;
             if (singular && l == 0.0) return kComplexInf;
             if (base == cplx(0.0, 0.0)) return sigma == cplx(0.0, 0.0) ? cplx(1.0, 0.0) : kComplexInf;
             return std::exp(-0.5 * sigma * std::log(base));
           },
           SymbolKind::ClosedForm, singular);
  m.set_radially_decreasing(z.imag() == 0.0 && sigma.imag() == 0.0);
  return m;
}

Symbol sobolev_symbol(double kappa, const Geometry& geom) {
  double rho2 = geom.rho * geom.rho;
  Symbol m("sobolev", {{"kappa", kappa}},
           [kappa, rho2](double l) { return cplx(std::pow(l * l + rho2, 0.5 * kappa), 0.0); });
  m.set_radially_decreasing(kappa <= 0.0);
  return m;
}

Symbol indicator_symbol(double R) {
  if (!(R > 0.0)) fail(ErrorKind::InvalidParameter, "indicator symbol needs R > 0, got ", R);
  Symbol m("indicator", {{"R", R}}, [R](double l) { return cplx(l <= R ? 1.0 : 0.0, 0.0); });
  m.set_radially_decreasing(true);
  return m;
}

Symbol power_decay_symbol(double a) {
  if (!(a >= 0.0)) fail(ErrorKind::InvalidParameter, "power decay needs a >= 0, got ", a);
  Symbol m("power", {{"a", a}}, [a](double l) { return cplx(std::pow(1.0 + l, -a), 0.0); });
  m.set_radially_decreasing(true);
  return m;
}

Symbol tabulated_symbol(std::vector<double> lambdas, std::vector<cplx> values) {
  check_table(lambdas, values.size(), "tabulated symbol");
  if (lambdas.front() < 0.0) fail(ErrorKind::InvalidParameter, "tabulated symbol nodes must be >= 0");
  for (const cplx& v : values) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      fail(ErrorKind::SymbolEvaluation, "tabulated symbol has a non-finite value");
  }
  bool decreasing = true;
  for (std::size_t k = 1; k < values.size(); ++k) decreasing = decreasing && std::abs(values[k]) <= std::abs(values[k - 1]);
  Parameters params{{"nodes", static_cast<double>(lambdas.size())}, {"lambda_last", lambdas.back()}};
  Symbol m("tabulated", std::move(params),
           [x = std::move(lambdas), y = std::move(values)](double l) {
             return interpolate(x, y, l, cplx(0.0, 0.0));
           },
           SymbolKind::Tabulated);
  m.set_radially_decreasing(decreasing);
  return m;
}

SpectralProfile::SpectralProfile(std::string family, Parameters params, Rule rule, double rho2,
                                 Monotonicity flag)
    : family_(std::move(family)), params_(std::move(params)), rule_(std::move(rule)), rho2_(rho2), flag_(flag) {
  if (flag_ == Monotonicity::Claimed && !check_monotone())
    fail(ErrorKind::HypothesisViolation, "profile ", describe(),
         " is claimed monotone but |phi| increases on the validation grid");
}

std::string SpectralProfile::describe() const { return format_call(family_, params_); }

bool SpectralProfile::check_monotone() const {
  double previous = std::numeric_limits<double>::infinity();
  for (int k = 0; k <= 2000; ++k) {
    double x = std::pow(10.0, -10.0 + 18.0 * k / 2000.0);
    double v = std::abs(rule_(rho2_ + x));
    if (std::isnan(v)) return false;
    if (v > previous * (1.0 + 1e-12) + 1e-300) return false;
    previous = v;
  }
  return true;
}

SpectralProfile constant_profile(cplx value, const Geometry& geom) {
  return SpectralProfile("constant", {{"re", value.real()}, {"im", value.imag()}},
                         [value](double) { return value; }, geom.rho * geom.rho, Monotonicity::Claimed);
}

SpectralProfile heat_profile(double t, double sigma, const Geometry& geom) {
  if (!(t > 0.0) || !(sigma > 0.0))
    fail(ErrorKind::InvalidParameter, "heat profile needs t > 0 and sigma > 0");
  return SpectralProfile("heat", {{"t", t}, {"sigma", sigma}},
                         [t, sigma](double s) { return cplx(std::exp(-t * std::pow(s, sigma)), 0.0); },
                         geom.rho * geom.rho, Monotonicity::Claimed);
}

SpectralProfile power_profile(double zeta, double sigma, const Geometry& geom) {
  double rho2 = geom.rho * geom.rho;
  if (zeta < -rho2 * (1.0 + 1e-15))
    fail(ErrorKind::OutOfRange, "power profile needs zeta >= -rho^2, got ", zeta);
  if (!(sigma >= 0.0)) fail(ErrorKind::InvalidParameter, "power profile needs sigma >= 0");
  return SpectralProfile("power", {{"zeta", zeta}, {"sigma", sigma}},
                         [zeta, sigma](double s) { return cplx(std::pow(s + zeta, -0.5 * sigma), 0.0); },
                         rho2, Monotonicity::Claimed);
}

SpectralProfile exponential_profile(double rate, const Geometry& geom) {
  if (!(rate > 0.0)) fail(ErrorKind::InvalidParameter, "exponential profile needs rate > 0");
  return SpectralProfile("exponential", {{"rate", rate}},
                         [rate](double s) { return cplx(std::exp(-rate * s), 0.0); }, geom.rho * geom.rho,
                         Monotonicity::Claimed);
}

SpectralProfile tabulated_profile(std::vector<double> s, std::vector<cplx> values, const Geometry& geom,
                                  Monotonicity flag) {
  check_table(s, values.size(), "tabulated profile");
  for (const cplx& v : values) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      fail(ErrorKind::InvalidParameter, "tabulated profile has a non-finite value");
  }
  double rho2 = geom.rho * geom.rho;
  if (flag == Monotonicity::Claimed) {
    for (std::size_t k = 1; k < values.size(); ++k) {
      if (s[k] > rho2 && std::abs(values[k]) > std::abs(values[k - 1]) * (1.0 + 1e-12))
        fail(ErrorKind::HypothesisViolation, "tabulated profile is not non-increasing in |phi| near s=", s[k]);
    }
  }
  Parameters params{{"nodes", static_cast<double>(s.size())}, {"s_last", s.back()}};
  return SpectralProfile("tabulated", std::move(params),
                         [x = std::move(s), y = std::move(values)](double at) {
                           return interpolate(x, y, at, cplx(0.0, 0.0));
                         },
                         rho2, flag);
}

Symbol lift_profile(const SpectralProfile& phi, const Geometry& geom) {
  double rho2 = geom.rho * geom.rho;
  double eps = std::max(1.0, rho2);
  cplx near = phi(rho2 + 1e-12 * eps);
  cplx mid = phi(rho2 + 1e-9 * eps);
  cplx at = phi(rho2);
  bool finite = std::isfinite(std::abs(near)) && std::isfinite(std::abs(mid)) &&
                std::abs(near - mid) <= 1e-6 * (1.0 + std::abs(mid));
  cplx limit = finite ? (std::isfinite(std::abs(at)) ? at : near) : kComplexInf;
  Parameters params = phi.parameters();
  Symbol m("lift:" + phi.family(), std::move(params),
           [phi, rho2, limit](double l) { return l == 0.0 ? limit : phi(l * l + rho2); },
           SymbolKind::ClosedForm, !finite);
  m.set_radially_decreasing(phi.monotonicity() == Monotonicity::Claimed);
  return m;
}

SpectralFunction apply_symbol(const Symbol& m, const SpectralFunction& F) {
  if (F.shift() != 0.0) fail(ErrorKind::InvalidShift, "multipliers act on unshifted transforms");
  const auto& l = F.grid().nodes();
  const auto& w = F.grid().weights();
  std::vector<cplx> out(F.size());
  for (std::size_t i = 0; i < l.size(); ++i) {
    cplx v = m(l[i]);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      if (w[i] > 0.0)
        fail(ErrorKind::SymbolEvaluation, "symbol ", m.describe(), " is not finite at lambda=", l[i]);
      v = 0.0;
    }
    out[i] = v * F.samples()[i];
  }
  return SpectralFunction(F.grid_ptr(), std::move(out), 0.0);
}

RadialFunction apply_multiplier(const Symbol& m, const RadialFunction& f, const Geometry& geom,
                                const SpectralGridPtr& sgrid, const RadialGridPtr& out_grid) {
  SpectralFunction F = spherical_transform(f, sgrid, geom);
  return inverse_transform(apply_symbol(m, F), out_grid, geom);
}

RadialFunction apply_multiplier(const Symbol& m, const RadialFunction& f, const Geometry& geom) {
  return apply_multiplier(m, f, geom, spectral_grid_for(f.grid()), f.grid_ptr());
}

}  // namespace hyperharm
