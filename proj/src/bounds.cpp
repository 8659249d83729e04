#include "hyperharm/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hyperharm/error.hpp"
#include "hyperharm/quadrature.hpp"

namespace hyperharm {

ExponentPair::ExponentPair(double p, double q) : p_(p), q_(q) {
  if (!(p > 1.0 && p <= 2.0 && q >= 2.0 && std::isfinite(q)))
    fail(ErrorKind::InvalidExponent, "exponents need 1 < p <= 2 <= q < inf, got p=", p, " q=", q);
}

double ExponentPair::r() const {
  double inv = inv_r();
  return inv > 0.0 ? 1.0 / inv : kInfinity;
}

WeightFunction::WeightFunction(std::string family, Parameters params, Rule rule)
    : family_(std::move(family)), params_(std::move(params)), rule_(std::move(rule)) {}

std::string WeightFunction::describe() const {
  std::ostringstream out;
  out.precision(17);
  out << family_ << '(';
  for (std::size_t k = 0; k < params_.size(); ++k) {
    if (k) out << ',';
    out << params_[k].first << '=' << params_[k].second;
  }
  out << ')';
  return out.str();
}

WeightFunction WeightFunction::scaled(double factor) const {
  Parameters params = params_;
  params.emplace_back("scale", factor);
  Rule inner = rule_;
  return WeightFunction(family_, std::move(params), [inner, factor](double l) { return factor * inner(l); });
}

WeightFunction power_weight(double a) {
  if (!(a >= 0.0)) fail(ErrorKind::InvalidParameter, "power weight needs a >= 0, got ", a);
  return WeightFunction("power", {{"a", a}}, [a](double l) { return std::pow(1.0 + l, -a); });
}

WeightFunction constant_weight(double c) {
  if (!(c > 0.0)) fail(ErrorKind::InvalidParameter, "constant weight needs c > 0, got ", c);
  return WeightFunction("constant", {{"c", c}}, [c](double) { return c; });
}

WeightFunction gaussian_weight(double t) {
  if (!(t > 0.0)) fail(ErrorKind::InvalidParameter, "gaussian weight needs t > 0, got ", t);
  return WeightFunction("gaussian", {{"t", t}}, [t](double l) { return std::exp(-t * l * l); });
}

namespace {

constexpr double kSupTolerance = 1e-10;

double gl_segment(const std::function<double(double)>& f, double a, double b, int subpanels) {
  const GaussRule& g = gauss_legendre(kDefaultPointsPerPanel);
  double width = (b - a) / subpanels;
  double sum = 0.0;
  for (int k = 0; k < subpanels; ++k) {
    double lo = a + k * width;
    double half = 0.5 * width;
    double mid = lo + half;
    double part = 0.0;
    for (std::size_t j = 0; j < g.nodes.size(); ++j) part += g.weights[j] * f(mid + half * g.nodes[j]);
    sum += part * half;
  }
  return sum;
}

struct HalfLineIntegral {
  double value = 0.0;
  bool converged = true;
  bool diverged = false;
  std::string note;
  int segments = 0;
};

// ∫_0^∞ f over dyadic segments in both directions from λ = 1.
HalfLineIntegral half_line_integral(const std::function<double(double)>& f) {
  HalfLineIntegral out;
  double total = gl_segment(f, 0.5, 1.0, 4);
  out.segments = 1;

  // towards zero
  double prev = total;
  int growth = 0;
  double b = 0.5;
  for (int k = 0; k < 200; ++k) {
    double part = gl_segment(f, 0.5 * b, b, 2);
    ++out.segments;
    total += part;
    b *= 0.5;
    if (!std::isfinite(total)) break;
    growth = part >= prev ? growth + 1 : 0;
    prev = part;
    if (growth >= 8) {
      out.diverged = true;
      out.note = "integrand not integrable at lambda=0";
      return out;
    }
    if (part <= 1e-17 * std::fabs(total) || (part == 0.0 && k > 4)) break;
  }
  if (!std::isfinite(total)) {
    out.diverged = true;
    out.note = "integrand not integrable at lambda=0";
    return out;
  }

  // towards infinity
  prev = 0.0;
  growth = 0;
  int small = 0;
  double a = 1.0;
  for (int k = 0; k < 80; ++k) {
    int subpanels = std::min(64, 4 * (1 << std::min(k, 4)));
    double part = gl_segment(f, a, 2.0 * a, subpanels);
    ++out.segments;
    total += part;
    a *= 2.0;
    if (!std::isfinite(total)) {
      out.diverged = true;
      out.note = "diverging tail";
      return out;
    }
    growth = (k > 6 && part >= prev && part > 0.0) ? growth + 1 : 0;
    prev = part;
    if (growth >= 8) {
      out.diverged = true;
      std::ostringstream note;
      note << "diverging tail: segment contributions still growing at lambda=" << a;
      out.note = note.str();
      return out;
    }
    small = part <= 1e-15 * std::fabs(total) ? small + 1 : 0;
    if (small >= 3) break;
    if (k == 79) {
      if (part > 1e-8 * std::fabs(total)) {
        out.diverged = true;
        out.note = "diverging tail: no decay by lambda=2^80";
        return out;
      }
      out.converged = false;
      out.note = "tail truncated at lambda=2^80";
    }
  }
  out.value = total;
  return out;
}

struct PolishResult {
  double value;
  double where;
};

// Maximize g over [a, b] in log scale starting from a bracket.
PolishResult golden_log(const std::function<double(double)>& g, double a, double b) {
  const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
  double la = std::log(a);
  double lb = std::log(b);
  double x1 = lb - ratio * (lb - la);
  double x2 = la + ratio * (lb - la);
  double f1 = g(std::exp(x1));
  double f2 = g(std::exp(x2));
  for (int it = 0; it < 200 && (lb - la) > 1e-14 * (1.0 + std::fabs(la)); ++it) {
    if (f1 < f2) {
      la = x1;
      x1 = x2;
      f1 = f2;
      x2 = la + ratio * (lb - la);
      f2 = g(std::exp(x2));
    } else {
      lb = x2;
      x2 = x1;
      f2 = f1;
      x1 = lb - ratio * (lb - la);
      f1 = g(std::exp(x1));
    }
  }
  return f1 > f2 ? PolishResult{f1, std::exp(x1)} : PolishResult{f2, std::exp(x2)};
}

struct ScanResult {
  double value = 0.0;
  double where = 0.0;
  std::size_t index = 0;
  std::size_t count = 0;
};

ScanResult scan_log(const std::function<double(double)>& g, double lo, double hi, int per_decade) {
  ScanResult out;
  int count = std::max(3, static_cast<int>(std::ceil(std::log10(hi / lo) * per_decade)) + 1);
  out.count = static_cast<std::size_t>(count);
  double best = -1.0;
  for (int k = 0; k < count; ++k) {
    double x = lo * std::pow(hi / lo, static_cast<double>(k) / (count - 1));
    double v = g(x);
    if (std::isnan(v)) fail(ErrorKind::SymbolEvaluation, "profile is NaN at s - rho^2 = ", x);
    if (v > best) {
      best = v;
      out.where = x;
      out.index = static_cast<std::size_t>(k);
    }
  }
  out.value = best;
  if (std::isfinite(best) && best > 0.0) {
    double step = std::pow(hi / lo, 1.0 / (count - 1));
    double a = out.index > 0 ? out.where / step : out.where;
    double b = out.index + 1 < out.count ? out.where * step : out.where;
    if (b > a) {
      PolishResult polished = golden_log(g, a, b);
      if (polished.value > out.value) {
        out.value = polished.value;
        out.where = polished.where;
      }
    }
  }
  return out;
}

bool agree(double a, double b, double tol) {
  if (a == b) return true;
  return std::fabs(a - b) <= tol * std::max(std::fabs(a), std::fabs(b));
}

// sup over x ∈ [lo, hi] of g; the lower end is pushed towards 0 (near) or the upper end outwards (far).
BoundComponent component_sup(const std::string& name, const std::function<double(double)>& g, double lo,
                             double hi, bool extend_low, int& refinements, std::string& note) {
  int per_decade = 64;
  ScanResult current = scan_log(g, lo, hi, per_decade);
  BoundComponent comp{name, 0.0, 0.0, true};

  if (extend_low) {
    // argmax at the lower edge means the supremum may sit at ρ²⁺
    while (current.index == 0 && lo > 1e-300) {
      double next_lo = lo * 1e-10;
      ScanResult deeper = scan_log(g, next_lo, hi, per_decade);
      ++refinements;
      bool grew = !agree(deeper.value, current.value, 1e-3) && deeper.value > current.value;
      lo = next_lo;
      current = deeper;
      if (!std::isfinite(current.value) || (grew && lo < 1e-29)) {
        comp.value = kInfinity;
        comp.argmax = lo;
        comp.converged = false;
        note = name + " supremum diverges at s -> rho^2+";
        return comp;
      }
      if (!grew) break;
    }
  } else {
    while (current.index + 1 == current.count && hi < 1e40) {
      double next_hi = hi * 100.0;
      ScanResult wider = scan_log(g, lo, next_hi, per_decade);
      ++refinements;
      hi = next_hi;
      current = wider;
    }
    if (current.index + 1 == current.count || !std::isfinite(current.value)) {
      comp.value = kInfinity;
      comp.argmax = hi;
      comp.converged = false;
      note = name + " supremum still increasing at s - rho^2 = 1e40";
      return comp;
    }
  }

  for (int level = 0; level < 4; ++level) {
    per_decade *= 2;
    ScanResult finer = scan_log(g, lo, hi, per_decade);
    ++refinements;
    bool same = agree(finer.value, current.value, kSupTolerance);
    if (finer.value > current.value) current = finer;
    if (same) break;
    if (level == 3) comp.converged = false;
  }
  comp.value = current.value;
  comp.argmax = current.where;
  return comp;
}

void finish(BoundReport& report) {
  report.value = 0.0;
  report.converged = true;
  for (const BoundComponent& c : report.components) {
    if (c.value > report.value || (c.value == report.value && std::isnan(report.argmax))) {
      report.value = c.value;
      report.argmax = c.argmax;
    }
    report.converged = report.converged && c.converged;
  }
}

}  // namespace

BoundReport spectral_two_sup_bound(const SpectralProfile& phi, const ExponentPair& e, const Geometry& geom) {
  if (!(e.inv_r() > 0.0)) fail(ErrorKind::DegenerateExponent, "two-sup bound needs p < q");
  if (phi.monotonicity() == Monotonicity::Unknown && !phi.check_monotone())
    fail(ErrorKind::HypothesisViolation, "profile ", phi.describe(), " is not non-increasing on (rho^2, inf)");

  const double rho2 = geom.rho * geom.rho;
  const double near_exp = 0.5 * geom.nu * e.inv_r();
  const double far_exp = 0.5 * geom.n * e.inv_r();
  auto near = [&](double x) { return std::abs(phi(rho2 + x)) * std::pow(x, near_exp); };
  auto far = [&](double x) { return std::abs(phi(rho2 + x)) * std::pow(x, far_exp); };

  BoundReport report;
  std::string note;
  BoundComponent a = component_sup("near", near, 1e-10, 1.0, true, report.refinements, note);
  if (!note.empty()) report.notes.push_back(note);
  note.clear();
  BoundComponent b = component_sup("far", far, 1.0, 1e4, false, report.refinements, note);
  if (!note.empty()) report.notes.push_back(note);
  // argmax reported as s
  a.argmax += rho2;
  b.argmax += rho2;
  report.components = {a, b};
  finish(report);
  return report;
}

BoundReport integral_spectral_bound(const SpectralProfile& phi, const ExponentPair& e, const Geometry& geom) {
  if (!(e.inv_r() > 0.0)) fail(ErrorKind::DegenerateExponent, "integral bound needs p != q");
  const double rho2 = geom.rho * geom.rho;
  const double power = e.r();
  HalfLineIntegral integral = half_line_integral([&](double l) {
    if (l == 0.0) return 0.0;
    double v = std::abs(phi(l * l + rho2));
    return std::pow(v, power) * plancherel_density(l, geom);
  });
  BoundReport report;
  report.refinements = integral.segments;
  if (!integral.note.empty()) report.notes.push_back(integral.note);
  if (integral.diverged) {
    report.components.push_back({"integral", kInfinity, kInfinity, false});
  } else {
    report.components.push_back({"integral", std::pow(2.0 * integral.value, e.inv_r()), kInfinity,
                                 integral.converged});
  }
  finish(report);
  return report;
}

HeatBranches heat_bound_branches(double t, double sigma, const ExponentPair& e, const Geometry& geom) {
  if (!(t > 0.0) || !(sigma > 0.0))
    fail(ErrorKind::InvalidParameter, "heat bound needs t > 0 and sigma > 0, got t=", t, " sigma=", sigma);
  HeatBranches out;
  out.small_time = std::pow(t, -(geom.n / (2.0 * sigma)) * e.inv_r());
  out.large_time = std::pow(t, -(geom.nu / 2.0) * e.inv_r()) * std::exp(-t * std::pow(geom.rho, 2.0 * sigma));
  return out;
}

double heat_bound(double t, double sigma, const ExponentPair& e, const Geometry& geom) {
  HeatBranches b = heat_bound_branches(t, sigma, e, geom);
  if (t < 1.0) return b.small_time;
  if (t > 1.0) return b.large_time;
  return std::max(b.small_time, b.large_time);
}

double potential_bound(double zeta, cplx sigma, const ExponentPair& e, const Geometry& geom) {
  if (geom.n < 3.0) fail(ErrorKind::InvalidDimension, "potential bound needs n >= 3, got n=", geom.n);
  if (!(sigma.real() > geom.n * e.inv_r()))
    fail(ErrorKind::InadmissibleOrder, "potential bound needs Re sigma > n(1/p-1/q) = ", geom.n * e.inv_r(),
         ", got ", sigma.real());
  const double w = zeta + geom.rho * geom.rho;
  if (!(w > 0.0)) fail(ErrorKind::OutOfRange, "potential bound needs zeta > -rho^2, got ", zeta);
  double dim = w <= 1.0 ? geom.nu : geom.n;
  return std::pow(w, 0.5 * dim * e.inv_r() - 0.5 * sigma.real());
}

Admissibility potential_admissible(cplx z, cplx sigma, const ExponentPair& e, const Geometry& geom) {
  const double rho2 = geom.rho * geom.rho;
  const double tol = 1e-14 * std::max(1.0, rho2);
  const double lower = geom.n * e.inv_r();
  const double upper = geom.nu * e.inv_r();
  const double s = sigma.real();
  if (z.real() < -rho2 - tol) return {false, "out-of-spectrum: Re z < -rho^2"};
  if (z.real() > -rho2 + tol) {
    if (s >= lower) return {true, "interior: Re z > -rho^2 and Re sigma >= n(1/p-1/q)"};
    return {false, "order-below-threshold: Re sigma < n(1/p-1/q)"};
  }
  if (z.imag() != 0.0) {
    if (s >= lower) return {true, "boundary: Re z = -rho^2, Im z != 0 and Re sigma >= n(1/p-1/q)"};
    return {false, "order-below-threshold: Re sigma < n(1/p-1/q)"};
  }
  if (lower > upper) return {false, "vacuous-window: n(1/p-1/q) > nu(1/p-1/q) at z = -rho^2"};
  if (s >= lower && s <= upper) return {true, "limiting: z = -rho^2 and n(1/p-1/q) <= Re sigma <= nu(1/p-1/q)"};
  return {false, "outside-limiting-window: z = -rho^2 needs n(1/p-1/q) <= Re sigma <= nu(1/p-1/q)"};
}

BoundReport l1_c_norm(const WeightFunction& u, const Geometry& geom) {
  HalfLineIntegral integral = half_line_integral([&](double l) {
    if (l == 0.0) return 0.0;
    return u(l) * plancherel_density(l, geom);
  });
  BoundReport report;
  report.refinements = integral.segments;
  if (!integral.note.empty()) report.notes.push_back(integral.note);
  report.notes.push_back("weight " + u.describe());
  double value = integral.diverged ? kInfinity : 2.0 * integral.value;
  report.components.push_back({"integral", value, std::numeric_limits<double>::quiet_NaN(),
                               integral.converged && !integral.diverged});
  finish(report);
  return report;
}

double hyp_weight(double lambda, const WeightFunction& u, double p, double b, const Geometry& geom) {
  if (!(p > 1.0 && p < 2.0)) fail(ErrorKind::InvalidExponent, "HYP weight needs 1 < p < 2, got ", p);
  const double pd = p / (p - 1.0);
  const double slack = 1e-12;
  if (!(b >= p - slack && b <= pd + slack))
    fail(ErrorKind::InvalidExponent, "HYP weight needs p <= b <= p' = ", pd, ", got b=", b);
  const double l = std::fabs(lambda);
  const double e_u = 1.0 - b / pd;
  const double e_lambda = 2.0 * (pd - b) / (pd * (2.0 - p));
  const double e_bracket = geom.n - 3.0 + 2.0 * (b - p) / (pd * (2.0 - p));
  double value = std::pow(1.0 + l, e_bracket);
  if (e_u != 0.0) value *= std::pow(u(l), e_u);
  if (e_lambda != 0.0) value *= std::pow(l, e_lambda);
  return value;
}

double power_sup_location(double zeta, double sigma, double a, double inv_r, const Geometry& geom) {
  const double rho2 = geom.rho * geom.rho;
  const double w = zeta + rho2;
  if (!(w > 0.0)) fail(ErrorKind::OutOfRange, "closed-form supremum needs zeta > -rho^2");
  const double A = 0.5 * a * inv_r;
  const double B = 0.5 * sigma;
  if (!(B > A)) return kInfinity;
  return rho2 + A * w / (B - A);
}

double power_sup_closed_form(double zeta, double sigma, double a, double inv_r, const Geometry& geom) {
  const double rho2 = geom.rho * geom.rho;
  const double w = zeta + rho2;
  if (!(w > 0.0)) fail(ErrorKind::OutOfRange, "closed-form supremum needs zeta > -rho^2");
  const double A = 0.5 * a * inv_r;
  const double B = 0.5 * sigma;
  if (!(B > A)) return kInfinity;
  if (A == 0.0) return std::pow(w, -B);  // sup at s → ρ²⁺
  const double x0 = A * w / (B - A);
  return std::exp(A * std::log(x0) - B * std::log(x0 + w));
}

}  // namespace hyperharm
