// Plancherel mass and the weak-type functional sup_α α·μ{|g| > α}^e.

#include <algorithm>
#include <cmath>

#include "hyperharm/bounds.hpp"
#include "hyperharm/error.hpp"
#include "hyperharm/quadrature.hpp"

namespace hyperharm {

namespace {

constexpr double kMeasureFloor = 1e-8;
constexpr double kMeasureRatio = 1.25;
constexpr double kMeasureCeiling = 1e13;
constexpr int kMeasurePoints = 20;

constexpr double kWeakTolerance = 1e-7;
constexpr double kDivergenceJump = 1e-3;
constexpr double kDomainCap = 1e12;
constexpr double kLowCap = 1e-40;

}  // namespace

PlancherelMeasure::PlancherelMeasure(const Geometry& geom) : geom_(geom) {
  small_coefficient_ = plancherel_density(kMeasureFloor, geom_) / (kMeasureFloor * kMeasureFloor);
  breaks_.push_back(kMeasureFloor);
  totals_.push_back(small_coefficient_ * std::pow(kMeasureFloor, 3) / 3.0);
  while (breaks_.back() < kMeasureCeiling) {
    double a = breaks_.back();
    double b = a * kMeasureRatio;
    totals_.push_back(totals_.back() + segment(a, b));
    breaks_.push_back(b);
  }
}

double PlancherelMeasure::segment(double a, double b) const {
  const GaussRule& g = gauss_legendre(kMeasurePoints);
  double half = 0.5 * (b - a);
  double mid = 0.5 * (a + b);
  double sum = 0.0;
  for (int k = 0; k < kMeasurePoints; ++k) sum += g.weights[k] * plancherel_density(mid + half * g.nodes[k], geom_);
  return sum * half;
}

double PlancherelMeasure::cumulative(double lambda) const {
  if (!(lambda > 0.0)) return 0.0;
  if (lambda <= kMeasureFloor) return small_coefficient_ * lambda * lambda * lambda / 3.0;
  if (lambda >= breaks_.back()) {
    double total = totals_.back();
    double a = breaks_.back();
    while (a < lambda) {
      double b = std::min(lambda, a * kMeasureRatio);
      total += segment(a, b);
      a = b;
    }
    return total;
  }
  std::size_t k = static_cast<std::size_t>(std::upper_bound(breaks_.begin(), breaks_.end(), lambda) -
                                           breaks_.begin()) - 1;
  return totals_[k] + segment(breaks_[k], lambda);
}

namespace {

struct Sampling {
  std::vector<double> x;
  std::vector<double> v;
};

Sampling sample_domain(const std::function<double(double)>& g, double lo, double hi, int per_decade,
                       int uniform_count) {
  std::vector<double> x;
  double decades = std::log10(hi / lo);
  int count = std::max(2, static_cast<int>(std::ceil(decades * per_decade)) + 1);
  for (int k = 0; k < count; ++k) x.push_back(lo * std::pow(hi / lo, static_cast<double>(k) / (count - 1)));
  for (int k = 1; k <= uniform_count; ++k) x.push_back(hi * k / uniform_count);
  std::sort(x.begin(), x.end());
  x.erase(std::unique(x.begin(), x.end(), [](double a, double b) { return b - a <= 1e-14 * b; }), x.end());
  x.front() = lo;
  x.back() = hi;
  Sampling s;
  s.x = std::move(x);
  s.v.reserve(s.x.size());
  for (double l : s.x) {
    double v = g(l);
    if (std::isnan(v)) fail(ErrorKind::SymbolEvaluation, "function value is NaN at lambda=", l);
    s.v.push_back(v);
  }
  return s;
}

// Boundary of {g ≥ level} between an outside point and an inside point.
double crossing(const std::function<double(double)>& g, double level, double outside, double inside) {
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (outside + inside);
    if (mid == outside || mid == inside) break;
    if (std::fabs(inside - outside) <= 1e-15 * std::max(std::fabs(inside), std::fabs(outside))) break;
    if (g(mid) >= level) {
      inside = mid;
    } else {
      outside = mid;
    }
  }
  return 0.5 * (outside + inside);
}

// Half-line Plancherel mass of {λ ∈ (0, hi] : g(λ) ≥ level}; [0, lo] counts as inside when g(lo) ≥ level.
double level_mass(const Sampling& s, const std::function<double(double)>& g, double level,
                  const PlancherelMeasure& mu) {
  double mass = 0.0;
  std::size_t n = s.x.size();
  std::size_t k = 0;
  while (k < n) {
    if (!(s.v[k] >= level)) {
      ++k;
      continue;
    }
    std::size_t start = k;
    while (k + 1 < n && s.v[k + 1] >= level) ++k;
    double left = start == 0 ? 0.0 : crossing(g, level, s.x[start - 1], s.x[start]);
    double right = k + 1 == n ? s.x[n - 1] : crossing(g, level, s.x[k + 1], s.x[k]);
    mass += mu.between(left, right);
    ++k;
  }
  return mass;
}

struct LevelResult {
  double value = 0.0;
  double argmax = 0.0;
  double location = 0.0;  // largest λ in the maximizing level set
};

LevelResult sup_on_domain(const std::function<double(double)>& g, double exponent, double lo, double hi,
                          int per_decade, int uniform_count, const PlancherelMeasure& mu) {
  Sampling s = sample_domain(g, lo, hi, per_decade, uniform_count);
  std::vector<double> levels;
  for (double v : s.v) {
    if (std::isfinite(v) && v > 0.0) levels.push_back(v);
  }
  LevelResult best;
  if (levels.empty()) return best;
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  auto functional = [&](double level) { return level * std::pow(2.0 * level_mass(s, g, level, mu), exponent); };
  std::size_t best_index = 0;
  for (std::size_t k = 0; k < levels.size(); ++k) {
    double value = functional(levels[k]);
    if (value > best.value) {
      best.value = value;
      best.argmax = levels[k];
      best_index = k;
    }
  }
  if (best.value == 0.0) return best;

  // golden-section polish between neighbouring sample levels
  double a = best_index > 0 ? levels[best_index - 1] : levels[best_index] * 0.5;
  double b = best_index + 1 < levels.size() ? levels[best_index + 1] : levels[best_index];
  if (b > a) {
    const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
    double la = std::log(a);
    double lb = std::log(b);
    double x1 = lb - ratio * (lb - la);
    double x2 = la + ratio * (lb - la);
    double f1 = functional(std::exp(x1));
    double f2 = functional(std::exp(x2));
    for (int it = 0; it < 80 && (lb - la) > 1e-13 * (1.0 + std::fabs(la)); ++it) {
      if (f1 < f2) {
        la = x1;
        x1 = x2;
        f1 = f2;
        x2 = la + ratio * (lb - la);
        f2 = functional(std::exp(x2));
      } else {
        lb = x2;
        x2 = x1;
        f2 = f1;
        x1 = lb - ratio * (lb - la);
        f1 = functional(std::exp(x1));
      }
      double top = std::max(f1, f2);
      if (top > best.value) {
        best.value = top;
        best.argmax = std::exp(f1 > f2 ? x1 : x2);
      }
    }
  }
  for (std::size_t k = s.x.size(); k-- > 0;) {
    if (s.v[k] >= best.argmax) {
      best.location = s.x[k];
      break;
    }
  }
  return best;
}

bool close(double a, double b, double tol) {
  if (a == b) return true;
  return std::fabs(a - b) <= tol * std::max(std::fabs(a), std::fabs(b));
}

}  // namespace

BoundReport weak_functional(const std::function<double(double)>& abs_value, double exponent,
                            const Geometry& geom) {
  BoundReport report;
  PlancherelMeasure mu(geom);
  double lo = kMeasureFloor;
  double hi = 64.0 * (1.0 + geom.rho);
  int per_decade = 64;
  int uniform = 512;

  LevelResult current = sup_on_domain(abs_value, exponent, lo, hi, per_decade, uniform, mu);
  double last_change = 0.0;
  bool converged = false;

  // extend the domain upwards
  while (true) {
    double next_hi = hi * 10.0;
    LevelResult wider = sup_on_domain(abs_value, exponent, lo, next_hi, per_decade, uniform, mu);
    ++report.refinements;
    last_change = current.value > 0.0 ? std::fabs(wider.value - current.value) / wider.value
                                      : (wider.value > 0.0 ? 1.0 : 0.0);
    hi = next_hi;
    current = wider;
    if (last_change <= kWeakTolerance && (current.value == 0.0 || current.location < 0.5 * hi)) {
      converged = true;
      break;
    }
    if (last_change <= kWeakTolerance) {
      converged = true;
      break;
    }
    if (hi >= kDomainCap) break;
  }
  if (!converged && last_change > kDivergenceJump) {
    report.value = kInfinity;
    report.converged = false;
    report.components.push_back({"sup", kInfinity, current.argmax, false});
    report.notes.push_back("superlevel mass keeps growing as the spectral domain is extended");
    return report;
  }

  // refine towards λ = 0 when the maximizing level set is concentrated there
  while (current.location > 0.0 && current.location < 1e3 * lo && lo > kLowCap) {
    double next_lo = lo * 1e-4;
    LevelResult deeper = sup_on_domain(abs_value, exponent, next_lo, hi, per_decade, uniform, mu);
    ++report.refinements;
    double change = std::fabs(deeper.value - current.value) / std::max(deeper.value, 1e-300);
    lo = next_lo;
    current = deeper;
    if (change <= kWeakTolerance) break;
    if (lo <= kLowCap) {
      if (change > kDivergenceJump) {
        report.value = kInfinity;
        report.converged = false;
        report.components.push_back({"sup", kInfinity, current.argmax, false});
        report.notes.push_back("functional diverges as the level set shrinks towards lambda=0");
        return report;
      }
      converged = false;
    }
  }

  // resolution check: double the sampling density
  for (int level = 0; level < 3; ++level) {
    LevelResult finer = sup_on_domain(abs_value, exponent, lo, hi, per_decade * 2, uniform * 2, mu);
    ++report.refinements;
    bool agree = close(finer.value, current.value, kWeakTolerance);
    if (finer.value >= current.value) current = finer;
    per_decade *= 2;
    uniform *= 2;
    if (agree) break;
    if (level == 2) converged = false;
  }

  report.value = current.value;
  report.argmax = current.argmax;
  report.converged = converged;
  report.components.push_back({"sup", current.value, current.argmax, converged});
  return report;
}

BoundReport weak_multiplier_bound(const Symbol& m, const ExponentPair& e, const Geometry& geom) {
  if (e.p() == e.q())
    fail(ErrorKind::DegenerateExponent, "weak multiplier functional degenerates for p = q = ", e.p());
  BoundReport report = weak_functional([&m](double l) { return std::abs(m(l)); }, e.inv_r(), geom);
  report.notes.push_back("symbol " + m.describe());
  return report;
}

BoundReport weak_c_norm(const WeightFunction& u, const Geometry& geom) {
  BoundReport report = weak_functional([&u](double l) { return u(l); }, 1.0, geom);
  report.notes.push_back("weight " + u.describe());
  return report;
}

}  // namespace hyperharm
