#pragma once

// Reference values computed without the library's quadrature or search code.

#include <cmath>
#include <functional>
#include <numbers>

namespace oracle {

// H³ heat kernel, inverse transform of e^{−t(λ²+1)} with |c(λ)|⁻² = λ²/(2π).
inline double h3_heat(double t, double r) {
  const double k = 8.0 * std::sqrt(std::numbers::pi) * std::pow(t, 1.5);
  if (r < 1e-8) return std::exp(-t) / k;
  return std::exp(-t - r * r / (4.0 * t)) * r / (k * std::sinh(r));
}

// Plancherel mass of [−L, L] on H³.
inline double h3_mass(double L) { return L * L * L / (3.0 * std::numbers::pi); }

// Largest λ with g(λ) > level, for g non-increasing on [0, ∞).
inline double crossing(const std::function<double(double)>& g, double level) {
  if (!(g(0.0) > level)) return 0.0;
  double lo = 0.0;
  double hi = 1.0;
  while (g(hi) > level) {
    hi *= 2.0;
    if (hi > 1e12) return hi;
  }
  for (int k = 0; k < 200 && hi - lo > 1e-15 * hi; ++k) {
    double mid = 0.5 * (lo + hi);
    (g(mid) > level ? lo : hi) = mid;
  }
  return lo;
}

// sup over `count` log-spaced levels of level·mass({g > level})^exponent on H³.
inline double h3_weak_sweep(const std::function<double(double)>& g, double exponent, int count = 100000,
                            double decades = 16.0) {
  const double top = g(0.0);
  double best = 0.0;
  for (int k = 0; k < count; ++k) {
    double level = top * std::pow(10.0, -decades * (1.0 - static_cast<double>(k) / (count - 1)));
    if (k == count - 1) level = top * (1.0 - 1e-12);
    double value = level * std::pow(h3_mass(crossing(g, level)), exponent);
    if (value > best) best = value;
  }
  return best;
}

// sup_{x>0} x^A (x+w)^{−B} restricted to x ∈ [lo, hi].
inline double power_sup(double A, double B, double w, double lo, double hi) {
  auto f = [&](double x) { return std::pow(x, A) * std::pow(x + w, -B); };
  double x0 = A * w / (B - A);
  if (x0 < lo) return A == 0.0 ? std::pow(lo + w, -B) : f(lo);
  if (x0 > hi) return f(hi);
  return f(x0);
}

}  // namespace oracle
