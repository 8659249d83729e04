#include "hyperharm/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hyperharm/error.hpp"

namespace hyperharm {

namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr double kPi = std::numbers::pi;

// B_{2k} / (2k (2k-1)), k = 1..10
constexpr std::array<double, 10> kStirling = {
    1.0 / 12.0,          -1.0 / 360.0,        1.0 / 1260.0,         -1.0 / 1680.0,
    1.0 / 1188.0,        -691.0 / 360360.0,   1.0 / 156.0,          -3617.0 / 122400.0,
    43867.0 / 244188.0,  -174611.0 / 125400.0};

cplx stirling(cplx w) {
  cplx inv = 1.0 / w;
  cplx inv2 = inv * inv;
  cplx tail = 0.0;
  for (int k = static_cast<int>(kStirling.size()) - 1; k >= 0; --k) tail = tail * inv2 + kStirling[k];
  return (w - 0.5) * std::log(w) - w + 0.5 * std::log(2.0 * kPi) + tail * inv;
}

// log|Γ(x+iy)| + π|y|/2 for large |y|; the O(|y|) part cancels analytically.
double reduced_log_abs_gamma(double x, double y) {
  y = std::fabs(y);
  cplx w(x, y);
  cplx inv = 1.0 / w;
  cplx inv2 = inv * inv;
  cplx tail = 0.0;
  for (int k = static_cast<int>(kStirling.size()) - 1; k >= 0; --k) tail = tail * inv2 + kStirling[k];
  return (x - 0.5) * std::log(std::abs(w)) + y * std::atan(x / y) - x + 0.5 * std::log(2.0 * kPi) +
         (tail * inv).real();
}

constexpr double kDensityAsymptotic = 64.0;

bool is_hyperbolic_pair(double alpha, double beta) {
  if (beta != -0.5) return false;
  double n = 2.0 * alpha + 2.0;
  return n >= 2.0 && n == std::floor(n);
}

}  // namespace

std::string Geometry::label() const {
  std::ostringstream out;
  if (preset) {
    out << "H" << static_cast<int>(n);
  } else {
    out.precision(17);
    out << "jacobi(alpha=" << alpha << ",beta=" << beta << ")";
  }
  return out.str();
}

std::string Geometry::convention_notice() const {
  if (preset) return {};
  std::ostringstream out;
  out.precision(17);
  out << "non-hyperbolic Jacobi parameters: dimension exponent n is taken as 2*alpha+2 = " << n;
  return out.str();
}

Geometry make_hyperbolic(int n) {
  if (n < 2) fail(ErrorKind::InvalidDimension, "hyperbolic dimension must be at least 2, got ", n);
  Geometry g;
  g.alpha = (n - 2) / 2.0;
  g.beta = -0.5;
  g.rho = (n - 1) / 2.0;
  g.n = n;
  g.preset = true;
  return g;
}

Geometry make_jacobi(double alpha, double beta) {
  if (!std::isfinite(alpha) || !std::isfinite(beta) || !(alpha >= beta) || !(beta >= -0.5) ||
      !(alpha + beta + 1.0 > 0.0)) {
    fail(ErrorKind::InvalidParameters, "Jacobi parameters need alpha >= beta >= -1/2 and alpha+beta+1 > 0, got alpha=",
         alpha, " beta=", beta);
  }
  Geometry g;
  g.alpha = alpha;
  g.beta = beta;
  g.rho = alpha + beta + 1.0;
  g.n = 2.0 * alpha + 2.0;
  g.preset = is_hyperbolic_pair(alpha, beta);
  return g;
}

cplx log_gamma(cplx z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    fail(ErrorKind::InvalidParameter, "log_gamma of a non-finite argument");
  if (z.imag() == 0.0) {
    if (z.real() <= 0.0 && z.real() == std::floor(z.real()))
      fail(ErrorKind::Pole, "log_gamma pole at z=", z.real());
    z = cplx(z.real(), 0.0);
  }
  cplx shift_sum = 0.0;
  cplx w = z;
  while (w.real() < 15.0) {
    shift_sum += std::log(w);
    w += 1.0;
  }
  return stirling(w) - shift_sum;
}

cplx log_c_function(cplx lambda, const Geometry& g) {
  if (lambda == cplx(0.0, 0.0)) fail(ErrorKind::SingularArgument, "c-function is singular at lambda=0");
  const cplx i(0.0, 1.0);
  cplx il = i * lambda;
  return 0.5 * std::log(2.0 * kPi) + (g.rho - il) * kLn2 + log_gamma(g.alpha + 1.0) + log_gamma(il) -
         log_gamma(0.5 * (il + g.rho)) - log_gamma(0.5 * (il + g.alpha - g.beta + 1.0));
}

cplx c_function(cplx lambda, const Geometry& g) { return std::exp(log_c_function(lambda, g)); }

double plancherel_density(double lambda, const Geometry& g) {
  if (lambda == 0.0) return 0.0;
  double l = std::fabs(lambda);
  if (l >= kDensityAsymptotic) {
    double h = 0.5 * l;
    double log_density = 2.0 * reduced_log_abs_gamma(0.5 * g.rho, h) +
                         2.0 * reduced_log_abs_gamma(0.5 * (g.alpha - g.beta + 1.0), h) -
                         2.0 * g.rho * kLn2 - 2.0 * std::lgamma(g.alpha + 1.0) - std::log(kPi) + std::log(l) +
                         std::log(0.5 * -std::expm1(-2.0 * kPi * l)) - std::log(2.0 * kPi);
    return std::exp(log_density);
  }
  return std::exp(-2.0 * log_c_function(cplx(std::fabs(lambda), 0.0), g).real());
}

double log_radial_weight(double r, const Geometry& g) {
  double a = 2.0 * g.alpha + 1.0;
  double b = 2.0 * g.beta + 1.0;
  if (r == 0.0) return a > 0.0 ? -HUGE_VAL : 0.0;
  double e = std::exp(-2.0 * r);
  double log_sinh2 = r > 0.5 ? r + std::log1p(-e) : std::log(2.0 * std::sinh(r));
  double log_cosh2 = r + std::log1p(e);
  double out = 0.0;
  if (a != 0.0) out += a * log_sinh2;
  if (b != 0.0) out += b * log_cosh2;
  return out;
}

double radial_weight(double r, const Geometry& g) {
  if (r < 0.0) fail(ErrorKind::InvalidParameter, "radial_weight needs r >= 0, got ", r);
  if (r == 0.0) return 2.0 * g.alpha + 1.0 > 0.0 ? 0.0 : 1.0;
  return std::exp(log_radial_weight(r, g));
}

}  // namespace hyperharm
