// Elementary spherical functions: power series near the origin, Runge-Kutta
// continuation of the Liouville-normalized Jacobi equation, and the
// c-function expansion for large radii.

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include <boost/numeric/odeint.hpp>

#include "hyperharm/error.hpp"
#include "hyperharm/specfun.hpp"
#include "spherical_detail.hpp"

namespace hyperharm {

namespace odeint = boost::numeric::odeint;

namespace {

constexpr double kOdeTolerance = 1e-12;
constexpr double kExpansionMinFrequency = 2.0;
const cplx kI(0.0, 1.0);

// q(r) = ρ² − V(r) where u = Δ^{1/2} φ solves u'' = −(λ² + q) u.
struct Potential {
  double a1;
  double b1;
  double rho2;

  double operator()(double r) const {
    double e = std::exp(-2.0 * r);
    double om = -std::expm1(-2.0 * r);
    double op = 1.0 + e;
    double coth = op / om;
    double tanh = om / op;
    double csch2 = 4.0 * e / (om * om);
    double sech2 = 4.0 * e / (op * op);
    double A = a1 * coth + b1 * tanh;
    double dA = -a1 * csch2 + b1 * sech2;
    return rho2 - 0.5 * dA - 0.25 * A * A;
  }

  // Δ'/Δ
  double log_derivative(double r) const {
    double om = -std::expm1(-2.0 * r);
    double op = 1.0 + std::exp(-2.0 * r);
    return a1 * op / om + b1 * om / op;
  }
};

using RealState = std::array<double, 2>;
using ComplexState = std::array<double, 4>;

struct RealSystem {
  Potential q;
  double lam2;
  void operator()(const RealState& y, RealState& dy, double r) const {
    dy[0] = y[1];
    dy[1] = -(lam2 + q(r)) * y[0];
  }
};

struct ComplexSystem {
  Potential q;
  cplx lam2;
  void operator()(const ComplexState& y, ComplexState& dy, double r) const {
    double k = lam2.real() + q(r);
    double m = lam2.imag();
    dy[0] = y[2];
    dy[1] = y[3];
    dy[2] = -(k * y[0] - m * y[1]);
    dy[3] = -(k * y[1] + m * y[0]);
  }
};

Potential potential_for(const Geometry& g) {
  return Potential{2.0 * g.alpha + 1.0, 2.0 * g.beta + 1.0, g.rho * g.rho};
}

// 2F1((ρ+iλ)/2, (ρ−iλ)/2; α+1; −sinh² r) and its r-derivative.
struct LocalValue {
  cplx phi;
  cplx dphi;
};

LocalValue series_value(cplx lambda, double r, const Geometry& g) {
  if (r == 0.0) return {1.0, 0.0};
  double s = std::sinh(r);
  double c = std::cosh(r);
  double z = -s * s;
  cplx a = 0.5 * (g.rho + kI * lambda);
  cplx b = 0.5 * (g.rho - kI * lambda);
  double cc = g.alpha + 1.0;
  cplx term = 1.0;
  cplx sum = 1.0;
  cplx dsum = 0.0;
  for (int k = 0; k < 2000; ++k) {
    cplx ratio = (a + double(k)) * (b + double(k)) / ((cc + k) * (k + 1.0));
    cplx next = term * ratio;
    dsum += (k + 1.0) * next;
    term = next * z;
    sum += term;
    if (k >= 2 && std::abs(ratio * z) < 0.5 && std::abs(term) <= 1e-17 * std::abs(sum) &&
        std::abs(next) * (k + 1.0) <= 1e-17 * (std::abs(dsum) + 1e-300))
      return {sum, dsum * (-2.0 * s * c)};
  }
  fail(ErrorKind::Accuracy, "spherical series did not converge at r=", r);
}

// c_K(λ') (2cosh r)^{iλ'−ρ} 2F1((ρ−iλ')/2, (α−β+1−iλ')/2; 1−iλ'; cosh^{-2} r)
class ExpansionTerm {
 public:
  ExpansionTerm(cplx lam, double r_min, const Geometry& g) : mu_(kI * lam - g.rho) {
    log_coef_ = log_c_function(lam, g) - 0.5 * std::log(2.0 * std::numbers::pi);
    cplx a = 0.5 * (g.rho - kI * lam);
    cplx b = 0.5 * (g.alpha - g.beta + 1.0 - kI * lam);
    cplx c = 1.0 - kI * lam;
    double cr = std::cosh(r_min);
    double x = 1.0 / (cr * cr);
    cplx t = 1.0;
    double xk = 1.0;
    double biggest = 1.0;
    coeffs_.push_back(t);
    for (int k = 0; k < 4000; ++k) {
      t *= (a + double(k)) * (b + double(k)) / ((c + double(k)) * (k + 1.0));
      xk *= x;
      coeffs_.push_back(t);
      double size = std::abs(t) * xk;
      biggest = std::max(biggest, size);
      if (size < 1e-18 * biggest && k > 2) return;
    }
    fail(ErrorKind::Accuracy, "c-function expansion did not converge for lambda=", lam.real(), "+",
         lam.imag(), "i");
  }

  cplx operator()(double r) const {
    double e = std::exp(-2.0 * r);
    double log_2cosh = r + std::log1p(e);
    double x = 4.0 * e / ((1.0 + e) * (1.0 + e));
    cplx sum = 0.0;
    double xk = 1.0;
    for (const cplx& t : coeffs_) {
      cplx term = t * xk;
      sum += term;
      if (std::abs(term) < 1e-18 * std::abs(sum)) break;
      xk *= x;
    }
    return std::exp(log_coef_ + mu_ * log_2cosh) * sum;
  }

 private:
  cplx mu_;
  cplx log_coef_;
  std::vector<cplx> coeffs_;
};

double expansion_radius(double modulus) {
  double c2 = std::max(1.0, modulus / 4.0);
  return std::max(1.0, std::acosh(std::sqrt(c2)));
}

template <class State, class System, class Assign>
void integrate_outward(System sys, State state, double r0, std::span<const double> radii, double dt,
                       Assign assign) {
  std::vector<double> times;
  times.reserve(radii.size() + 1);
  times.push_back(r0);
  for (double r : radii) times.push_back(r);
  auto stepper = odeint::make_controlled(kOdeTolerance, kOdeTolerance,
                                         odeint::runge_kutta_fehlberg78<State>());
  std::size_t index = 0;
  try {
    odeint::integrate_times(
        stepper, sys, state, times.begin(), times.end(), dt,
        [&](const State& y, double) {
          if (index > 0) assign(index - 1, y);
          ++index;
        },
        odeint::max_step_checker(1000000));
  } catch (const std::exception& ex) {
    fail(ErrorKind::Accuracy, "spherical function integration failed: ", ex.what());
  }
}

}  // namespace

namespace detail {

std::vector<cplx> spherical_row(cplx lambda, std::span<const double> radii, const Geometry& g,
                                bool allow_expansion) {
  if (std::fabs(lambda.imag()) > g.rho * (1.0 + 1e-14))
    fail(ErrorKind::OutOfStrip, "|Im lambda| = ", std::fabs(lambda.imag()), " exceeds rho = ", g.rho);
  for (std::size_t j = 0; j < radii.size(); ++j) {
    if (!(radii[j] >= 0.0) || (j > 0 && radii[j] < radii[j - 1]))
      fail(ErrorKind::InvalidParameter, "spherical_row needs nonnegative increasing radii");
  }
  if (lambda.real() < 0.0) lambda = -lambda;

  std::vector<cplx> out(radii.size());
  const double modulus = std::abs(lambda);
  const bool real_lambda = lambda.imag() == 0.0;
  const double r0 = std::min(0.5, 2.0 / (modulus + g.rho));

  std::size_t j = 0;
  for (; j < radii.size() && radii[j] <= r0; ++j) out[j] = series_value(lambda, radii[j], g).phi;
  if (j == radii.size()) return out;

  std::size_t end = radii.size();
  const bool expand = allow_expansion && lambda.real() >= kExpansionMinFrequency;
  if (expand) {
    double r_switch = expansion_radius(modulus);
    end = std::lower_bound(radii.begin() + j, radii.end(), r_switch) - radii.begin();
  }

  if (end > j) {
    Potential q = potential_for(g);
    LocalValue start = series_value(lambda, r0, g);
    double half_log_w = 0.5 * log_radial_weight(r0, g);
    double sqrt_w = std::exp(half_log_w);
    cplx u = sqrt_w * start.phi;
    cplx du = sqrt_w * (start.dphi + 0.5 * q.log_derivative(r0) * start.phi);
    double freq = modulus + g.rho + 1.0;
    double scale = std::max(std::abs(u), std::abs(du) / freq);
    u /= scale;
    du /= scale;
    std::span<const double> ode_radii = radii.subspan(j, end - j);
    double dt = 0.1 / freq;
    auto unscale = [&](std::size_t k, cplx value) {
      double r = ode_radii[k];
      out[j + k] = value * scale * std::exp(-0.5 * log_radial_weight(r, g));
    };
    if (real_lambda) {
      RealSystem sys{q, lambda.real() * lambda.real()};
      RealState y{u.real(), du.real()};
      integrate_outward(sys, y, r0, ode_radii, dt,
                        [&](std::size_t k, const RealState& s) { unscale(k, cplx(s[0], 0.0)); });
    } else {
      ComplexSystem sys{q, lambda * lambda};
      ComplexState y{u.real(), u.imag(), du.real(), du.imag()};
      integrate_outward(sys, y, r0, ode_radii, dt,
                        [&](std::size_t k, const ComplexState& s) { unscale(k, cplx(s[0], s[1])); });
    }
  }

  if (end < radii.size()) {
    double r_first = radii[end];
    ExpansionTerm plus(lambda, r_first, g);
    if (real_lambda) {
      for (std::size_t k = end; k < radii.size(); ++k) out[k] = 2.0 * plus(radii[k]).real();
    } else {
      ExpansionTerm minus(-lambda, r_first, g);
      for (std::size_t k = end; k < radii.size(); ++k) out[k] = plus(radii[k]) + minus(radii[k]);
    }
  }
  return out;
}

}  // namespace detail

std::vector<cplx> spherical_row(cplx lambda, std::span<const double> radii, const Geometry& g) {
  return detail::spherical_row(lambda, radii, g, true);
}

std::vector<double> spherical_row_real(double lambda, std::span<const double> radii,
                                       const Geometry& g) {
  std::vector<cplx> row = detail::spherical_row(cplx(lambda, 0.0), radii, g, true);
  std::vector<double> out(row.size());
  for (std::size_t k = 0; k < row.size(); ++k) out[k] = row[k].real();
  return out;
}

cplx spherical_function(cplx lambda, double r, const Geometry& g) {
  if (r < 0.0) fail(ErrorKind::InvalidParameter, "spherical_function needs r >= 0, got ", r);
  double radius[1] = {r};
  return detail::spherical_row(lambda, radius, g, true)[0];
}

}  // namespace hyperharm
