#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "hyperharm/error.hpp"
#include "hyperharm/specfun.hpp"

using namespace hyperharm;

namespace {

struct LogGammaCase {
  double re, im, value_re, value_im;
};
// mpmath at 40 digits, see tools/oracle_specfun.py
const LogGammaCase kLogGamma[] = {
#include "loggamma_cases.inc"
};

struct PhiCase {
  double alpha, beta, lambda_re, lambda_im, r, value_re, value_im;
};
// 2F1((ρ+iλ)/2, (ρ−iλ)/2; α+1; −sinh² r) at 40 digits
const PhiCase kPhi[] = {
#include "phi_cases.inc"
};

ErrorKind kind_of(auto&& call) {
  try {
    call();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Usage;
}

}  // namespace

TEST_CASE("hyperbolic presets") {
  CHECK(make_hyperbolic(3).rho == 1.0);
  CHECK(make_hyperbolic(2).rho == 0.5);
  CHECK(make_hyperbolic(5).rho == 2.0);
  CHECK(make_hyperbolic(3).convention_notice().empty());
  CHECK(kind_of([] { make_hyperbolic(1); }) == ErrorKind::InvalidDimension);
}

TEST_CASE("jacobi parameters") {
  Geometry g = make_jacobi(0.5, -0.5);
  CHECK(g.rho == 1.0);
  CHECK(g.alpha == make_hyperbolic(3).alpha);
  CHECK(g.beta == make_hyperbolic(3).beta);
  CHECK(make_jacobi(0.0, -0.5).rho == 0.5);
  CHECK(kind_of([] { make_jacobi(-1.0, 0.0); }) == ErrorKind::InvalidParameters);
  CHECK(kind_of([] { make_jacobi(0.0, 0.5); }) == ErrorKind::InvalidParameters);
  CHECK_FALSE(make_jacobi(1.3, 0.2).convention_notice().empty());
}

TEST_CASE("log gamma") {
  CHECK(std::abs(log_gamma(1.0)) < 1e-15);
  CHECK(std::abs(log_gamma(0.5) - 0.5 * std::log(std::numbers::pi)) < 1e-14);
  for (const auto& c : kLogGamma) {
    cplx got = log_gamma(cplx(c.re, c.im));
    cplx want(c.value_re, c.value_im);
    CAPTURE(c.re);
    CAPTURE(c.im);
    CHECK(std::abs(got - want) <= 1e-12 * std::max(1.0, std::abs(want)));
  }
  CHECK(kind_of([] { log_gamma(0.0); }) == ErrorKind::Pole);
  CHECK(kind_of([] { log_gamma(-3.0); }) == ErrorKind::Pole);
}

TEST_CASE("c-function on H3") {
  Geometry g = make_hyperbolic(3);
  // closed form for H³: |c(λ)|⁻² = λ²/(2π)
  for (double lambda = 1e-2; lambda <= 1e2; lambda *= 1.37) {
    double ratio = plancherel_density(lambda, g) / (lambda * lambda);
    CHECK(ratio == doctest::Approx(1.0 / (2.0 * std::numbers::pi)).epsilon(1e-10));
  }
  for (double lambda : {0.3, 2.0, 17.0}) {
    cplx a = c_function(lambda, g);
    cplx b = c_function(-lambda, g);
    CHECK(std::abs(b - std::conj(a)) < 1e-12 * std::abs(a));
  }
  CHECK(kind_of([&] { c_function(0.0, g); }) == ErrorKind::SingularArgument);
  CHECK(plancherel_density(0.0, g) == 0.0);
  CHECK(plancherel_density(1e-6, make_hyperbolic(4)) < 1e-10);
}

TEST_CASE("density bracket and upper bound") {
  for (int n = 2; n <= 6; ++n) {
    Geometry g = make_hyperbolic(n);
    double lo = INFINITY;
    double hi = 0.0;
    double upper = 0.0;
    for (double lambda = 1e-3; lambda <= 1e3; lambda *= 1.1) {
      double d = plancherel_density(lambda, g);
      double model = lambda * lambda * std::pow(1.0 + lambda, n - 3);
      lo = std::min(lo, d / model);
      hi = std::max(hi, d / model);
      double hr = std::pow(lambda, g.nu - g.l) * std::pow(1.0 + lambda, n - g.nu);
      upper = std::max(upper, d / hr);
    }
    CAPTURE(n);
    CHECK(lo > 0.0);
    CHECK(hi / lo < 1e3);
    CHECK(std::isfinite(upper));
  }
}

TEST_CASE("radial weight") {
  Geometry h3 = make_hyperbolic(3);
  CHECK(radial_weight(0.0, h3) == 0.0);
  double first = radial_weight(0.4, h3) / std::pow(std::sinh(0.4), 2);
  for (double r : {0.1, 1.0, 3.0, 7.5})
    CHECK(radial_weight(r, h3) / std::pow(std::sinh(r), 2) == doctest::Approx(first).epsilon(1e-13));
  for (int n : {2, 4, 5}) {
    Geometry g = make_hyperbolic(n);
    double a = log_radial_weight(10.0, g) - 2.0 * g.rho * 10.0;
    double b = log_radial_weight(30.0, g) - 2.0 * g.rho * 30.0;
    CHECK(std::fabs(a - b) < 1e-7);
  }
}

TEST_CASE("spherical function against hypergeometric oracle") {
  for (const auto& c : kPhi) {
    Geometry g = make_jacobi(c.alpha, c.beta);
    cplx got = spherical_function(cplx(c.lambda_re, c.lambda_im), c.r, g);
    cplx want(c.value_re, c.value_im);
    CAPTURE(c.alpha);
    CAPTURE(c.lambda_re);
    CAPTURE(c.lambda_im);
    CAPTURE(c.r);
    CHECK(std::abs(got - want) <= 1e-9 * std::abs(want) + 1e-300);
  }
}

TEST_CASE("spherical function normalisation") {
  std::vector<double> radii;
  for (int k = 0; k <= 400; ++k) radii.push_back(20.0 * k / 400);
  for (int n : {2, 3, 4, 5}) {
    Geometry g = make_hyperbolic(n);
    for (cplx lambda : {cplx(0.0), cplx(0.7), cplx(5.0, 0.3 * g.rho), cplx(40.0)})
      CHECK(std::abs(spherical_function(lambda, 0.0, g) - 1.0) < 1e-12);
    auto row = spherical_row(cplx(0.0, g.rho), radii, g);
    for (cplx v : row) CHECK(std::abs(v - 1.0) < 1e-8);
  }
  CHECK(kind_of([] { spherical_function(cplx(1.0, 1.5), 1.0, make_hyperbolic(3)); }) == ErrorKind::OutOfStrip);
}

TEST_CASE("H3 closed form") {
  Geometry g = make_hyperbolic(3);
  std::vector<double> radii;
  for (int k = 1; k <= 1000; ++k) radii.push_back(20.0 * k / 1000);
  for (double lambda : {0.5, 1.0, 4.0}) {
    auto row = spherical_row_real(lambda, radii, g);
    double worst = 0.0;
    for (std::size_t k = 0; k < radii.size(); ++k) {
      double r = radii[k];
      worst = std::max(worst, std::fabs(row[k] - std::sin(lambda * r) / (lambda * std::sinh(r))));
    }
    CAPTURE(lambda);
    CHECK(worst < 1e-9);
  }
}

TEST_CASE("evenness in lambda") {
  for (int n : {2, 3, 5}) {
    Geometry g = make_hyperbolic(n);
    for (double lambda : {0.2, 3.0, 25.0})
      for (double r : {0.3, 2.0, 11.0}) {
        double a = spherical_function(lambda, r, g).real();
        double b = spherical_function(-lambda, r, g).real();
        CHECK(std::fabs(a - b) <= 1e-10 * std::max(1.0, std::fabs(a)));
      }
  }
}

TEST_CASE("ODE residual") {
  // φ'' + (Δ'/Δ) φ' + (λ² + ρ²) φ = 0, checked with fourth-order differences
  const double h = 5e-3;
  for (int n : {2, 4}) {
    Geometry g = make_hyperbolic(n);
    for (double lambda : {0.5, 2.0}) {
      double worst = 0.0;
      for (double r = 0.5; r <= 12.0; r += 0.37) {
        std::vector<double> at{r - 2 * h, r - h, r, r + h, r + 2 * h};
        auto f = spherical_row_real(lambda, at, g);
        double d1 = (f[0] - 8 * f[1] + 8 * f[3] - f[4]) / (12 * h);
        double d2 = (-f[0] + 16 * f[1] - 30 * f[2] + 16 * f[3] - f[4]) / (12 * h * h);
        double drift = (2 * g.alpha + 1) / std::tanh(r) + (2 * g.beta + 1) * std::tanh(r);
        double scale = std::exp(-g.rho * r) * (1.0 + r);
        worst = std::max(worst, std::fabs(d2 + drift * d1 + (lambda * lambda + g.rho * g.rho) * f[2]) / scale);
      }
      CAPTURE(n);
      CAPTURE(lambda);
      CHECK(worst < 1e-8);
    }
  }
}

TEST_CASE("decay in the strip") {
  Geometry g = make_hyperbolic(4);
  for (cplx mu : {cplx(1.0, 0.0), cplx(2.0, 0.5), cplx(0.7, 1.2)}) {
    double bound = 0.0;
    for (double r = 1.0; r <= 30.0; r += 0.5) {
      double v = std::abs(spherical_function(mu, r, g));
      double envelope = std::abs(spherical_function(cplx(0.0, std::fabs(mu.imag())), r, g));
      CHECK(v <= envelope * (1.0 + 1e-9));
      bound = std::max(bound, v * std::exp((g.rho - std::fabs(mu.imag())) * r) / (1.0 + r));
    }
    CHECK(bound < 10.0);
  }
}
