#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "hyperharm/error.hpp"
#include "hyperharm/multiplier.hpp"
#include "oracles.hpp"

using namespace hyperharm;

namespace {

// relative L² distance with the radial measure
double distance(const RadialFunction& a, const RadialFunction& b, const Geometry& g) {
  std::vector<cplx> diff;
  for (std::size_t i = 0; i < a.size(); ++i) diff.push_back(a.samples()[i] - b.samples()[i]);
  return lp_norm(RadialFunction(a.grid_ptr(), diff), 2.0, g) / lp_norm(b, 2.0, g);
}

ErrorKind kind_of(auto&& call) {
  try {
    call();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Usage;
}

struct Fixture {
  Geometry g = make_hyperbolic(3);
  RadialGridPtr grid = default_radial_grid(g);
  RadialFunction input = RadialFunction::sample(grid, [](double r) { return std::exp(-r * r) * (1.0 + 0.5 * r * r); });
};

}  // namespace

TEST_CASE("lifting spectral profiles") {
  Geometry g = make_hyperbolic(3);
  Symbol one = lift_profile(constant_profile(1.0, g), g);
  for (double l : {0.0, 1.0, 50.0}) CHECK(one(l) == cplx(1.0));
  Symbol heat = lift_profile(heat_profile(0.7, 1.0, g), g);
  for (double l : {0.0, 0.4, 3.0})
    CHECK(std::abs(heat(l) - std::exp(-0.7 * (l * l + 1.0))) < 1e-15);
  CHECK_FALSE(heat.singular_at_zero());
  // (s − ρ²)^{−1/2}
  Symbol singular = lift_profile(power_profile(-1.0, 1.0, g), g);
  CHECK(singular.singular_at_zero());
}

TEST_CASE("claimed monotonicity is validated") {
  Geometry g = make_hyperbolic(3);
  CHECK(kind_of([&] {
          tabulated_profile({1.0, 2.0, 3.0, 4.0}, {1.0, 0.2, 0.8, 0.1}, g);
        }) == ErrorKind::HypothesisViolation);
  auto ok = tabulated_profile({1.0, 2.0, 3.0}, {1.0, 0.5, 0.1}, g);
  CHECK(ok.check_monotone());
  CHECK(std::abs(ok(2.5) - 0.3) < 1e-15);
}

TEST_CASE("heat symbol") {
  Geometry g = make_hyperbolic(3);
  Symbol m = heat_symbol(2.0, 1.0, g);
  CHECK(std::abs(m(0.0) - std::exp(-2.0)) < 1e-16);
  double previous = 2.0;
  for (double l = 0.0; l < 10.0; l += 0.25) {
    CHECK(m(l).real() < previous);
    previous = m(l).real();
  }
  Symbol a = heat_symbol(0.3, 0.5, g);
  Symbol b = heat_symbol(1.1, 0.5, g);
  Symbol c = heat_symbol(1.4, 0.5, g);
  for (double l : {0.0, 0.5, 2.0, 9.0}) CHECK(std::abs((a * b)(l) - c(l)) <= 1e-14 * std::abs(c(l)));
  CHECK(kind_of([&] { heat_symbol(0.0, 1.0, g); }) == ErrorKind::InvalidParameter);
  CHECK(kind_of([&] { heat_symbol(1.0, -1.0, g); }) == ErrorKind::InvalidParameter);
}

TEST_CASE("potential symbol") {
  Geometry g = make_hyperbolic(4);
  double rho2 = g.rho * g.rho;
  Symbol m = potential_symbol(0.0, 2.0, g);
  for (double l : {0.0, 1.5, 7.0}) CHECK(std::abs(m(l) - 1.0 / (l * l + rho2)) < 1e-15);

  Symbol edge = potential_symbol(-rho2, cplx(1.5, 0.7), g);
  CHECK(edge.singular_at_zero());
  for (double l : {0.1, 1.0, 20.0}) CHECK(std::abs(edge(l)) == doctest::Approx(std::pow(l, -1.5)).epsilon(1e-12));

  // the modulus formula holds for real orders; a complex order adds the factor e^{Im σ·arg(s+z)/2}
  cplx z(0.4, -1.3);
  for (cplx sigma : {cplx(1.2, 0.0), cplx(1.2, 2.0)}) {
    Symbol general = potential_symbol(z, sigma, g);
    for (double l : {0.0, 0.8, 6.0}) {
      double s = l * l + rho2;
      double modulus = std::pow(std::pow(s + z.real(), 2) + z.imag() * z.imag(), -sigma.real() / 4.0);
      modulus *= std::exp(sigma.imag() * std::arg(s + z) / 2.0);
      CHECK(std::abs(general(l)) == doctest::Approx(modulus).epsilon(1e-12));
    }
  }
  CHECK(kind_of([&] { potential_symbol(-rho2 - 0.1, 1.0, g); }) == ErrorKind::OutOfSpectrum);
}

TEST_CASE("sobolev and indicator symbols") {
  Geometry g = make_hyperbolic(5);
  for (double l : {0.0, 2.0}) CHECK(sobolev_symbol(0.0, g)(l) == cplx(1.0));
  CHECK(std::abs(sobolev_symbol(2.0, g)(0.0) - g.rho * g.rho) < 1e-14);
  Symbol id = sobolev_symbol(1.3, g) * sobolev_symbol(-1.3, g);
  for (double l : {0.0, 0.5, 30.0}) CHECK(std::abs(id(l) - 1.0) < 1e-14);

  Symbol ind = indicator_symbol(3.0);
  CHECK(ind(0.0) == cplx(1.0));
  CHECK(ind(-3.0) == cplx(1.0));
  CHECK(ind(6.0) == cplx(0.0));
  CHECK(kind_of([] { indicator_symbol(0.0); }) == ErrorKind::InvalidParameter);

  Symbol tab = tabulated_symbol({0.0, 1.0, 2.0}, {1.0, 0.5, 0.25});
  CHECK(std::abs(tab(1.5) - 0.375) < 1e-15);
  CHECK(std::abs(tab(-0.5) - 0.75) < 1e-15);
  CHECK(tab(5.0) == cplx(0.0));
}

TEST_CASE_FIXTURE(Fixture, "identity and constant multipliers") {
  CHECK(distance(apply_multiplier(constant_symbol(1.0), input, g), input, g) < 1e-6);
  CHECK(distance(apply_multiplier(constant_symbol(cplx(0.0, 2.0)), input, g), input.scaled(cplx(0.0, 2.0)), g) < 1e-6);
}

TEST_CASE_FIXTURE(Fixture, "heat semigroup on kernels") {
  auto half = RadialFunction::sample(grid, [](double r) { return oracle::h3_heat(0.5, r); });
  auto one = RadialFunction::sample(grid, [](double r) { return oracle::h3_heat(1.0, r); });
  CHECK(distance(apply_multiplier(heat_symbol(0.5, 1.0, g), half, g), one, g) < 1e-5);
}

TEST_CASE_FIXTURE(Fixture, "indicator projection and contraction") {
  Symbol m = indicator_symbol(2.0);
  auto F = spherical_transform(input, spectral_grid_for(*grid), g);
  auto once = apply_symbol(m, F);
  CHECK(apply_symbol(m, once).samples() == once.samples());
  // through space the sharp cutoff leaves a slowly decaying tail past r_max, so the round trip is Gibbs limited
  auto spatial = apply_multiplier(m, input, g);
  CHECK(distance(apply_multiplier(m, spatial, g), spatial, g) < 0.05);
  CHECK(lp_norm(spatial, 2.0, g) <= lp_norm(input, 2.0, g));
}

TEST_CASE_FIXTURE(Fixture, "L2 contraction and commutativity") {
  std::vector<Symbol> symbols{heat_symbol(0.3, 1.0, g), indicator_symbol(1.5), power_decay_symbol(2.0),
                              potential_symbol(0.5, 1.0, g)};
  for (const auto& m : symbols) {
    double sup = 0.0;
    for (double l = 0.0; l <= 200.0; l += 0.01) sup = std::max(sup, std::abs(m(l)));
    CAPTURE(m.describe());
    CHECK(lp_norm(apply_multiplier(m, input, g), 2.0, g) <= (sup + 1e-6) * lp_norm(input, 2.0, g));
  }
  auto ab = apply_multiplier(symbols[3], apply_multiplier(symbols[0], input, g), g);
  auto ba = apply_multiplier(symbols[0], apply_multiplier(symbols[3], input, g), g);
  CHECK(distance(ab, ba, g) < 1e-6);
}

TEST_CASE("resolvent identity") {
  // f̂ is negligible past λ = 24, and the resolvent output needs room to decay
  Geometry g = make_hyperbolic(3);
  auto grid = std::make_shared<const RadialGrid>(RadialGrid::for_bandwidth(45.0, 24.0));
  auto sgrid = spectral_grid_for(*grid);
  auto f = RadialFunction::sample(grid, [](double r) { return std::exp(-r * r) * (1.0 + 0.5 * r * r); });
  for (cplx z : {cplx(0.5, 0.0), cplx(-0.8, 0.3), cplx(-0.85, 0.0)}) {
    Symbol resolvent = potential_symbol(z, 2.0, g);
    Symbol shifted("shifted laplacian", {}, [z](double l) { return l * l + 1.0 + z; });
    auto back = apply_multiplier(shifted, apply_multiplier(resolvent, f, g, sgrid, grid), g, sgrid, grid);
    CAPTURE(z);
    CHECK(distance(back, f, g) < 1e-5);
  }
}

TEST_CASE_FIXTURE(Fixture, "non-finite symbol values") {
  Symbol bad("broken", {}, [](double l) { return l > 3.0 ? cplx(std::numeric_limits<double>::infinity()) : cplx(1.0); });
  CHECK(kind_of([&] { apply_multiplier(bad, input, g); }) == ErrorKind::SymbolEvaluation);
}
