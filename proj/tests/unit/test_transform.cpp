#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hyperharm/corpus.hpp"
#include "hyperharm/error.hpp"
#include "hyperharm/quadrature.hpp"
#include "hyperharm/transform.hpp"
#include "oracles.hpp"

using namespace hyperharm;

namespace {

constexpr double kPi = std::numbers::pi;

double relative_l2(const std::vector<cplx>& a, const std::vector<cplx>& b, const std::vector<double>& w) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num += w[i] * std::norm(a[i] - b[i]);
    den += w[i] * std::norm(b[i]);
  }
  return std::sqrt(num / den);
}

std::vector<double> measure(const RadialGrid& g, const Geometry& geom) {
  auto w = weight_on(g, geom);
  for (std::size_t i = 0; i < w.size(); ++i) w[i] *= g.weights()[i];
  return w;
}

std::vector<double> measure(const SpectralGrid& g, const Geometry& geom) {
  auto w = density_on(g, geom);
  for (std::size_t i = 0; i < w.size(); ++i) w[i] *= g.weights()[i];
  return w;
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

}  // namespace

TEST_CASE("gauss-legendre rule") {
  for (int n : {8, 32, 64}) {
    const auto& g = gauss_legendre(n);
    double sum = 0.0;
    for (double w : g.weights) sum += w;
    CHECK(sum == doctest::Approx(2.0).epsilon(1e-14));
    // exact through degree 2n−1
    double moment = 0.0;
    for (int i = 0; i < n; ++i) moment += g.weights[i] * std::pow(g.nodes[i], 2 * n - 2);
    CHECK(moment == doctest::Approx(2.0 / (2 * n - 1)).epsilon(1e-12));
  }
}

TEST_CASE("radial and spectral grids") {
  auto a = RadialGrid::uniform(20.0, 40, 32);
  auto b = RadialGrid::uniform(20.0, 40, 32);
  CHECK(a == b);
  CHECK(a.nodes() == b.nodes());
  CHECK(a.size() == 40u * 32u);
  CHECK(std::is_sorted(a.nodes().begin(), a.nodes().end()));
  CHECK(a.nodes().front() > 0.0);
  CHECK(a.nodes().back() < 20.0);
  for (double w : a.weights()) CHECK(w > 0.0);

  auto s = SpectralGrid::build(64.0, 20.0);
  CHECK(s.lambda_max() == 64.0);
  CHECK(s.nodes().front() < 1e-3);
  for (std::size_t i = 1; i < s.size(); ++i) CHECK(s.nodes()[i] > s.nodes()[i - 1]);
  for (double w : s.weights()) CHECK(w > 0.0);
  // phase per Gauss point stays below π/2
  double width = panel_width_for(64.0);
  CHECK(64.0 * width / 32.0 <= kPi / 2 + 1e-12);
}

TEST_CASE("default grid sizes") {
  for (int n : {2, 3, 5}) {
    Geometry g = make_hyperbolic(n);
    CHECK(default_lambda_max(g) == doctest::Approx(64.0 * (1.0 + g.rho)));
    double r = default_r_max(g);
    CHECK(r >= 20.0);
    CHECK(r <= 40.0);
  }
}

TEST_CASE("lp norms") {
  Geometry g = make_hyperbolic(3);
  auto grid = default_radial_grid(g);
  auto zero = RadialFunction::sample(grid, [](double) { return 0.0; });
  CHECK(lp_norm(zero, 2.0, g) == 0.0);
  auto f = RadialFunction::sample(grid, [](double r) { return std::exp(-r * r); });
  for (double p : {1.0, 1.5, 2.0, 4.0, kInfinity})
    CHECK(lp_norm(f.scaled(-3.0), p, g) == doctest::Approx(3.0 * lp_norm(f, p, g)).epsilon(1e-13));
  CHECK(lp_norm(f, kInfinity, g) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(kind_of([&] { lp_norm(f, 0.5, g); }) == ErrorKind::InvalidExponent);

  auto h = RadialFunction::sample(grid, [](double r) { return oracle::h3_heat(1.0, r); });
  // ∫₀^∞ e^{−2(λ²+1)} λ²/(2π) dλ
  double spectral = std::exp(-2.0) / (2.0 * kPi) * std::sqrt(kPi) / (4.0 * std::pow(2.0, 1.5));
  CHECK(std::pow(lp_norm(h, 2.0, g), 2) == doctest::Approx(spectral).epsilon(1e-6));
}

TEST_CASE("forward transform") {
  Geometry g = make_hyperbolic(3);
  auto grid = default_radial_grid(g);
  auto sgrid = spectral_grid_for(*grid);
  auto f = RadialFunction::sample(grid, [](double r) { return std::exp(-r * r); });
  auto k = RadialFunction::sample(grid, [](double r) { return 1.0 / std::cosh(2.0 * r); });
  std::vector<cplx> mix;
  for (std::size_t i = 0; i < f.size(); ++i) mix.push_back(2.0 * f.samples()[i] - cplx(0.0, 0.5) * k.samples()[i]);
  auto F = spherical_transform(f, sgrid, g);
  auto K = spherical_transform(k, sgrid, g);
  auto M = spherical_transform(RadialFunction(grid, mix), sgrid, g);
  for (std::size_t i = 0; i < F.size(); ++i) {
    cplx want = 2.0 * F.samples()[i] - cplx(0.0, 0.5) * K.samples()[i];
    CHECK(std::abs(M.samples()[i] - want) <= 1e-12 * std::max(1.0, std::abs(want)));
    CHECK(F.samples()[i].imag() == 0.0);
  }
}

TEST_CASE("heat kernel from the inverse transform") {
  Geometry g = make_hyperbolic(3);
  auto grid = default_radial_grid(g);
  auto sgrid = spectral_grid_for(*grid);
  auto F = SpectralFunction::sample(sgrid, [](double l) { return std::exp(-(l * l + 1.0)); });
  auto h = inverse_transform(F, grid, g);
  double worst = 0.0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    double r = grid->nodes()[i];
    // positive wherever the kernel is above the round-off floor
    if (oracle::h3_heat(1.0, r) > 1e-12 * oracle::h3_heat(1.0, 0.0)) CHECK(h.samples()[i].real() > 0.0);
    worst = std::max(worst, std::fabs(h.samples()[i].real() - oracle::h3_heat(1.0, r)) / oracle::h3_heat(1.0, 0.0));
  }
  CHECK(worst < 1e-9);

  // forward of the result gives F back
  auto back = spherical_transform(h, sgrid, g);
  CHECK(relative_l2(back.samples(), F.samples(), measure(*sgrid, g)) < 1e-6);

  auto zero = SpectralFunction::sample(sgrid, [](double) { return cplx(0.0); });
  for (cplx v : inverse_transform(zero, grid, g).samples()) CHECK(v == cplx(0.0));

  auto shifted = shifted_transform(h, sgrid, 0.5, g);
  CHECK(kind_of([&] { inverse_transform(shifted, grid, g); }) == ErrorKind::InvalidShift);
}

TEST_CASE("inverse of forward on a compact bump") {
  Geometry g = make_hyperbolic(3);
  Recipe bump{Shape::Bump, 2.0, 0.0, 0.0, {}};
  auto grid = item_grid(bump, g);
  auto f = realize(bump, grid, g);
  auto sgrid = spectral_grid_for(*grid);
  auto back = inverse_transform(spherical_transform(f, sgrid, g), grid, g);
  CHECK(relative_l2(back.samples(), f.samples(), measure(*grid, g)) < 1e-6);
}

TEST_CASE("shifted transform") {
  Geometry g = make_hyperbolic(3);
  auto grid = default_radial_grid(g);
  auto sgrid = spectral_grid_for(*grid);
  auto f = RadialFunction::sample(grid, [](double r) { return std::exp(-r * r); });
  auto plain = spherical_transform(f, sgrid, g);
  auto zero_shift = shifted_transform(f, sgrid, 0.0, g);
  CHECK(zero_shift.samples() == plain.samples());

  // φ_{iρ} ≡ 1, so at λ → 0 the shifted transform is the unweighted integral
  auto one_point = std::make_shared<const SpectralGrid>(SpectralGrid::from_breakpoints({0.0, 1e-9}, 2));
  auto at_rho = shifted_transform(f, one_point, g.rho, g);
  double integral = lp_norm(f, 1.0, g);
  CHECK(std::abs(at_rho.samples()[0] - integral) < 1e-9 * integral);

  for (double shift : {0.0, 0.3, 0.7, 1.0}) {
    auto F = shifted_transform(f, sgrid, shift, g);
    double sup = 0.0;
    for (cplx v : F.samples()) sup = std::max(sup, std::abs(v));
    CHECK(sup <= integral * (1.0 + 1e-8));
  }
  CHECK(kind_of([&] { shifted_transform(f, sgrid, 1.2, g); }) == ErrorKind::OutOfStrip);

  auto wide = RadialFunction::sample(grid, [](double r) { return std::exp(-0.01 * r * r); });
  CHECK(kind_of([&] { shifted_transform(wide, sgrid, 0.5, g); }) == ErrorKind::TruncationRisk);
}

TEST_CASE("plancherel defect") {
  Geometry g = make_hyperbolic(3);
  auto grid = default_radial_grid(g);
  for (double s : {0.5, 1.0, 2.0}) {
    auto f = RadialFunction::sample(grid, [s](double r) { return std::exp(-0.5 * r * r / (s * s)); });
    CHECK(plancherel_defect(f, g) < 1e-6);
  }
  auto h = RadialFunction::sample(grid, [](double r) { return oracle::h3_heat(1.0, r); });
  CHECK(plancherel_defect(h, g) < 1e-6);
  auto zero = RadialFunction::sample(grid, [](double) { return 0.0; });
  CHECK(kind_of([&] { plancherel_defect(zero, g); }) == ErrorKind::UndefinedDefect);
}

TEST_CASE("plancherel across the standard corpus") {
  for (int n : {2, 4}) {
    Geometry g = make_hyperbolic(n);
    auto corpus = build_corpus(g, "standard");
    for (const auto& item : corpus.items) {
      CAPTURE(item.name);
      CHECK(plancherel_defect(item.f, g) < 1e-6);
    }
  }
}

TEST_CASE("parseval bilinear form") {
  Geometry g = make_hyperbolic(4);
  auto grid = default_radial_grid(g);
  auto sgrid = spectral_grid_for(*grid);
  auto f = RadialFunction::sample(grid, [](double r) { return std::exp(-r * r); });
  auto k = RadialFunction::sample(grid, [](double r) { return (1.0 - r) * std::exp(-0.5 * r * r); });
  cplx lhs = inner_product(f, k, g);
  cplx rhs = spectral_inner_product(spherical_transform(f, sgrid, g), spherical_transform(k, sgrid, g), g);
  CHECK(std::abs(lhs - rhs) <= 1e-6 * std::abs(lhs));
}

TEST_CASE("grid convergence") {
  Geometry g = make_hyperbolic(3);
  auto corpus = build_corpus(g, "standard");
  auto base = default_radial_grid(g);
  auto sgrid = spectral_grid_for(*base);
  auto wider = std::make_shared<const RadialGrid>(RadialGrid::for_bandwidth(2.0 * base->r_max(), base->bandwidth()));
  for (const auto& item : corpus.items) {
    if (item.recipe.shape == Shape::HeatKernel) continue;  // no closed form to resample
    auto a = spherical_transform(item.f, sgrid, g);
    auto b = spherical_transform(realize(item.recipe, wider, g), sgrid, g);
    double peak = 0.0;
    double diff = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      peak = std::max(peak, std::abs(a.samples()[i]));
      diff = std::max(diff, std::abs(a.samples()[i] - b.samples()[i]));
    }
    CAPTURE(item.name);
    CHECK(diff <= 1e-8 * peak);
  }
}
