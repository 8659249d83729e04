#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "hyperharm/corpus.hpp"
#include "hyperharm/error.hpp"
#include "hyperharm/verify.hpp"

using namespace hyperharm;

namespace {

ErrorKind kind_of(auto&& call) {
  try {
    call();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Usage;
}

const CorpusItem& find(const Corpus& c, Shape shape, double scale) {
  for (const auto& it : c.items)
    if (it.recipe.shape == shape && it.recipe.scale == scale) return it;
  throw std::runtime_error("missing corpus item");
}

struct H3 {
  Geometry g = make_hyperbolic(3);
  Corpus standard = build_corpus(g, "standard");
  const RadialFunction& gaussian = find(standard, Shape::Gaussian, 1.0).f;
  const RadialFunction& heat = find(standard, Shape::HeatKernel, 1.0).f;
};

}  // namespace

TEST_CASE_FIXTURE(H3, "corpus construction") {
  CHECK(standard.items.size() == 14u);
  CHECK(gaussian.tail_ratio(0.8) < 1e-12);
  double low = std::min_element(heat.samples().begin(), heat.samples().end(),
                                [](cplx a, cplx b) { return a.real() < b.real(); })->real();
  CAPTURE(low);
  // positive down to the round-off floor of the inverse transform
  CHECK(low > -1e-15 * heat.peak());
  for (std::size_t i = 0; i < heat.size(); ++i)
    if (std::abs(heat.samples()[i]) > 1e-12 * heat.peak()) CHECK(heat.samples()[i].real() > 0.0);

  auto family = build_corpus(g, "dilation_family");
  CHECK(family.items.size() == 9u);
  CHECK(family.items.front().dilation == doctest::Approx(0.1));
  CHECK(family.items.back().dilation == doctest::Approx(10.0));

  auto again = build_corpus(g, "mixtures");
  auto other = build_corpus(g, "mixtures", CorpusOptions{.seed = 7});
  CHECK(again.items[0].f.samples() == build_corpus(g, "mixtures").items[0].f.samples());
  CHECK(again.items[0].f.samples() != other.items[0].f.samples());

  auto grid = default_radial_grid(g);
  auto wide = RadialFunction::sample(grid, [](double r) { return std::exp(-0.05 * r); });
  CHECK(kind_of([&] { check_support("wide", wide); }) == ErrorKind::CorpusConstruction);
  CHECK(kind_of([&] { build_corpus(g, "nope"); }) == ErrorKind::Usage);
}

TEST_CASE_FIXTURE(H3, "hausdorff-young") {
  CHECK(std::fabs(check_hausdorff_young(gaussian, 2.0, g).ratio - 1.0) < 1e-6);
  auto sup = check_hausdorff_young(gaussian, 1.0, g);
  auto F = spherical_transform(gaussian, spectral_grid_for(gaussian.grid()), g);
  double peak = 0.0;
  for (cplx v : F.samples()) peak = std::max(peak, std::abs(v));
  CHECK(sup.lhs == doctest::Approx(peak).epsilon(1e-12));
  CHECK(sup.ratio <= 1.0 + 1e-12);
  CHECK(check_hausdorff_young(gaussian, 4.0 / 3.0, g).ratio <= 1.0 + 5e-3);
  CHECK(kind_of([&] { check_hausdorff_young(gaussian, 2.5, g); }) == ErrorKind::InvalidExponent);

  CHECK(std::fabs(check_dual_hy(gaussian, 2.0, g).ratio - 1.0) < 1e-6);
  CHECK(check_dual_hy(heat, 4.0, g).ratio <= 1.0 + 5e-3);
  CHECK(kind_of([&] { check_dual_hy(gaussian, 1.5, g); }) == ErrorKind::InvalidExponent);
}

TEST_CASE_FIXTURE(H3, "paley and HYP on the unitary dual") {
  auto u = power_weight(3.0);
  double weak = weak_c_norm(u, g).value;
  CHECK(check_paley(gaussian, u, weak, 2.0, g).ratio == doctest::Approx(std::sqrt(2.0)).epsilon(1e-5));
  auto base = check_paley(gaussian, u, weak, 4.0 / 3.0, g);
  auto scaled = check_paley(gaussian.scaled(-2.5), u, weak, 4.0 / 3.0, g);
  CHECK(std::fabs(scaled.ratio - base.ratio) <= 1e-12 * base.ratio);
  CHECK(kind_of([&] { check_paley(gaussian, u, kInfinity, 1.5, g); }) == ErrorKind::InadmissibleWeight);

  double p = 4.0 / 3.0;
  auto at_dual = check_hyp_unitary(gaussian, u, weak, p, 4.0, g);
  CHECK(std::fabs(at_dual.lhs - std::pow(2.0, 0.25) * check_hausdorff_young(gaussian, p, g).lhs) <= 1e-10 * at_dual.lhs);
  auto at_p = check_hyp_unitary(gaussian, u, weak, p, p, g);
  CHECK(std::fabs(at_p.lhs - base.lhs) <= 1e-10 * base.lhs);
  CHECK(std::fabs(at_p.rhs_core - base.rhs_core) <= 1e-10 * base.rhs_core);
  CHECK(kind_of([&] { check_hyp_unitary(gaussian, u, weak, p, 5.0, g); }) == ErrorKind::InvalidExponent);
}

TEST_CASE_FIXTURE(H3, "multiplier checks") {
  ExponentPair e(4.0 / 3.0, 4.0);
  CHECK(kind_of([&] { check_multiplier(constant_symbol(1.0), gaussian, e, kInfinity, g); }) ==
        ErrorKind::InadmissibleSymbol);
  auto m = indicator_symbol(2.0);
  double bound = weak_multiplier_bound(m, e, g).value;
  auto rec = check_multiplier(m, gaussian, e, bound, g);
  CHECK(rec.rhs_core == doctest::Approx(bound * lp_norm(gaussian, e.p(), g)));
  CHECK(std::isfinite(rec.ratio));
  CHECK(rec.ratio > 0.0);
}

TEST_CASE_FIXTURE(H3, "heat ratio agrees with the multiplier path") {
  ExponentPair e(4.0 / 3.0, 4.0);
  CorpusItem item = find(standard, Shape::Gaussian, 0.5);
  for (double t : {0.01, 1.0}) {
    auto setup = heat_setup(item, t, 1.0, e, g);
    auto rec = check_multiplier(setup.symbol, setup.f, e, 1.0, g, setup.sgrid, setup.f.grid_ptr());
    CHECK(rec.ratio == doctest::Approx(heat_ratio(item, t, 1.0, e, g)).epsilon(1e-8));
  }
  auto curve = heat_decay_curve(e, 1.0, {0.01, 1.0}, standard, g);
  REQUIRE(curve.size() == 2u);
  CHECK(curve[1].bound == doctest::Approx(heat_bound(1.0, 1.0, e, g)));
  CHECK(kind_of([&] { heat_decay_curve(e, 1.0, {0.0}, standard, g); }) == ErrorKind::InvalidParameter);
}

TEST_CASE("L2 heat norm") {
  Geometry g = make_hyperbolic(3);
  for (double t : {1.0, 5.0, 20.0}) {
    double got = heat_l2_ratio(t, 1.0, 0.01, g);
    CHECK(got == doctest::Approx(std::exp(-t) * std::pow(1.0 + 2.0 * t * 1e-4, -0.75)).epsilon(1e-6));
    CHECK(got == doctest::Approx(std::exp(-t)).epsilon(0.02));
  }
}

TEST_CASE_FIXTURE(H3, "sobolev checks") {
  double threshold = 3.0 * 0.5;
  auto rec = check_sobolev(gaussian, 4.0 / 3.0, 4.0, threshold, g);
  CHECK_FALSE(rec.exploratory);
  CHECK(std::isfinite(rec.ratio));
  CHECK(kind_of([&] { check_sobolev(gaussian, 4.0 / 3.0, 4.0, 1.0, g); }) == ErrorKind::InadmissibleOrder);
  auto loose = check_sobolev(gaussian, 4.0 / 3.0, 4.0, 1.0, g, true);
  CHECK(loose.exploratory);
  auto flat = check_sobolev(gaussian, 2.0, 2.0, 0.0, g, true);
  CHECK(flat.ratio == doctest::Approx(1.0).epsilon(1e-6));
  auto pair = check_sobolev_pair(gaussian, 4.0 / 3.0, 4.0, 1.0, 1.0 + threshold, g);
  CHECK(std::isfinite(pair.ratio));
  CHECK(kind_of([&] { check_sobolev_pair(gaussian, 4.0 / 3.0, 4.0, 1.0, 1.5, g); }) == ErrorKind::InadmissibleOrder);
}

TEST_CASE_FIXTURE(H3, "non-unitary checks") {
  double p = 4.0 / 3.0;
  double q = 1.5;
  auto u = power_weight(4.0);
  double l1 = l1_c_norm(u, g).value;
  CHECK(rho_shift(2.0, g) == 0.0);
  CHECK(rho_shift(1.5, g) == doctest::Approx(1.0 / 3.0));

  auto restriction = check_restriction(gaussian, g.rho, g);
  CHECK(restriction.ratio <= 1.0 + 1e-8);

  auto hy = check_nonunitary_hy(gaussian, p, q, g);
  auto at_dual = check_nonunitary_hyp(gaussian, u, l1, p, 4.0, q, g);
  CHECK(std::fabs(at_dual.lhs - hy.lhs) <= 1e-10 * hy.lhs);
  auto model = check_nonunitary_paley(gaussian, u, l1, p, q, g, PaleyDensity::Model);
  auto at_p = check_nonunitary_hyp(gaussian, u, l1, p, p, q, g);
  CHECK(std::fabs(at_p.lhs - model.lhs) <= 1e-10 * model.lhs);

  // at q = 2 the damping factor is at most one
  auto unitary = check_paley(gaussian, u, weak_c_norm(u, g).value, p, g);
  auto shifted = check_nonunitary_paley(gaussian, u, l1, p, 2.0, g);
  CHECK(shifted.lhs <= unitary.lhs * (1.0 + 1e-12));

  auto a = check_nonunitary_paley(gaussian, u, l1, p, q, g);
  auto b = check_nonunitary_paley(gaussian.scaled(3.0), u, l1, p, q, g);
  CHECK(std::fabs(a.ratio - b.ratio) <= 1e-12 * a.ratio);
  CHECK(kind_of([&] { check_nonunitary_hy(gaussian, p, 5.0, g); }) == ErrorKind::InvalidExponent);
}

TEST_CASE("slope fits") {
  std::vector<double> x;
  std::vector<double> y;
  for (double t : log_spaced(1e-3, 1e-1, 7)) {
    x.push_back(t);
    y.push_back(3.0 * std::pow(t, -0.75));
  }
  auto fit = fit_loglog("power", x, y);
  CHECK(fit.slope == doctest::Approx(-0.75).epsilon(1e-12));
  CHECK(std::exp(fit.intercept) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(fit.points == 7u);
  CHECK(median({3.0, 1.0, 2.0}) == 2.0);
  CHECK(median({4.0, 1.0, 2.0, 3.0}) == 2.5);
}
