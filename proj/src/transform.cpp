#include "hyperharm/transform.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <list>
#include <mutex>
#include <thread>

#include "hyperharm/error.hpp"

namespace hyperharm {

namespace {

constexpr std::size_t kCacheEntries = 8;
constexpr std::size_t kCacheBytes = std::size_t(768) << 20;

template <class Body>
void parallel_rows(std::size_t count, Body body) {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  std::size_t workers = std::min<std::size_t>(hw, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) body(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

void check_finite(const std::vector<cplx>& values, const char* what) {
  for (const cplx& v : values) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      fail(ErrorKind::InvalidParameter, what, " contains non-finite samples");
  }
}

}  // namespace

RadialFunction::RadialFunction(RadialGridPtr grid, std::vector<cplx> samples)
    : grid_(std::move(grid)), samples_(std::move(samples)) {
  if (!grid_) fail(ErrorKind::InvalidParameter, "radial function without a grid");
  if (samples_.size() != grid_->size())
    fail(ErrorKind::InvalidParameter, "radial function has ", samples_.size(), " samples for ",
         grid_->size(), " nodes");
  check_finite(samples_, "radial function");
}

RadialFunction RadialFunction::sample(RadialGridPtr grid, const std::function<double(double)>& f) {
  std::vector<cplx> values;
  values.reserve(grid->size());
  for (double r : grid->nodes()) values.emplace_back(f(r), 0.0);
  return RadialFunction(std::move(grid), std::move(values));
}

bool RadialFunction::is_real() const {
  return std::all_of(samples_.begin(), samples_.end(), [](const cplx& v) { return v.imag() == 0.0; });
}

double RadialFunction::peak() const {
  double m = 0.0;
  for (const cplx& v : samples_) m = std::max(m, std::abs(v));
  return m;
}

double RadialFunction::tail_ratio(double fraction) const {
  double cut = fraction * grid_->r_max();
  double tail = 0.0;
  const auto& r = grid_->nodes();
  for (std::size_t j = 0; j < r.size(); ++j) {
    if (r[j] > cut) tail = std::max(tail, std::abs(samples_[j]));
  }
  double p = peak();
  return p > 0.0 ? tail / p : 0.0;
}

RadialFunction RadialFunction::scaled(cplx factor) const {
  std::vector<cplx> values(samples_);
  for (cplx& v : values) v *= factor;
  return RadialFunction(grid_, std::move(values));
}

SpectralFunction::SpectralFunction(SpectralGridPtr grid, std::vector<cplx> samples, double shift)
    : grid_(std::move(grid)), samples_(std::move(samples)), shift_(shift) {
  if (!grid_) fail(ErrorKind::InvalidParameter, "spectral function without a grid");
  if (samples_.size() != grid_->size())
    fail(ErrorKind::InvalidParameter, "spectral function has ", samples_.size(), " samples for ",
         grid_->size(), " nodes");
  if (!(shift_ >= 0.0)) fail(ErrorKind::InvalidShift, "spectral shift must be nonnegative");
  check_finite(samples_, "spectral function");
}

SpectralFunction SpectralFunction::sample(SpectralGridPtr grid, const std::function<cplx(double)>& F) {
  std::vector<cplx> values;
  values.reserve(grid->size());
  for (double l : grid->nodes()) values.push_back(F(l));
  return SpectralFunction(std::move(grid), std::move(values), 0.0);
}

SphericalBasis::SphericalBasis(const Geometry& geom, RadialGridPtr rgrid, SpectralGridPtr sgrid,
                               double shift)
    : geom_(geom), rgrid_(std::move(rgrid)), sgrid_(std::move(sgrid)), shift_(shift) {
  if (shift_ < 0.0 || shift_ > geom_.rho * (1.0 + 1e-14))
    fail(ErrorKind::OutOfStrip, "shift ", shift_, " outside [0, rho=", geom_.rho, "]");
  const auto& lam = sgrid_->nodes();
  const auto& r = rgrid_->nodes();
  std::size_t n = r.size();
  if (is_real()) {
    real_.resize(lam.size() * n);
    parallel_rows(lam.size(), [&](std::size_t i) {
      std::vector<double> row = spherical_row_real(lam[i], r, geom_);
      std::copy(row.begin(), row.end(), real_.begin() + i * n);
    });
  } else {
    complex_.resize(lam.size() * n);
    parallel_rows(lam.size(), [&](std::size_t i) {
      std::vector<cplx> row = spherical_row(cplx(lam[i], shift_), r, geom_);
      std::copy(row.begin(), row.end(), complex_.begin() + i * n);
    });
  }
}

std::size_t SphericalBasis::bytes() const {
  return real_.size() * sizeof(double) + complex_.size() * sizeof(cplx);
}

bool SphericalBasis::matches(const Geometry& geom, const RadialGrid& rgrid, const SpectralGrid& sgrid,
                             double shift) const {
  return shift == shift_ && geom.alpha == geom_.alpha && geom.beta == geom_.beta && rgrid == *rgrid_ &&
         sgrid == *sgrid_;
}

namespace {

struct BasisCache {
  std::mutex mutex;
  std::list<std::shared_ptr<const SphericalBasis>> entries;
};

BasisCache& basis_cache() {
  static BasisCache cache;
  return cache;
}

}  // namespace

std::shared_ptr<const SphericalBasis> spherical_basis(const Geometry& geom, const RadialGridPtr& rgrid,
                                                      const SpectralGridPtr& sgrid, double shift) {
  BasisCache& cache = basis_cache();
  {
    std::lock_guard lock(cache.mutex);
    for (auto it = cache.entries.begin(); it != cache.entries.end(); ++it) {
      if ((*it)->matches(geom, *rgrid, *sgrid, shift)) {
        auto hit = *it;
        cache.entries.erase(it);
        cache.entries.push_front(hit);
        return hit;
      }
    }
  }
  auto basis = std::make_shared<const SphericalBasis>(geom, rgrid, sgrid, shift);
  std::lock_guard lock(cache.mutex);
  cache.entries.push_front(basis);
  std::size_t total = 0;
  std::size_t kept = 0;
  for (auto it = cache.entries.begin(); it != cache.entries.end();) {
    total += (*it)->bytes();
    ++kept;
    if (kept > 1 && (kept > kCacheEntries || total > kCacheBytes)) {
      it = cache.entries.erase(it);
    } else {
      ++it;
    }
  }
  return basis;
}

void clear_basis_cache() {
  BasisCache& cache = basis_cache();
  std::lock_guard lock(cache.mutex);
  cache.entries.clear();
}

SpectralGridPtr spectral_grid_for(const RadialGrid& rgrid) {
  return std::make_shared<const SpectralGrid>(SpectralGrid::build(rgrid.bandwidth(), rgrid.r_max()));
}

RadialGridPtr default_radial_grid(const Geometry& geom) {
  return std::make_shared<const RadialGrid>(
      RadialGrid::for_bandwidth(default_r_max(geom), default_lambda_max(geom)));
}

std::vector<double> density_on(const SpectralGrid& sgrid, const Geometry& geom) {
  std::vector<double> out;
  out.reserve(sgrid.size());
  for (double l : sgrid.nodes()) out.push_back(plancherel_density(l, geom));
  return out;
}

std::vector<double> weight_on(const RadialGrid& rgrid, const Geometry& geom) {
  std::vector<double> out;
  out.reserve(rgrid.size());
  for (double r : rgrid.nodes()) out.push_back(radial_weight(r, geom));
  return out;
}

double lp_norm(const RadialFunction& f, double p, const Geometry& geom) {
  if (!(p >= 1.0)) fail(ErrorKind::InvalidExponent, "lp_norm needs p >= 1, got ", p);
  if (std::isinf(p)) return f.peak();
  const auto& r = f.grid().nodes();
  const auto& w = f.grid().weights();
  double sum = 0.0;
  for (std::size_t j = 0; j < r.size(); ++j) {
    double a = std::abs(f.samples()[j]);
    if (a == 0.0) continue;
    sum += w[j] * std::pow(a, p) * radial_weight(r[j], geom);
  }
  return std::pow(sum, 1.0 / p);
}

double spectral_norm(const SpectralFunction& F, double p, const Geometry& geom) {
  if (!(p >= 1.0)) fail(ErrorKind::InvalidExponent, "spectral_norm needs p >= 1, got ", p);
  if (std::isinf(p)) {
    double m = 0.0;
    for (const cplx& v : F.samples()) m = std::max(m, std::abs(v));
    return m;
  }
  const auto& l = F.grid().nodes();
  const auto& w = F.grid().weights();
  double sum = 0.0;
  for (std::size_t i = 0; i < l.size(); ++i) {
    double a = std::abs(F.samples()[i]);
    if (a == 0.0) continue;
    sum += w[i] * std::pow(a, p) * plancherel_density(l[i], geom);
  }
  return std::pow(sum, 1.0 / p);
}

namespace {

SpectralFunction forward(const RadialFunction& f, const SpectralGridPtr& sgrid, double shift,
                         const Geometry& geom) {
  auto basis = spherical_basis(geom, f.grid_ptr(), sgrid, shift);
  const auto& w = f.grid().weights();
  std::vector<double> dw = weight_on(f.grid(), geom);
  std::size_t n = f.size();
  std::vector<cplx> g(n);
  for (std::size_t j = 0; j < n; ++j) g[j] = f.samples()[j] * (w[j] * dw[j]);
  std::vector<cplx> out(basis->rows());
  for (std::size_t i = 0; i < basis->rows(); ++i) {
    cplx acc = 0.0;
    if (basis->is_real()) {
      const double* row = basis->real_row(i);
      double re = 0.0;
      double im = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        re += g[j].real() * row[j];
        im += g[j].imag() * row[j];
      }
      acc = cplx(re, im);
    } else {
      const cplx* row = basis->complex_row(i);
      for (std::size_t j = 0; j < n; ++j) acc += g[j] * row[j];
    }
    out[i] = acc;
  }
  return SpectralFunction(sgrid, std::move(out), shift);
}

}  // namespace

SpectralFunction spherical_transform(const RadialFunction& f, const SpectralGridPtr& sgrid,
                                     const Geometry& geom) {
  return forward(f, sgrid, 0.0, geom);
}

SpectralFunction shifted_transform(const RadialFunction& f, const SpectralGridPtr& sgrid, double shift,
                                   const Geometry& geom) {
  if (!(shift >= 0.0)) fail(ErrorKind::InvalidShift, "shift must be nonnegative, got ", shift);
  if (shift > geom.rho * (1.0 + 1e-14))
    fail(ErrorKind::OutOfStrip, "shift ", shift, " exceeds rho = ", geom.rho);
  if (shift > 0.0) {
    double tail = f.tail_ratio(0.8);
    if (tail > 1e-12)
      fail(ErrorKind::TruncationRisk, "function is not negligible beyond 0.8*r_max (tail/peak = ", tail,
           "); the shifted transform would be truncated");
  }
  return forward(f, sgrid, shift, geom);
}

RadialFunction inverse_transform(const SpectralFunction& F, const RadialGridPtr& rgrid,
                                 const Geometry& geom) {
  if (F.shift() != 0.0)
    fail(ErrorKind::InvalidShift, "inverse transform needs an unshifted spectral function");
  auto basis = spherical_basis(geom, rgrid, F.grid_ptr(), 0.0);
  const auto& w = F.grid().weights();
  std::vector<double> dens = density_on(F.grid(), geom);
  std::size_t n = rgrid->size();
  std::vector<double> re(n, 0.0);
  std::vector<double> im(n, 0.0);
  for (std::size_t i = 0; i < basis->rows(); ++i) {
    cplx c = F.samples()[i] * (w[i] * dens[i]);
    if (c == cplx(0.0, 0.0)) continue;
    const double* row = basis->real_row(i);
    for (std::size_t j = 0; j < n; ++j) {
      re[j] += c.real() * row[j];
      im[j] += c.imag() * row[j];
    }
  }
  std::vector<cplx> out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = cplx(re[j], im[j]);
  return RadialFunction(rgrid, std::move(out));
}

cplx inner_product(const RadialFunction& f, const RadialFunction& g, const Geometry& geom) {
  if (!(f.grid() == g.grid())) fail(ErrorKind::InvalidParameter, "inner product needs a common grid");
  const auto& r = f.grid().nodes();
  const auto& w = f.grid().weights();
  cplx sum = 0.0;
  for (std::size_t j = 0; j < r.size(); ++j)
    sum += w[j] * radial_weight(r[j], geom) * f.samples()[j] * std::conj(g.samples()[j]);
  return sum;
}

cplx spectral_inner_product(const SpectralFunction& F, const SpectralFunction& G, const Geometry& geom) {
  if (!(F.grid() == G.grid())) fail(ErrorKind::InvalidParameter, "inner product needs a common grid");
  const auto& l = F.grid().nodes();
  const auto& w = F.grid().weights();
  cplx sum = 0.0;
  for (std::size_t i = 0; i < l.size(); ++i)
    sum += w[i] * plancherel_density(l[i], geom) * F.samples()[i] * std::conj(G.samples()[i]);
  return sum;
}

double plancherel_defect(const RadialFunction& f, const SpectralGridPtr& sgrid, const Geometry& geom) {
  double spatial = std::pow(lp_norm(f, 2.0, geom), 2.0);
  if (!(spatial > 0.0)) fail(ErrorKind::UndefinedDefect, "Plancherel defect of the zero function");
  SpectralFunction F = spherical_transform(f, sgrid, geom);
  double spectral = std::pow(spectral_norm(F, 2.0, geom), 2.0);
  return std::fabs(spatial - spectral) / spatial;
}

double plancherel_defect(const RadialFunction& f, const Geometry& geom) {
  return plancherel_defect(f, spectral_grid_for(f.grid()), geom);
}

}  // namespace hyperharm
