#include "gwf/catalog.hpp"

#include "gwf/hermite.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gwf {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTaperWidths = 7.5;

// C_c^infty profile on s = |x| / radius < 1: a Gaussian of width
// radius / 7.5 times the standard bump exp(-1 / (1 - s^2)). Where the bump
// factor bends to zero the Gaussian is below e^{-28}, so the Fourier
// transform follows the Gaussian down to the detector floor.
double tapered_bump(double s) {
  if (s >= 1.0) return 0.0;
  const double g = kTaperWidths * s;
  return std::exp(-0.5 * g * g - 1.0 / (1.0 - s * s));
}

DirectionSet frequency_poles_1d() { return {{0.0, 1.0}, {0.0, -1.0}}; }

double param(const CatalogParams& p, const std::string& key) { return p.at(key); }

void require_positive(const CatalogParams& p, const std::string& key) {
  if (!(param(p, key) > 0.0) || !std::isfinite(param(p, key))) {
    throw std::invalid_argument("catalog parameter '" + key + "' must be positive");
  }
}

void require_inside_guard(const Grid& g, double extent, const std::string& name) {
  if (extent > g.half_width / 2.0) {
    throw std::invalid_argument(name + ": support extends beyond [-L/4, L/4]; enlarge the grid");
  }
}

template <class F>
std::vector<cplx> sample(const Grid& g, F&& f) {
  std::vector<cplx> out(g.size());
  if (g.dim == 1) {
    for (std::size_t j = 0; j < g.n; ++j) out[j] = f(g.coord(j), 0.0);
  } else {
    for (std::size_t j1 = 0; j1 < g.n; ++j1) {
      for (std::size_t j2 = 0; j2 < g.n; ++j2) out[j1 * g.n + j2] = f(g.coord(j1), g.coord(j2));
    }
  }
  return out;
}

std::vector<cplx> centered_spike(const Grid& g) {
  std::vector<cplx> out(g.size(), 0.0);
  const std::size_t c = g.center();
  const std::size_t idx = g.dim == 1 ? c : c * g.n + c;
  out[idx] = 1.0 / g.cell_volume();
  return out;
}

}  // namespace

bool GroundTruth::compactly_supported() const { return std::isfinite(support_radius); }

const std::vector<CatalogInfo>& catalog() {
  static const std::vector<CatalogInfo> entries = {
      {"dirac", {}, {1, 2}, "unit point mass at the origin"},
      {"dirac_derivative", {{"k", 1}}, {1}, "k-th derivative of the point mass (centered differences)"},
      {"gaussian", {{"sigma", 1}}, {1, 2}, "L2-normalized Gaussian of width sigma"},
      {"hermite", {{"order", 3}}, {1}, "L2-normalized Hermite function h_order"},
      {"box", {{"a", 1}}, {1}, "indicator of [-a, a]"},
      {"chirp", {{"A", 1}}, {1}, "exp(i A x^2 / 2), not compactly supported"},
      {"line_delta_2d", {{"radius", 4.5}}, {2}, "delta(x1) times the tapered bump of the given radius in x2"},
      {"box2d", {{"a", 1}}, {2}, "indicator of [-a, a]^2"},
      {"bump", {{"radius", 4.5}}, {1, 2}, "tapered bump: Gaussian of width radius/7.5 times exp(-1 / (1 - |x/radius|^2))"},
  };
  return entries;
}

const CatalogInfo& catalog_info(const std::string& name) {
  for (const auto& info : catalog()) {
    if (info.name == name) return info;
  }
  throw std::invalid_argument("unknown catalog entry '" + name + "'");
}

CatalogEntry catalog_entry(const std::string& name, const CatalogParams& params, const Grid& grid) {
  validate(grid);
  const CatalogInfo& info = catalog_info(name);
  if (std::find(info.dims.begin(), info.dims.end(), grid.dim) == info.dims.end()) {
    throw std::invalid_argument(name + " is not available in dimension " + std::to_string(grid.dim));
  }
  CatalogParams p = info.defaults;
  for (const auto& [key, value] : params) {
    if (!p.contains(key)) throw std::invalid_argument(name + ": unknown parameter '" + key + "'");
    p[key] = value;
  }

  CatalogEntry entry;
  entry.name = name;
  entry.params = p;
  entry.dist.grid = grid;
  entry.dist.label = name;
  GroundTruth& gt = entry.truth;
  const int d = grid.dim;
  const double h = grid.spacing();

  if (name == "dirac") {
    // delta^ = 1 does not decay in any direction, so Sigma = S^{d-1}.
    entry.dist.samples = centered_spike(grid);
    entry.dist.kind = SampleKind::singular_spike;
    gt.sigma_dirs = d == 1 ? DirectionSet{{1.0}, {-1.0}} : circle_directions(kCircleGenerators);
    gt.gabor_wf_dirs = d == 1 ? frequency_poles_1d() : embed_frequency(gt.sigma_dirs);
    gt.support_radius = 0.0;
  } else if (name == "dirac_derivative") {
    const double k = param(p, "k");
    if (k < 1 || k > 4 || k != std::floor(k)) {
      throw std::invalid_argument("dirac_derivative: k must be an integer in 1..4");
    }
    // Repeated centered differences D u_j = (u_{j+1} - u_{j-1}) / (2h) keep the
    // support at k grid cells; (iXi)^k delta^ grows, so Sigma = {+-1}.
    auto samples = centered_spike(grid);
    for (int step = 0; step < static_cast<int>(k); ++step) {
      std::vector<cplx> next(samples.size(), 0.0);
      for (std::size_t j = 1; j + 1 < grid.n; ++j) next[j] = (samples[j + 1] - samples[j - 1]) / (2.0 * h);
      samples = std::move(next);
    }
    entry.dist.samples = std::move(samples);
    entry.dist.kind = SampleKind::singular_spike;
    gt.sigma_dirs = {{1.0}, {-1.0}};
    gt.gabor_wf_dirs = frequency_poles_1d();
    gt.support_radius = k * h;
  } else if (name == "gaussian") {
    require_positive(p, "sigma");
    const double s = param(p, "sigma");
    const double c = std::pow(kPi * s * s, -0.25 * d);
    entry.dist.samples = sample(grid, [&](double x1, double x2) {
      return cplx(c * std::exp(-(x1 * x1 + x2 * x2) / (2.0 * s * s)));
    });
    gt.support_radius = kInf;
    gt.is_schwartz = true;
  } else if (name == "hermite") {
    const double order = param(p, "order");
    if (order < 0 || order != std::floor(order)) throw std::invalid_argument("hermite: order must be a non-negative integer");
    const auto n = static_cast<unsigned>(order);
    entry.dist.samples = sample(grid, [&](double x, double) { return cplx(hermite_function(n, x)); });
    gt.support_radius = kInf;
    gt.is_schwartz = true;
  } else if (name == "box") {
    require_positive(p, "a");
    const double a = param(p, "a");
    require_inside_guard(grid, a, name);
    // box^ = 2 sin(a xi) / xi decays like |xi|^-1 in both directions.
    entry.dist.samples = sample(grid, [&](double x, double) { return cplx(std::abs(x) <= a ? 1.0 : 0.0); });
    gt.sigma_dirs = {{1.0}, {-1.0}};
    gt.gabor_wf_dirs = frequency_poles_1d();
    gt.support_radius = a;
  } else if (name == "chirp") {
    const double A = param(p, "A");
    if (A == 0.0 || !std::isfinite(A)) throw std::invalid_argument("chirp: A must be nonzero");
    // V of a Gaussian-windowed chirp is constant along xi = A x and Gaussian
    // across it, so WF_G is the line through (1, A).
    entry.dist.samples = sample(grid, [&](double x, double) { return std::polar(1.0, 0.5 * A * x * x); });
    const double s = std::sqrt(1.0 + A * A);
    gt.gabor_wf_dirs = {{1.0 / s, A / s}, {-1.0 / s, -A / s}};
    gt.sigma_defined = false;
    gt.support_radius = kInf;
  } else if (name == "line_delta_2d") {
    require_positive(p, "radius");
    const double radius = param(p, "radius");
    require_inside_guard(grid, radius, name);
    // u^(xi) = phi^(xi2) is constant in xi1 and rapidly decreasing in xi2.
    const std::size_t c = grid.center();
    std::vector<cplx> samples(grid.size(), 0.0);
    for (std::size_t j2 = 0; j2 < grid.n; ++j2) {
      samples[c * grid.n + j2] = tapered_bump(std::abs(grid.coord(j2)) / radius) / h;
    }
    entry.dist.samples = std::move(samples);
    entry.dist.kind = SampleKind::singular_spike;
    gt.sigma_dirs = {{1.0, 0.0}, {-1.0, 0.0}};
    gt.gabor_wf_dirs = embed_frequency(gt.sigma_dirs);
    gt.support_radius = radius;
  } else if (name == "box2d") {
    require_positive(p, "a");
    const double a = param(p, "a");
    require_inside_guard(grid, a, name);
    // Edges contribute the axis directions; the corners contribute every
    // direction (box^ ~ |xi|^-2 off the axes), so Sigma = S^1.
    entry.dist.samples = sample(grid, [&](double x1, double x2) {
      return cplx(std::abs(x1) <= a && std::abs(x2) <= a ? 1.0 : 0.0);
    });
    gt.sigma_dirs = circle_directions(kCircleGenerators);
    gt.gabor_wf_dirs = embed_frequency(gt.sigma_dirs);
    gt.support_radius = a * std::sqrt(2.0);
  } else if (name == "bump") {
    require_positive(p, "radius");
    const double r = param(p, "radius");
    require_inside_guard(grid, r, name);
    entry.dist.samples = sample(grid, [&](double x1, double x2) {
      return cplx(tapered_bump(std::sqrt(x1 * x1 + x2 * x2) / r));
    });
    gt.support_radius = r;
    gt.is_schwartz = true;
  }
  return entry;
}

}  // namespace gwf
