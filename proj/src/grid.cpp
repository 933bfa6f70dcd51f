#include "gwf/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace gwf {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

void validate(const Grid& g) {
  if (g.dim != 1 && g.dim != 2) {
    throw std::invalid_argument("grid dimension must be 1 or 2");
  }
  if (g.n < 16 || !is_power_of_two(g.n)) {
    throw std::invalid_argument("grid size must be a power of two >= 16, got " +
                                std::to_string(g.n));
  }
  if (!(g.half_width > 0.0) || !std::isfinite(g.half_width)) {
    throw std::invalid_argument("grid half width must be positive and finite");
  }
}

Grid make_grid(int dim, std::size_t n, double half_width) {
  Grid g{dim, n, half_width};
  validate(g);
  return g;
}

void validate(const SampledDistribution& u) {
  validate(u.grid);
  if (u.samples.size() != u.grid.size()) {
    throw std::invalid_argument("sample count does not match grid size");
  }
}

double SampledDistribution::l2_norm() const {
  double acc = 0.0;
  for (const auto& v : samples) acc += std::norm(v);
  return std::sqrt(acc * grid.cell_volume());
}

double relative_l2_error(const SampledDistribution& a, const SampledDistribution& b) {
  if (!(a.grid == b.grid)) throw std::invalid_argument("grids differ");
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    num += std::norm(a.samples[i] - b.samples[i]);
    den += std::norm(b.samples[i]);
  }
  if (den == 0.0) return num == 0.0 ? 0.0 : INFINITY;
  return std::sqrt(num / den);
}

SampledDistribution reflect(const SampledDistribution& u) {
  validate(u);
  SampledDistribution out = u;
  const std::size_t n = u.grid.n;
  auto mirror = [n](std::size_t j) { return (n - j) % n; };
  if (u.grid.dim == 1) {
    for (std::size_t j = 0; j < n; ++j) out.samples[mirror(j)] = u.samples[j];
  } else {
    for (std::size_t j1 = 0; j1 < n; ++j1) {
      for (std::size_t j2 = 0; j2 < n; ++j2) {
        out.samples[mirror(j1) * n + mirror(j2)] = u.samples[j1 * n + j2];
      }
    }
  }
  out.label = u.label.empty() ? "reflected" : u.label + " reflected";
  return out;
}

}  // namespace gwf
