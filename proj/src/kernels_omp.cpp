#include "gwf/kernels.hpp"

#include "gwf/fourier.hpp"
#include "kernel_detail.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gwf::kernels::omp {

namespace {

// Fixed partition for reductions whose result must not depend on the
// number of threads: blocks are summed internally in order and then
// combined in block order.
constexpr std::size_t kReductionBlocks = 16;

std::vector<double> window_on_grid(const Grid& g, const Window& w, const double* center) {
  if (w.compact()) return w.sampled(g, std::span<const double>(center, g.dim));
  if (g.dim == 1) return detail::gaussian_row(g, w.width(), center[0]);
  const auto a = detail::gaussian_row(g, w.width(), center[0]);
  const auto b = detail::gaussian_row(g, w.width(), center[1]);
  std::vector<double> out(g.size());
  for (std::size_t j1 = 0; j1 < g.n; ++j1) {
    for (std::size_t j2 = 0; j2 < g.n; ++j2) out[j1 * g.n + j2] = a[j1] * b[j2];
  }
  return out;
}

}  // namespace

std::vector<cplx> stft_points(const SampledDistribution& u, const Window& w,
                              std::span<const PhasePoint> points) {
  std::vector<cplx> out(points.size());
  const auto count = static_cast<std::ptrdiff_t>(points.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = detail::stft_point(u, w, points[static_cast<std::size_t>(i)]);
  }
  return out;
}

std::vector<double> binned_modulus_max(const SampledDistribution& u, const Window& w,
                                       const PhaseLattice& lattice, const PhaseBinner& bin,
                                       std::size_t n_bins) {
  const Grid& g = u.grid;
  const int d = g.dim;
  const double cell = g.cell_volume();
  const auto n_pos = static_cast<std::ptrdiff_t>(lattice.positions.size() / static_cast<std::size_t>(d));
  std::vector<double> best(n_bins, -1.0);

#pragma omp parallel
  {
    // max is exact, so merging per-thread maxima is order independent.
    std::vector<double> local(n_bins, -1.0);
    std::vector<cplx> buffer(g.size());
#pragma omp for schedule(dynamic, 2)
    for (std::ptrdiff_t p = 0; p < n_pos; ++p) {
      const double* x = lattice.positions.data() + p * d;
      const auto psi = window_on_grid(g, w, x);
      for (std::size_t j = 0; j < g.size(); ++j) buffer[j] = u.samples[j] * psi[j];
      gwf::detail::centered_dft(d, g.n, buffer, -1);
      for (std::size_t f = 0; f < lattice.frequency_indices.size(); ++f) {
        const std::ptrdiff_t b = bin(static_cast<std::size_t>(p), f);
        if (b < 0) continue;
        const double v = std::abs(buffer[lattice.frequency_indices[f]]) * cell;
        auto& slot = local[static_cast<std::size_t>(b)];
        slot = std::max(slot, v);
      }
    }
#pragma omp critical
    for (std::size_t b = 0; b < n_bins; ++b) best[b] = std::max(best[b], local[b]);
  }
  return best;
}

std::vector<cplx> dft_on_grid(const SampledDistribution& u, const Grid& target) {
  const Grid& g = u.grid;
  const std::size_t n = g.n;
  const std::size_t m = target.n;
  const double cell = g.cell_volume();
  // phases(k, j) = exp(-i t_k x_j)
  std::vector<std::vector<cplx>> phases(m);
  const auto mm = static_cast<std::ptrdiff_t>(m);
#pragma omp parallel for
  for (std::ptrdiff_t k = 0; k < mm; ++k) {
    phases[static_cast<std::size_t>(k)] = detail::phase_row(g, target.coord(static_cast<std::size_t>(k)));
  }

  std::vector<cplx> out(target.size(), 0.0);
  if (g.dim == 1) {
#pragma omp parallel for
    for (std::ptrdiff_t k = 0; k < mm; ++k) {
      const auto& e = phases[static_cast<std::size_t>(k)];
      cplx acc = 0.0;
      for (std::size_t j = 0; j < n; ++j) acc += u.samples[j] * e[j];
      out[static_cast<std::size_t>(k)] = acc * cell;
    }
    return out;
  }

  // Separable: partial(j1, k2) = sum_j2 u(j1, j2) e(k2, j2), then over j1.
  std::vector<cplx> partial(n * m);
  const auto nn = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for
  for (std::ptrdiff_t j1 = 0; j1 < nn; ++j1) {
    const std::size_t r = static_cast<std::size_t>(j1);
    for (std::size_t k2 = 0; k2 < m; ++k2) {
      cplx acc = 0.0;
      for (std::size_t j2 = 0; j2 < n; ++j2) acc += u.samples[r * n + j2] * phases[k2][j2];
      partial[r * m + k2] = acc;
    }
  }
#pragma omp parallel for
  for (std::ptrdiff_t k1 = 0; k1 < mm; ++k1) {
    const std::size_t r = static_cast<std::size_t>(k1);
    for (std::size_t k2 = 0; k2 < m; ++k2) {
      cplx acc = 0.0;
      for (std::size_t j1 = 0; j1 < n; ++j1) acc += partial[j1 * m + k2] * phases[r][j1];
      out[r * m + k2] = acc * cell;
    }
  }
  return out;
}

std::vector<cplx> dft_points(const SampledDistribution& u, std::span<const double> frequencies) {
  const auto d = static_cast<std::size_t>(u.grid.dim);
  std::vector<cplx> out(frequencies.size() / d);
  const auto count = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    out[k] = detail::dft_point(u, frequencies.data() + k * d);
  }
  return out;
}

std::vector<cplx> moyal_sum(const SampledDistribution& u, const Window& w,
                            std::span<const double> positions, double position_cell) {
  const Grid& g = u.grid;
  const int d = g.dim;
  const Grid dual = g.dual();
  const double two_pi_d = d == 1 ? 2.0 * kPi : 4.0 * kPi * kPi;
  const double weight = g.cell_volume() * dual.cell_volume() * position_cell / two_pi_d;
  const std::size_t n_pos = positions.size() / static_cast<std::size_t>(d);
  const std::size_t per_block = (n_pos + kReductionBlocks - 1) / kReductionBlocks;

  std::vector<std::vector<cplx>> blocks(kReductionBlocks, std::vector<cplx>(g.size(), 0.0));
  const auto n_blocks = static_cast<std::ptrdiff_t>(kReductionBlocks);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t b = 0; b < n_blocks; ++b) {
    auto& acc = blocks[static_cast<std::size_t>(b)];
    std::vector<cplx> buffer(g.size());
    const std::size_t begin = static_cast<std::size_t>(b) * per_block;
    const std::size_t end = std::min(n_pos, begin + per_block);
    for (std::size_t p = begin; p < end; ++p) {
      const double* x = positions.data() + p * d;
      const auto psi = window_on_grid(g, w, x);
      for (std::size_t j = 0; j < g.size(); ++j) buffer[j] = u.samples[j] * psi[j];
      gwf::detail::centered_dft(d, g.n, buffer, -1);
      gwf::detail::centered_dft(d, g.n, buffer, +1);
      for (std::size_t j = 0; j < g.size(); ++j) acc[j] += buffer[j] * psi[j] * weight;
    }
  }
  std::vector<cplx> out(g.size(), 0.0);
  for (const auto& block : blocks) {
    for (std::size_t j = 0; j < g.size(); ++j) out[j] += block[j];
  }
  return out;
}

Eigen::VectorXcd apply_rows(const Eigen::MatrixXd& table, const Eigen::VectorXcd& x) {
  if (table.cols() != x.size()) throw std::invalid_argument("apply_rows: size mismatch");
  Eigen::VectorXcd out(table.rows());
  const Eigen::Index rows = table.rows();
#pragma omp parallel for
  for (Eigen::Index r = 0; r < rows; ++r) {
    cplx acc = 0.0;
    for (Eigen::Index j = 0; j < table.cols(); ++j) acc += table(r, j) * x(j);
    out(r) = acc;
  }
  return out;
}

Eigen::VectorXcd apply_columns(const Eigen::MatrixXd& table, const Eigen::VectorXcd& c) {
  if (table.rows() != c.size()) throw std::invalid_argument("apply_columns: size mismatch");
  Eigen::VectorXcd out(table.cols());
  const Eigen::Index cols = table.cols();
#pragma omp parallel for
  for (Eigen::Index j = 0; j < cols; ++j) {
    cplx acc = 0.0;
    for (Eigen::Index r = 0; r < table.rows(); ++r) acc += table(r, j) * c(r);
    out(j) = acc;
  }
  return out;
}

}  // namespace gwf::kernels::omp
